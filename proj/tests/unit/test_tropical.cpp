#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "tropnewton/error.hpp"
#include "tropnewton/tropical.hpp"

using namespace tropnewton;
using namespace tropnewton::testing;

namespace {

WeightVec wv(std::initializer_list<const char*> xs) {
  WeightVec out;
  for (const char* x : xs) out.push_back(q(x));
  return out;
}

std::set<WeightVec> point_set(const std::vector<TracedPoint>& pts) {
  std::set<WeightVec> out;
  for (const auto& p : pts) out.insert(p.point);
  return out;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

std::set<std::vector<Int>> ray_classes(const LinearSubspace& L, const std::vector<WeightVec>& vs) {
  std::set<std::vector<Int>> out;
  for (const auto& v : vs) out.insert(*canonical_ray(L, v));
  return out;
}

WeightVec unit_vector(size_t n, size_t i) {
  WeightVec e(n, Rat(0));
  e[i] = 1;
  return e;
}

// Classes of the lattice points of [-r, r]^n where every generator attains
// its minimum twice, excluding the lineality space.
std::set<std::vector<Int>> brute_force_classes(const std::vector<MPoly>& gens, const LinearSubspace& L, int r) {
  const size_t n = gens.front().nvars();
  std::set<std::vector<Int>> out;
  std::vector<int> x(n, -r);
  for (;;) {
    WeightVec w(x.begin(), x.end());
    if (in_prevariety(gens, w)) {
      if (auto c = canonical_ray(L, w)) out.insert(*c);
    }
    size_t k = 0;
    while (k < n && x[k] == r) x[k++] = -r;
    if (k == n) break;
    ++x[k];
  }
  return out;
}

struct Planted {
  TriangularSet F;
  std::set<WeightVec> valuations;
};

// f_i = prod_j (x_i - c_ij t^a_ij x_{i-1}^m_ij); root valuations follow
// v_i = a_ij + m_ij v_{i-1}. Resampled until the valuations at each level
// are distinct along every branch.
Planted planted_system(std::mt19937_64& rng, size_t n) {
  std::uniform_int_distribution<int> deg(1, 3), a(-4, 4), m(0, 1);
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  for (;;) {
    RingPtr R = make_ring(names, Field::puiseux());
    std::vector<std::vector<std::pair<int, int>>> factors(n);
    std::vector<MPoly> F;
    for (size_t i = 0; i < n; ++i) {
      MPoly f = MPoly::constant(R, 1);
      int d = deg(rng);
      for (int j = 0; j < d; ++j) {
        int aj = a(rng), mj = i == 0 ? 0 : m(rng);
        factors[i].emplace_back(aj, mj);
        Exponent e(n, 0);
        if (i > 0) e[i - 1] = mj;
        f *= MPoly::variable(R, i) - MPoly::monomial(R, e, tp(aj, random_unit(rng, 5)));
      }
      F.push_back(f);
    }
    std::set<WeightVec> vals{{}};
    bool distinct = true;
    for (size_t i = 0; i < n && distinct; ++i) {
      std::set<WeightVec> next;
      for (const auto& v : vals) {
        std::set<Rat> level;
        for (const auto& [aj, mj] : factors[i]) {
          Rat x = Rat(aj) + (i == 0 ? Rat(0) : Rat(mj) * v.back());
          if (!level.insert(x).second) distinct = false;
          auto w = v;
          w.push_back(x);
          next.insert(w);
        }
      }
      vals = std::move(next);
    }
    if (distinct) return {{R, F}, vals};
  }
}

}  // namespace

TEST_SUITE("tropical") {
  TEST_CASE("all four points of the puiseux triangular example") {
    auto R = ring("x1 x2 x3");
    TriangularSet F{R, polys(R, {"t*x1^2 + x1 + 1", "t*x1*x2^2 + x1*x2 + 1", "x1*x2*x3 + 1"})};
    auto pts = zero_dim_variety(F);
    CHECK(point_set(pts) == std::set<WeightVec>{wv({"0", "0", "0"}), wv({"0", "-1", "1"}), wv({"-1", "1", "0"}),
                                                wv({"-1", "-1", "2"})});
    CHECK(zero_dim_point(F).point == wv({"0", "0", "0"}));
    for (const auto& p : pts) {
      CHECK(in_prevariety(F.polys, p.point));
      CHECK(p.trace.size() == 3);
    }
  }

  TEST_CASE("the 3-adic example needs the hensel fallback") {
    auto R = ring("x1 x2 x3", Field::padic(3));
    TriangularSet F{R, polys(R, {"x1^2 + 3*x1 - 1", "x2^2 + 9*x2 - 1", "3*x3^2 + (x1 - x2)*x3 + 1"})};
    auto p = zero_dim_point(F);
    CHECK(p.point == wv({"0", "0", "-1/2"}));
    REQUIRE(p.trace.size() == 3);
    CHECK(p.trace[0].unique);
    CHECK(p.trace[1].unique);
    CHECK_FALSE(p.trace[2].unique);
    CHECK(p.trace[2].fallback_precision == 2);
    CHECK(p.trace[2].polygon.vertices == std::vector<HullVertex>{{0, 0}, {2, 1}});
    auto all = point_set(zero_dim_variety(F));
    CHECK(all == std::set<WeightVec>{wv({"0", "0", "-1"}), wv({"0", "0", "-1/2"}), wv({"0", "0", "0"})});
  }

  TEST_CASE("small univariate systems") {
    auto R = ring("x");
    CHECK(zero_dim_point({R, polys(R, {"x - t^5"})}).point == wv({"5"}));
    CHECK(point_set(zero_dim_variety({R, polys(R, {"x^2 - (t + t^2)*x + t^3"})})) ==
          std::set<WeightVec>{wv({"1"}), wv({"2"})});
    auto S = ring("x y");
    CHECK(kind_of([&] { zero_dim_point({S, polys(S, {"x - 1", "x*y^2 + x*y"})}); }) == ErrorKind::NonTorusVariety);
  }

  TEST_CASE("zero-dimensional ideals are decomposed first") {
    auto R = ring("x y");
    auto Z = zero_dim_ideal(R, polys(R, {"x^2 - t^2", "x*y - 1"}));
    CHECK(point_set(Z.points) == std::set<WeightVec>{wv({"1", "-1"})});
    for (const auto& p : Z.points) CHECK(p.component < Z.components.size());
  }

  TEST_CASE("planted triangular systems are tropical bases") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
      auto P = planted_system(rng, 1 + trial % 3);
      auto pts = zero_dim_variety(P.F);
      CHECK(point_set(pts) == P.valuations);
      for (const auto& p : pts) {
        for (const auto& r : p.trace) CHECK(r.unique);
        CHECK(in_prevariety(P.F.polys, p.point));
      }
    }
  }

  TEST_CASE("starting points on the grassmannian") {
    auto R = grass25_ring();
    auto I = grass25(R);
    StartingPointConfig cfg;
    cfg.substitution = std::vector<Scalar>{tp(1), tp(5), tp(3), tp(7), tp(8), tp(2), tp(9)};
    auto sp = starting_point(R, I, cfg);
    CHECK(sp.witness.independent == std::vector<size_t>{3, 4, 5, 6, 7, 8, 9});
    CHECK(WeightVec(sp.point.begin() + 3, sp.point.end()) == wv({"1", "5", "3", "7", "8", "2", "9"}));
    std::multiset<Rat> dep(sp.point.begin(), sp.point.begin() + 3);
    CHECK(dep == std::multiset<Rat>{Rat(-6), Rat(-2), Rat(0)});
    CHECK(is_in_tropical_variety(R, I, sp.point));
    CHECK(sp.witness.rejected.empty());

    StartingPointConfig bad;
    bad.substitution = std::vector<Scalar>(7, tp(1));
    bad.max_attempts = 1;
    CHECK(kind_of([&] { starting_point(R, I, bad); }) == ErrorKind::ExhaustedAttempts);
    bad.max_attempts = 10;
    bad.seed = 3;
    auto retry = starting_point(R, I, bad);
    CHECK(retry.witness.rejected.size() >= 1);
    CHECK(retry.witness.rejected.front() == std::vector<Scalar>(7, tp(1)));
    CHECK(is_in_tropical_variety(R, I, retry.point));
  }

  TEST_CASE("random starting points are non-trivial and sound") {
    auto R = grass25_ring();
    auto I = grass25(R);
    auto C0 = homogeneity_space(buchberger(R, I, MonomialOrder::degrevlex()));
    for (std::uint64_t seed : {1, 2, 3}) {
      StartingPointConfig cfg;
      cfg.seed = seed;
      auto sp = starting_point(R, I, cfg);
      CHECK_FALSE(C0.contains(sp.point));
      CHECK(in_prevariety(I, sp.point));
      CHECK(is_in_tropical_variety(R, I, sp.point));
      CHECK(starting_point(R, I, cfg).point == sp.point);
    }
  }

  TEST_CASE("starting point of a translated line") {
    auto R = ring("x1 x2");
    StartingPointConfig cfg;
    cfg.weight = wv({"0"});
    cfg.pure_powers = true;
    auto sp = starting_point(R, polys(R, {"x1 - t*x2"}), cfg);
    CHECK(sp.point == wv({"1", "0"}));
    auto S = ring("x y");
    CHECK(kind_of([&] { starting_point(S, polys(S, {"x - y"})); }) == ErrorKind::ProjectionCoversSpace);
  }

  TEST_CASE("links of the tropical line") {
    auto R = ring("x1 x2 x3");
    auto I = polys(R, {"x1 + x2 + x3"});
    auto L = tropical_link(R, I);
    CHECK(L.valency() == 3);
    CHECK(L.lineality.dimension() == 1);
    CHECK(L.base == wv({"1", "1", "1"}));
    std::set<std::vector<Int>> got(L.rays.begin(), L.rays.end());
    CHECK(got == ray_classes(L.lineality, {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)}));
    CHECK(got == brute_force_classes(I, L.lineality, 3));
    for (const auto& r : L.rays) {
      CHECK(primitive_integer_vector(WeightVec(r.begin(), r.end())) == r);
      CHECK(is_in_tropical_variety(R, I, WeightVec(r.begin(), r.end())));
    }

    LinkConfig exact;
    exact.paper_exact = true;
    auto E = tropical_link(R, I, exact);
    CHECK(E.valency() < 3);
    CHECK_FALSE(E.warnings.empty());

    LinkConfig pre;
    pre.precondition = true;
    pre.seed = 5;
    auto P = tropical_link(R, I, pre);
    CHECK(std::set<std::vector<Int>>(P.rays.begin(), P.rays.end()) == got);
    CHECK(!P.unimodular.empty());
  }

  TEST_CASE("link of the plucker quadric") {
    auto R = ring("x0 x1 x2 x3 x4 x5");
    auto I = polys(R, {"x0*x5 - x1*x4 + x2*x3"});
    LinkConfig cfg;
    cfg.jobs = 2;
    auto L = tropical_link(R, I, cfg);
    CHECK(L.valency() == 3);
    CHECK(L.lineality.dimension() == 4);
    std::set<std::vector<Int>> got(L.rays.begin(), L.rays.end());
    CHECK(got == ray_classes(L.lineality, {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)}));
    CHECK(got == brute_force_classes(I, L.lineality, 1));
    LinkConfig serial;
    auto S = tropical_link(R, I, serial);
    CHECK(S.rays == L.rays);
  }

  TEST_CASE("link preconditions") {
    auto R = ring("x1 x2");
    CHECK(kind_of([&] { tropical_link(R, polys(R, {"x1 - x2"})); }) == ErrorKind::NotCombinatoriallyCurve);
    CHECK(kind_of([&] { tropical_link(R, polys(R, {"x1 - t*x2"})); }) == ErrorKind::NonConstantValuation);
  }

  TEST_CASE("verification reports") {
    auto R = ring("x1 x2 x3");
    auto I = polys(R, {"x1 + x2 + x3"});
    auto rep = verify_output(R, I, {wv({"1", "0", "0"}), wv({"0", "1", "2"})});
    REQUIRE(rep.items.size() == 2);
    CHECK(rep.items[0].prevariety);
    CHECK(rep.items[0].tropical == true);
    CHECK_FALSE(rep.items[1].prevariety);
    CHECK_FALSE(rep.passed());
    auto S = ring("x1 x2 x3");
    auto F = polys(S, {"t*x1^2 + x1 + 1", "t*x1*x2^2 + x1*x2 + 1", "x1*x2*x3 + 1"});
    auto ok = verify_output(S, F, {wv({"0", "-1", "1"})});
    CHECK(ok.passed());
    CHECK_FALSE(ok.items[0].tropical.has_value());
  }
}
