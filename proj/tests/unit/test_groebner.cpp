#include <algorithm>

#include "doctest.h"
#include "test_support.hpp"
#include "tropnewton/error.hpp"
#include "tropnewton/groebner.hpp"

using namespace tropnewton;
using namespace tropnewton::testing;

namespace {

std::vector<std::string> strings(const std::vector<MPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::map<size_t, Scalar> grass_substitution(std::initializer_list<int> exps) {
  std::map<size_t, Scalar> m;
  size_t v = 3;
  for (int e : exps) m[v++] = tp(e);
  return m;
}

MPoly random_poly(std::mt19937_64& rng, const RingPtr& R, int nterms, int maxdeg) {
  std::uniform_int_distribution<int> deg(0, maxdeg), c(-5, 5);
  MPoly f(R);
  for (int i = 0; i < nterms; ++i) {
    Exponent e(R->nvars());
    for (auto& x : e) x = deg(rng);
    f.add_term(e, Scalar(c(rng)));
  }
  return f;
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("small bases") {
    auto R = ring("x y");
    GroebnerBasis G = buchberger(R, polys(R, {"x - 1", "y - x"}), MonomialOrder::lex());
    CHECK(strings(G.polys) == std::vector<std::string>{"x - 1", "y - 1"});
    CHECK(buchberger(R, polys(R, {"1"}), MonomialOrder::lex()).is_unit());
    CHECK(buchberger(R, polys(R, {"x*y - 1", "x"}), MonomialOrder::degrevlex()).is_unit());
    CHECK(buchberger(R, {}, MonomialOrder::degrevlex()).is_zero_ideal());
  }

  TEST_CASE("monomial orders") {
    auto lex = MonomialOrder::lex();
    auto drl = MonomialOrder::degrevlex();
    CHECK(lex.greater({1, 0, 0}, {0, 5, 5}));
    CHECK(drl.greater({0, 5, 5}, {1, 0, 0}));
    CHECK(drl.greater({1, 0, 1}, {0, 2, 0}) == false);  // x*z < y^2 in degrevlex
    auto w = MonomialOrder::weighted({0, 0, 1});
    CHECK(w.greater({1, 0, 0}, {0, 0, 1}));  // smaller weight ranks higher
    auto b = MonomialOrder::block(1);
    CHECK(b.greater({1, 0, 0}, {0, 3, 3}));
  }

  TEST_CASE("plucker substitution with equal exponents leaves the torus") {
    auto R = grass25_ring();
    std::vector<MPoly> sub;
    for (const auto& g : grass25(R)) sub.push_back(substitute(g, grass_substitution({1, 1, 1, 1, 1, 1, 1})));
    auto S = sub.front().ring();
    GroebnerBasis G = buchberger(S, sub, MonomialOrder::degrevlex());
    CHECK(strings(G.polys) == std::vector<std::string>{"x0", "x1", "x2"});
    CHECK_FALSE(zero_dim_torus_check(S, sub));
  }

  TEST_CASE("plucker substitution with distinct exponents stays in the torus") {
    auto R = grass25_ring();
    std::vector<MPoly> sub;
    for (const auto& g : grass25(R)) sub.push_back(substitute(g, grass_substitution({1, 5, 3, 7, 8, 2, 9})));
    CHECK(zero_dim_torus_check(sub.front().ring(), sub));
  }

  TEST_CASE("dimension and independent sets") {
    auto R = grass25_ring();
    auto lexG = buchberger(R, grass25(R), MonomialOrder::lex());
    auto info = dimension_and_independent_set(lexG);
    CHECK(info.dimension == 7);
    CHECK(info.independent == std::vector<size_t>{3, 4, 5, 6, 7, 8, 9});
    CHECK(dimension_and_independent_set(buchberger(R, grass25(R), MonomialOrder::degrevlex())).dimension == 7);

    auto S = ring("x1 x2 x3");
    auto zero = dimension_and_independent_set(buchberger(S, polys(S, {"x1", "x2", "x3"}), MonomialOrder::degrevlex()));
    CHECK(zero.dimension == 0);
    CHECK(zero.independent.empty());
    auto T = ring("x1 x2");
    auto hyp = dimension_and_independent_set(buchberger(T, polys(T, {"x1*x2 - 1"}), MonomialOrder::degrevlex()));
    CHECK(hyp.dimension == 1);
    CHECK(hyp.independent.size() == 1);
    CHECK(dimension_and_independent_set(buchberger(T, polys(T, {"1"}), MonomialOrder::degrevlex())).dimension == -1);
    CHECK(dimension_and_independent_set(buchberger(T, {}, MonomialOrder::degrevlex())).dimension == 2);
  }

  TEST_CASE("homogeneity spaces") {
    auto L = ring("x1 x2 x3");
    auto line = homogeneity_space(buchberger(L, polys(L, {"x1 + x2 + x3"}), MonomialOrder::degrevlex()));
    REQUIRE(line.dimension() == 1);
    CHECK(line.contains({1, 1, 1}));

    auto Q = ring("x0 x1 x2 x3 x4 x5");
    auto quad = homogeneity_space(buchberger(Q, polys(Q, {"x0*x5 - x1*x4 + x2*x3"}), MonomialOrder::degrevlex()));
    CHECK(quad.dimension() == 4);
    for (const auto& v : quad.basis) {
      CHECK(v[0] + v[5] == v[1] + v[4]);
      CHECK(v[1] + v[4] == v[2] + v[3]);
    }
    CHECK(homogeneity_space(buchberger(L, {}, MonomialOrder::degrevlex())).dimension() == 3);
    CHECK_THROWS_AS(homogeneity_space(buchberger(L, polys(L, {"t*x1 + x2"}), MonomialOrder::degrevlex())), Error);
  }

  TEST_CASE("monomial containment") {
    auto R = ring("x1 x2");
    CHECK(contains_monomial(R, polys(R, {"x1"})));
    CHECK_FALSE(contains_monomial(R, polys(R, {"x1 + x2"})));
    CHECK_FALSE(contains_monomial(R, polys(R, {"x1 - 1", "x2 - 1"})));
    CHECK(contains_monomial(R, polys(R, {"x1^2 + x1*x2", "x2^2 + x1*x2", "x1^2 - x2^2 + x1*x2"})));
    CHECK_FALSE(contains_monomial(R, polys(R, {"x1*x2 - x1"})));
    CHECK(contains_monomial(R, polys(R, {"x1*x2 - x1", "x2 - 2"})));
    CHECK(contains_monomial(R, polys(R, {"x1*x2 - x1", "x2^2 - 2*x2"})));
  }

  TEST_CASE("initial ideals and tropical membership") {
    auto L = ring("x1 x2 x3");
    auto gens = polys(L, {"x1 + x2 + x3"});
    CHECK(strings(initial_ideal(L, gens, {0, 0, 1})) == std::vector<std::string>{"x1 + x2"});
    CHECK(strings(initial_ideal(L, gens, {0, 1, 1})) == std::vector<std::string>{"x1"});
    CHECK(strings(initial_ideal(L, gens, {2, 2, 2})) == strings(gens));
    CHECK(is_in_tropical_variety(L, gens, {0, 0, 1}));
    CHECK_FALSE(is_in_tropical_variety(L, gens, {0, 1, 1}));
    CHECK_FALSE(is_in_tropical_variety(L, gens, {0, 1, 2}));
    CHECK_THROWS_AS(initial_ideal(L, polys(L, {"x1 + x2 + 1"}), {0, 0, 0}), Error);
    CHECK_THROWS_AS(initial_ideal(L, polys(L, {"x1 + t*x2"}), {0, 0, 0}), Error);

    auto R = grass25_ring();
    CHECK(is_in_tropical_variety(R, grass25(R), {0, -6, -2, 1, 5, 3, 7, 8, 2, 9}));
  }

  TEST_CASE("prevariety filter") {
    auto L = ring("x1 x2 x3");
    auto gens = polys(L, {"x1 + x2 + x3"});
    CHECK(in_prevariety(gens, {0, 0, 1}));
    CHECK_FALSE(in_prevariety(gens, {0, 1, 2}));
    auto U = ring("x1");
    CHECK(in_prevariety(polys(U, {"t*x1 + 1"}), {-1}));
  }

  TEST_CASE("torus check on a point") {
    auto U = ring("x");
    CHECK(zero_dim_torus_check(U, polys(U, {"x - 1"})));
    CHECK_FALSE(zero_dim_torus_check(U, polys(U, {"x^2 - x"})));
  }

  TEST_CASE("saturation") {
    auto R = ring("x y");
    auto S = saturation(R, polys(R, {"x*y - x", "x^2"}), P(R, "x"));
    CHECK(S.is_unit());
    auto S2 = saturation(R, polys(R, {"x*y - x", "y^2 - 1"}), P(R, "x"));
    CHECK(strings(S2.polys) == std::vector<std::string>{"y - 1"});
  }

  TEST_CASE("basis conversion by linear algebra matches lex buchberger") {
    auto R = ring("x y z");
    std::vector<std::vector<MPoly>> systems{
        polys(R, {"x^2 + y^2 + z^2 - 3", "x*y - z", "y - t*z + 1"}),
        polys(R, {"x*y - 1", "y*z - t", "x + y + z - 2"}),
        polys(R, {"x^2 - 2", "y^2 - x", "z - x*y"}),
    };
    for (const auto& gens : systems) {
      GroebnerBasis direct = buchberger(R, gens, MonomialOrder::lex());
      GroebnerBasis converted = fglm(buchberger(R, gens, MonomialOrder::degrevlex()), MonomialOrder::lex());
      CHECK(converted.polys == direct.polys);
    }
    CHECK(fglm(buchberger(R, polys(R, {"x - 1", "x - 2"}), MonomialOrder::degrevlex()), MonomialOrder::lex())
              .is_unit());
    CHECK_THROWS_AS(fglm(buchberger(R, polys(R, {"x - y"}), MonomialOrder::degrevlex()), MonomialOrder::lex()),
                    Error);
  }

  TEST_CASE("zero-dimensional quotients agree with saturation on radical ideals") {
    auto R = ring("x y");
    // Points (1, 2), (-1, 2), (0, t), (2, -1).
    auto gens = polys(R, {"x*(x^2 - 1)*(x - 2)", "(y - 2)*(x - 2)*x", "(y + 1)*(x^2 - 1)*x", "(y - t)*(x - 2)*(x^2 - 1)"});
    GroebnerBasis G = buchberger(R, gens, MonomialOrder::degrevlex());
    for (const char* h : {"x", "x - 1", "y - 2", "x*y + 1"}) {
      GroebnerBasis quo = ideal_quotient(G, P(R, h), MonomialOrder::degrevlex());
      GroebnerBasis sat = saturation(R, gens, P(R, h));
      CHECK(quo.polys == sat.polys);
    }
    CHECK(ideal_quotient(G, P(R, "x*(x - 2)*(x^2 - 1)"), MonomialOrder::lex()).is_unit());
  }

  TEST_CASE("ideal members reduce to zero and bases are idempotent") {
    std::mt19937_64 rng(41);
    auto R = ring("a b c");
    for (int i = 0; i < 25; ++i) {
      std::vector<MPoly> gens{random_poly(rng, R, 3, 2), random_poly(rng, R, 3, 2)};
      for (auto ord : {MonomialOrder::degrevlex(), MonomialOrder::lex()}) {
        GroebnerBasis G = buchberger(R, gens, ord);
        MPoly combo = gens[0] * random_poly(rng, R, 2, 1) + gens[1] * random_poly(rng, R, 2, 1);
        CHECK(normal_form(combo, G).is_zero());
        GroebnerBasis again = buchberger(R, G.polys, ord);
        CHECK(strings(again.polys) == strings(G.polys));
      }
    }
  }

  TEST_CASE("homogeneity directions fix every basis element") {
    auto Q = ring("x0 x1 x2 x3 x4 x5");
    GroebnerBasis G = buchberger(Q, polys(Q, {"x0*x5 - x1*x4 + x2*x3"}), MonomialOrder::degrevlex());
    for (const auto& w : homogeneity_space(G).basis) {
      for (const auto& g : G.polys) {
        ResiduePoly in = initial_form(g, w);
        CHECK(in.terms.size() == g.nterms());
      }
    }
  }

  TEST_CASE("tropical membership implies the prevariety condition") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> d(-2, 2);
    auto Q = ring("x0 x1 x2 x3 x4 x5");
    auto gens = polys(Q, {"x0*x5 - x1*x4 + x2*x3"});
    int members = 0;
    for (int i = 0; i < 60; ++i) {
      WeightVec w(6);
      for (auto& x : w) x = d(rng);
      if (is_in_tropical_variety(Q, gens, w)) {
        ++members;
        CHECK(in_prevariety(gens, w));
      }
    }
    CHECK(members > 0);
  }
}
