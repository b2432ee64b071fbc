#include "tropnewton/tropical.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>

#include "tropnewton/error.hpp"
#include "tropnewton/linalg.hpp"

namespace tropnewton {

namespace {

bool is_root_failure(ErrorKind k) {
  return k == ErrorKind::NoResidueRoot || k == ErrorKind::MultipleResidueRoot ||
         k == ErrorKind::IrrationalResidueRoot || k == ErrorKind::InsufficientPrecision;
}

bool has_constant_coefficients(const std::vector<MPoly>& gens) {
  for (const auto& g : gens) {
    for (const auto& [e, c] : g.terms()) {
      if (!c.is_rational() || g.field().val(c) != ExtRat(0)) return false;
    }
  }
  return true;
}

// Depth-first search over the choices of the zero-dimensional algorithm.
// Root prefixes are computed lazily, only when a level is not unique.
class Explorer {
 public:
  Explorer(const TriangularSet& F, bool exhaustive, long k) : F_(F), exhaustive_(exhaustive), k_(k) {
    if (!is_triangular(F.ring, F.polys)) throw Error(ErrorKind::NotTriangular, "input is not a triangular set");
  }

  std::vector<TracedPoint> run() {
    WeightVec w;
    ChoiceTrace trace;
    visit(0, w, {}, trace);
    return std::move(out_);
  }

 private:
  // Returns true once a point was found in single-point mode.
  bool visit(size_t i, WeightVec& w, const std::vector<Approx>& roots, ChoiceTrace& trace) {
    if (i == F_.polys.size()) {
      out_.push_back({w, trace, 0});
      return !exhaustive_;
    }
    const MPoly& f = F_.polys[i];
    if (i == 0 || guarded(i, [&] { return is_unique_at(f, i, w); })) {
      NewtonPolygon P = guarded(i, [&] { return expected_polygon(f, i, w); });
      return branch(i, P, true, std::nullopt, w, roots, trace);
    }
    for (const auto& prefix : extend(roots, w, i)) {
      NewtonPolygon P =
          guarded(i, [&] { return certified_polygon(coefficients_at(f, i, prefix), F_.ring->field); });
      if (branch(i, P, false, k_, w, prefix, trace)) return true;
    }
    return false;
  }

  bool branch(size_t i, const NewtonPolygon& P, bool unique, std::optional<long> precision, WeightVec& w,
              const std::vector<Approx>& roots, ChoiceTrace& trace) {
    SlopeSet slopes = guarded(i, [&] { return lambda(P); });
    if (!exhaustive_) slopes.resize(1);
    for (const auto& s : slopes) {
      trace.push_back({i, P, s.valuation, unique, precision});
      w.push_back(s.valuation);
      bool done = visit(i + 1, w, roots, trace);
      w.pop_back();
      trace.pop_back();
      if (done) return true;
    }
    return false;
  }

  // All root prefixes of length i with valuations w that extend roots.
  std::vector<std::vector<Approx>> extend(const std::vector<Approx>& roots, const WeightVec& w, size_t i) {
    std::vector<std::vector<Approx>> cur{roots};
    for (size_t j = roots.size(); j < i; ++j) {
      std::vector<std::vector<Approx>> next;
      for (const auto& prefix : cur) {
        auto coeffs = guarded(j, [&] { return coefficients_at(F_.polys[j], j, prefix); });
        auto found = roots_with_valuation(coeffs, w[j], F_.ring->field, k_, exhaustive_);
        if (!exhaustive_ && found.size() > 1) found.resize(1);
        for (auto& r : found) {
          auto p = prefix;
          p.push_back(std::move(r));
          next.push_back(std::move(p));
        }
      }
      cur = std::move(next);
    }
    return cur;
  }

  // Polygon failures at a level mean a root with a zero coordinate.
  template <class Fn>
  auto guarded(size_t i, Fn&& fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroConstantTerm && e.kind() != ErrorKind::DegeneratePolygon) throw;
      throw Error(ErrorKind::NonTorusVariety,
                  "level " + F_.ring->vars[i] + ": " + e.detail() + "; V(F) is not contained in the torus");
    }
  }

  const TriangularSet& F_;
  bool exhaustive_;
  long k_;
  std::vector<TracedPoint> out_;
};

std::vector<TracedPoint> explore(const TriangularSet& F, bool exhaustive, const ZeroDimConfig& cfg) {
  const PrecisionSchedule& s = cfg.schedule;
  if (s.start < 1 || s.cap < s.start) throw Error(ErrorKind::InvalidArgument, "invalid precision schedule");
  for (long k = s.start;; k *= 2) {
    try {
      return Explorer(F, exhaustive, k).run();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InsufficientPrecision || k * 2 > s.cap) throw;
    }
  }
}

void sort_unique(std::vector<TracedPoint>& pts) {
  std::stable_sort(pts.begin(), pts.end(), [](const TracedPoint& a, const TracedPoint& b) { return a.point < b.point; });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const TracedPoint& a, const TracedPoint& b) { return a.point == b.point; }),
            pts.end());
}

// Column-restricted copy of a subspace basis.
linalg::Matrix<Rat> columns(const linalg::Matrix<Rat>& basis, const std::vector<size_t>& cols) {
  linalg::Matrix<Rat> out;
  for (const auto& row : basis) {
    std::vector<Rat> r;
    for (size_t c : cols) r.push_back(row[c]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<MPoly> nonzero_substitution(const std::vector<MPoly>& gens, const std::map<size_t, Scalar>& c) {
  std::vector<MPoly> out;
  for (const auto& g : gens) {
    MPoly h = substitute(g, c);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  return out;
}

// ---- links ----

struct SliceOutcome {
  SliceRecord record;
  std::vector<std::string> warnings;
};

struct LinkSetup {
  RingPtr ring;
  std::vector<MPoly> gens;
  LinearSubspace lineality;
  std::vector<size_t> transversal;
  WeightVec base;
};

LinkSetup prepare_link(const RingPtr& ring, const std::vector<MPoly>& gens, const GroebnerOptions& opts) {
  if (!has_constant_coefficients(gens)) {
    throw Error(ErrorKind::NonConstantValuation, "link input needs rational coefficients of valuation zero");
  }
  GroebnerBasis G = buchberger(ring, gens, MonomialOrder::degrevlex(), opts);
  LinearSubspace C0 = homogeneity_space(G);
  const long dim = dimension_and_independent_set(G).dimension;
  if (dim != static_cast<long>(C0.dimension()) + 1) {
    throw Error(ErrorKind::NotCombinatoriallyCurve, "Krull dimension " + std::to_string(dim) +
                                                        " but homogeneity space of dimension " +
                                                        std::to_string(C0.dimension()));
  }
  linalg::Matrix<Rat> r = C0.basis;
  const size_t n = ring->nvars();
  auto pivots = linalg::rref(r, n);
  // Rows of the reduced basis are 1 on their own pivot and 0 on the others,
  // so their sum is the lineality point that is 1 on every pivot.
  WeightVec z(n, Rat(0));
  for (const auto& row : r) {
    for (size_t c = 0; c < n; ++c) z[c] += row[c];
  }
  return {ring, gens, std::move(C0), std::move(pivots), std::move(z)};
}

SliceOutcome run_slice(const LinkSetup& L, size_t j, const Rat& s, bool paper_exact, const LinkConfig& cfg) {
  const Field& field = L.ring->field;
  std::map<size_t, Scalar> c;
  for (size_t d : L.transversal) c[d] = field.uniformizer_power(Rat(1));
  c[j] = field.uniformizer_power(s);
  SliceOutcome out{{j, s, {}}, {}};
  const std::string name = "slice " + L.ring->vars[j] + " = " + field.uniformizer_symbol() + "^" + to_string(s);
  std::vector<MPoly> J = nonzero_substitution(L.gens, c);
  if (J.empty()) throw Error(ErrorKind::DegenerateSlice, name + " leaves no equations");
  const RingPtr& R = J.front().ring();
  GroebnerBasis S = saturation(R, J, variable_product(R), cfg.groebner);
  if (S.is_unit()) {
    out.warnings.push_back(name + " does not meet the torus");
    return out;
  }
  if (dimension_and_independent_set(S).dimension != 0) {
    std::string msg = name + " is not zero-dimensional; try --precondition";
    if (!paper_exact) throw Error(ErrorKind::DegenerateSlice, msg);
    out.warnings.push_back("DegenerateSlice: " + msg);
    return out;
  }
  ZeroDimResult Z = zero_dim_ideal(R, S.polys, cfg.zero_dim, cfg.groebner);
  for (const auto& p : Z.points) {
    WeightVec v(L.ring->nvars());
    size_t k = 0;
    for (size_t x = 0; x < v.size(); ++x) {
      if (x == j) {
        v[x] = s;
      } else if (c.count(x) != 0) {
        v[x] = Rat(1);
      } else {
        v[x] = p.point[k++];
      }
    }
    out.record.vectors.push_back(std::move(v));
  }
  return out;
}

RaySet link_core(const LinkSetup& L, const LinkConfig& cfg) {
  const size_t n = L.ring->nvars();
  std::vector<std::pair<size_t, Rat>> tasks;
  for (size_t j = 0; j < n; ++j) {
    if (std::find(L.transversal.begin(), L.transversal.end(), j) != L.transversal.end()) continue;
    const Rat center = cfg.paper_exact ? Rat(0) : L.base[j];
    tasks.emplace_back(j, center - 1);
    tasks.emplace_back(j, center + 1);
  }
  // Slices are independent; results are merged in task order.
  std::vector<std::function<SliceOutcome()>> work;
  for (const auto& [j, s] : tasks) {
    work.push_back([&L, &cfg, j = j, s = s] { return run_slice(L, j, s, cfg.paper_exact, cfg); });
  }
  std::vector<SliceOutcome> results(work.size());
  std::vector<std::exception_ptr> errors(work.size());
  const size_t jobs = std::max(1u, cfg.jobs);
  for (size_t start = 0; start < work.size(); start += jobs) {
    std::vector<std::future<void>> batch;
    const size_t end = std::min(work.size(), start + jobs);
    for (size_t t = start; t < end; ++t) {
      auto job = [&, t] {
        try {
          results[t] = work[t]();
        } catch (...) {
          errors[t] = std::current_exception();
        }
      };
      if (jobs == 1) {
        job();
      } else {
        batch.push_back(std::async(std::launch::async, job));
      }
    }
    for (auto& f : batch) f.get();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  RaySet out;
  out.lineality = L.lineality;
  out.transversal = L.transversal;
  out.base = L.base;
  std::set<std::vector<Int>> seen;
  for (auto& r : results) {
    bool useful = false;
    for (const auto& v : r.record.vectors) {
      auto ray = canonical_ray(L.lineality, v);
      if (!ray) continue;
      useful = true;
      if (seen.insert(*ray).second) {
        out.rays.push_back(*ray);
        out.sources.emplace_back(r.record.coordinate, r.record.exponent);
      }
    }
    for (auto& w : r.warnings) out.warnings.push_back(std::move(w));
    if (!useful && !r.record.vectors.empty()) {
      out.warnings.push_back("slice " + L.ring->vars[r.record.coordinate] + " = " +
                             L.ring->field.uniformizer_symbol() + "^" + to_string(r.record.exponent) +
                             " meets Trop(I) only in the lineality space");
    }
    out.slices.push_back(std::move(r.record));
  }
  return out;
}

// Random integer matrix of determinant 1 built from elementary row operations.
std::vector<std::vector<long>> random_unimodular(size_t n, std::uint64_t seed) {
  std::vector<std::vector<long>> U(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i) U[i][i] = 1;
  if (n < 2) return U;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (size_t step = 0; step < 2 * n; ++step) {
    size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    long s = sign(rng) ? 1 : -1;
    for (size_t c = 0; c < n; ++c) U[a][c] += s * U[b][c];
  }
  return U;
}

// Image of gens under x_i = prod_j y_j^U[i][j], with each generator moved
// into the polynomial ring by a monomial factor.
std::vector<MPoly> monomial_change(const std::vector<MPoly>& gens, const std::vector<std::vector<long>>& U) {
  std::vector<MPoly> out;
  for (const auto& g : gens) {
    const size_t n = g.nvars();
    std::vector<std::pair<std::vector<long>, Scalar>> terms;
    std::vector<long> low(n, 0);
    bool first = true;
    for (const auto& [e, c] : g.terms()) {
      std::vector<long> f(n, 0);
      for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) f[j] += U[i][j] * e[i];
      }
      for (size_t j = 0; j < n; ++j) low[j] = first ? f[j] : std::min(low[j], f[j]);
      first = false;
      terms.emplace_back(std::move(f), c);
    }
    MPoly h(g.ring());
    for (const auto& [f, c] : terms) {
      Exponent e(n);
      for (size_t j = 0; j < n; ++j) e[j] = static_cast<int>(f[j] - low[j]);
      h.add_term(e, c);
    }
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace

TracedPoint zero_dim_point(const TriangularSet& F, const ZeroDimConfig& cfg) {
  auto pts = explore(F, false, cfg);
  if (pts.empty()) throw Error(ErrorKind::NonTorusVariety, "no root with the chosen valuations");
  return std::move(pts.front());
}

std::vector<TracedPoint> zero_dim_variety(const TriangularSet& F, const ZeroDimConfig& cfg) {
  auto pts = explore(F, true, cfg);
  sort_unique(pts);
  return pts;
}

ZeroDimResult zero_dim_ideal(const RingPtr& ring, const std::vector<MPoly>& gens, const ZeroDimConfig& cfg,
                             const GroebnerOptions& opts) {
  ZeroDimResult out;
  if (is_triangular(ring, gens)) {
    out.components.push_back({ring, gens});
  } else {
    out.components = triangular_decomposition(ring, gens, opts);
  }
  for (size_t c = 0; c < out.components.size(); ++c) {
    for (auto& p : zero_dim_variety(out.components[c], cfg)) {
      p.component = c;
      out.points.push_back(std::move(p));
    }
  }
  sort_unique(out.points);
  return out;
}

StartingPoint starting_point(const RingPtr& ring, const std::vector<MPoly>& gens, const StartingPointConfig& cfg) {
  const Field& field = ring->field;
  const size_t n = ring->nvars();
  GroebnerBasis G = buchberger(ring, gens, MonomialOrder::degrevlex(), cfg.groebner);
  if (G.is_unit()) throw Error(ErrorKind::ExhaustedAttempts, "the ideal is the unit ideal");
  const std::vector<size_t> S = independent_set_by_elimination(G, cfg.groebner);
  const size_t d = S.size();
  std::vector<size_t> dependent;
  for (size_t v = 0; v < n; ++v) {
    if (std::find(S.begin(), S.end(), v) == S.end()) dependent.push_back(v);
  }
  // Constant coefficients: C_0 is the homogeneity space and random w avoid
  // its projection. Forced values and non-constant coefficients rely on the
  // final membership check instead.
  const bool constant = has_constant_coefficients(G.polys);
  const LinearSubspace C0 = constant ? homogeneity_space(G) : lineality_space(G);
  const linalg::Matrix<Rat> piC0 = columns(C0.basis, S);
  auto admissible = [&](const WeightVec& w) { return !constant || !linalg::in_span(piC0, w); };
  if (constant && linalg::rank(piC0, d) == d) {
    throw Error(ErrorKind::ProjectionCoversSpace,
                "the homogeneity space projects onto all of Q^" + std::to_string(d) + "; no non-trivial point exists");
  }
  if (cfg.substitution && cfg.substitution->size() != d) {
    throw Error(ErrorKind::LengthMismatch, "substitution needs " + std::to_string(d) + " values");
  }
  if (cfg.weight && cfg.weight->size() != d) {
    throw Error(ErrorKind::LengthMismatch, "weight needs " + std::to_string(d) + " entries");
  }

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> coord(-10, 10), unit(1, std::max(1L, cfg.unit_bound));
  StartingPointWitness witness;
  witness.independent = S;
  std::string last_failure = "no attempt made";
  for (long attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    witness.attempts = attempt + 1;
    std::vector<Scalar> c;
    WeightVec w;
    if (attempt == 0 && cfg.substitution) {
      c = *cfg.substitution;
      for (const auto& x : c) {
        ExtRat v = field.val(x);
        if (v.is_infinite()) throw Error(ErrorKind::InvalidArgument, "substitution values must be nonzero");
        w.push_back(v.value());
      }
    } else {
      if (attempt == 0 && cfg.weight) {
        w = *cfg.weight;
      } else {
        int tries = 0;
        do {
          w.assign(d, Rat(0));
          for (auto& x : w) x = Rat(coord(rng));
          if (++tries > 10000) throw Error(ErrorKind::ProjectionCoversSpace, "no admissible weight found");
        } while (!admissible(w));
      }
      for (size_t k = 0; k < d; ++k) {
        long q = 1;
        if (!cfg.pure_powers) {
          do {
            q = unit(rng);
          } while (field.is_padic() && q % field.prime() == 0);
        }
        c.push_back(field.uniformizer_power(w[k], Rat(q)));
      }
    }
    WeightVec point(n);
    for (size_t k = 0; k < d; ++k) point[S[k]] = w[k];
    if (dependent.empty()) {
      witness.substitution = c;
      return {point, std::move(witness)};
    }
    std::map<size_t, Scalar> assign;
    for (size_t k = 0; k < d; ++k) assign[S[k]] = c[k];
    std::vector<MPoly> Ic = nonzero_substitution(gens, assign);
    if (Ic.empty() || !zero_dim_torus_check(Ic.front().ring(), Ic, cfg.groebner)) {
      witness.rejected.push_back(c);
      last_failure = "substitution rejected by the torus check";
      continue;
    }
    const RingPtr& R = Ic.front().ring();
    for (auto& T : triangular_decomposition(R, Ic, cfg.groebner)) {
      try {
        TracedPoint p = zero_dim_point(T, cfg.zero_dim);
        for (size_t k = 0; k < dependent.size(); ++k) point[dependent[k]] = p.point[k];
        if (C0.contains(point)) {
          last_failure = "point lies in the lineality space";
          break;
        }
        witness.substitution = c;
        witness.component = std::move(T);
        witness.trace = std::move(p.trace);
        return {point, std::move(witness)};
      } catch (const Error& e) {
        if (!is_root_failure(e.kind())) throw;
        last_failure = e.what();
      }
    }
  }
  throw Error(ErrorKind::ExhaustedAttempts, std::to_string(cfg.max_attempts) + " attempts failed (" +
                                                std::to_string(witness.rejected.size()) +
                                                " rejected by the torus check); last: " + last_failure);
}

std::optional<std::vector<Int>> canonical_ray(const LinearSubspace& lineality, const WeightVec& v) {
  WeightVec r = linalg::project_orthogonal(lineality.basis, v);
  if (std::all_of(r.begin(), r.end(), [](const Rat& x) { return is_zero(x); })) return std::nullopt;
  return primitive_integer_vector(r);
}

RaySet tropical_link(const RingPtr& ring, const std::vector<MPoly>& gens, const LinkConfig& cfg) {
  if (!cfg.precondition) return link_core(prepare_link(ring, gens, cfg.groebner), cfg);
  const size_t n = ring->nvars();
  LinkSetup original = prepare_link(ring, gens, cfg.groebner);
  auto U = random_unimodular(n, cfg.seed);
  GroebnerBasis sat = saturation(ring, monomial_change(gens, U), variable_product(ring), cfg.groebner);
  RaySet inner = link_core(prepare_link(ring, sat.polys, cfg.groebner), cfg);
  // Valuations transform as w_x = U w_y.
  RaySet out;
  out.lineality = original.lineality;
  out.transversal = inner.transversal;
  out.base = inner.base;
  out.unimodular = U;
  out.warnings = std::move(inner.warnings);
  std::set<std::vector<Int>> seen;
  auto apply = [&](const WeightVec& y) {
    WeightVec x(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) x[i] += Rat(U[i][j]) * y[j];
    }
    return x;
  };
  for (size_t k = 0; k < inner.rays.size(); ++k) {
    WeightVec y(inner.rays[k].begin(), inner.rays[k].end());
    auto ray = canonical_ray(out.lineality, apply(y));
    if (ray && seen.insert(*ray).second) {
      out.rays.push_back(*ray);
      out.sources.push_back(inner.sources[k]);
    }
  }
  for (auto& s : inner.slices) {
    for (auto& v : s.vectors) v = apply(v);
    out.slices.push_back(std::move(s));
  }
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const VerificationItem& i) { return i.prevariety && i.tropical.value_or(true); });
}

bool supports_membership_test(const std::vector<MPoly>& gens) {
  if (gens.empty() || gens.front().field().is_padic()) return false;
  return has_constant_coefficients(gens) &&
         std::all_of(gens.begin(), gens.end(), [](const MPoly& g) { return g.is_homogeneous(); });
}

VerificationReport verify_output(const RingPtr& ring, const std::vector<MPoly>& gens,
                                 const std::vector<WeightVec>& points, const GroebnerOptions& opts) {
  const bool membership = supports_membership_test(gens);
  VerificationReport report;
  for (const auto& w : points) {
    if (w.size() != ring->nvars()) throw Error(ErrorKind::LengthMismatch, "point length does not match ring");
    VerificationItem item{w, in_prevariety(gens, w), std::nullopt};
    if (membership) item.tropical = is_in_tropical_variety(ring, gens, w, opts);
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace tropnewton
