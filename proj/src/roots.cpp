#include "tropnewton/roots.hpp"

#include <algorithm>

#include "tropnewton/error.hpp"
#include "tropnewton/field.hpp"
#include "tropnewton/upoly.hpp"

namespace tropnewton {

namespace {

using SPoly = UPoly<Scalar>;

Int int_pow(long p, long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

Rat rat_pow(long p, long k) { return k >= 0 ? Rat(int_pow(p, k)) : Rat(1, 1) / Rat(int_pow(p, -k)); }

// x mod n for a rational whose denominator is invertible mod n.
Int reduce_mod(const Rat& x, const Int& n) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), n.get_mpz_t()) == 0) {
    throw Error(ErrorKind::InvalidArgument, "denominator of " + to_string(x) + " is not a unit");
  }
  Int r = x.get_num() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int eval_mod(const std::vector<Int>& c, const Int& y, const Int& n) {
  Int acc = 0;
  for (size_t i = c.size(); i-- > 0;) {
    acc = acc * y + c[i];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
  }
  return acc;
}

std::vector<Int> derivative(const std::vector<Int>& c) {
  std::vector<Int> d;
  for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
  return d;
}

struct ResidueRoots {
  std::vector<long> simple;
  bool has_multiple = false;
  long total = 0;  // with multiplicity, as far as F_p can tell
};

// Roots in [lo, p) of h mod p; h has p-integral coefficients.
ResidueRoots residue_roots(const std::vector<Rat>& h, long p, long lo) {
  const Int pz(p);
  std::vector<Int> hm;
  for (const auto& c : h) hm.push_back(reduce_mod(c, pz));
  const std::vector<Int> dh = derivative(hm);
  ResidueRoots out;
  for (long r = lo; r < p; ++r) {
    if (eval_mod(hm, Int(r), pz) != 0) continue;
    if (eval_mod(dh, Int(r), pz) != 0) {
      out.simple.push_back(r);
      ++out.total;
    } else {
      out.has_multiple = true;
      out.total += 2;
    }
  }
  return out;
}

// Newton iteration for a simple residue root r of h, to precision p^k.
Int lift(const std::vector<Rat>& h, long r, long p, long k) {
  const Int n = int_pow(p, k);
  std::vector<Int> hm;
  for (const auto& c : h) hm.push_back(reduce_mod(c, n));
  const std::vector<Int> dh = derivative(hm);
  Int y(r);
  for (int it = 0; it < 64; ++it) {
    Int v = eval_mod(hm, y, n);
    if (v == 0) break;
    Int d = eval_mod(dh, y, n);
    Int dinv;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    y -= v * dinv;
    mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
  }
  return y;
}

std::string residue_string(const QPoly& phi) {
  std::vector<std::string> parts;
  const auto& c = phi.coeffs();
  for (size_t i = c.size(); i-- > 0;) {
    if (is_zero(c[i])) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "y" : "y^" + std::to_string(i));
    std::string coeff = to_string(c[i]);
    if (mono.empty()) {
      parts.push_back(coeff);
    } else if (c[i] == 1) {
      parts.push_back(mono);
    } else {
      parts.push_back((c[i].get_den() == 1 ? coeff : "(" + coeff + ")") + "*" + mono);
    }
  }
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : " + ") + s;
  return out;
}

// Distinct nonzero rational roots of phi with multiplicities, ascending.
std::vector<std::pair<Rat, long>> rational_roots_with_multiplicity(const QPoly& phi) {
  std::vector<std::pair<Rat, long>> out;
  for (const auto& a : rational_roots(phi)) {
    QPoly rest = phi;
    const QPoly lin(std::vector<Rat>{Rat(-a), Rat(1)});
    long mu = 0;
    for (;;) {
      auto [q, r] = QPoly::divmod(rest, lin);
      if (!r.is_zero_poly()) break;
      rest = std::move(q);
      ++mu;
    }
    out.emplace_back(a, mu);
  }
  return out;
}

// Edge equation of slope -m: leading t-coefficients of the terms on the edge.
QPoly edge_residue(const std::vector<Scalar>& c, const Rat& m, const HullVertex& a, const HullVertex& b) {
  const Rat level = a.value + m * a.index;
  std::vector<Rat> phi(static_cast<size_t>(b.index - a.index) + 1, Rat(0));
  for (long i = a.index; i <= b.index; ++i) {
    const Scalar& x = c[static_cast<size_t>(i)];
    if (x.is_zero()) continue;
    if (x.t_order().value() + m * i == level) phi[static_cast<size_t>(i - a.index)] = x.t_leading_coeff();
  }
  return QPoly(std::move(phi));
}

std::vector<Scalar> taylor_shift(const std::vector<Scalar>& g, const Scalar& q) {
  SPoly acc;
  const SPoly lin(std::vector<Scalar>{q, Scalar(1)});
  for (size_t i = g.size(); i-- > 0;) acc = acc * lin + SPoly(g[i]);
  std::vector<Scalar> out = acc.coeffs();
  out.resize(g.size(), Scalar());
  return out;
}

// Newton-Puiseux descent. Roots are expanded term by term until the next
// exponent would exceed the bound.
class PuiseuxExpander {
 public:
  PuiseuxExpander(const Rat& bound, bool need_all) : bound_(bound), need_all_(need_all) {}

  /// Roots of g of valuation exactly m. Each returned entry carries the
  /// residue-root multiplicity of its cluster.
  void top(const std::vector<Scalar>& g, const Rat& m, std::vector<std::pair<Approx, long>>& out) {
    const Field K = Field::puiseux();
    NewtonPolygon P = newton_polygon(g, K);
    for (size_t e = 0; e + 1 < P.vertices.size(); ++e) {
      const auto& a = P.vertices[e];
      const auto& b = P.vertices[e + 1];
      if (Rat(-(b.value - a.value) / (b.index - a.index)) != m) continue;
      QPoly phi = edge_residue(g, m, a, b);
      auto roots = rational_roots_with_multiplicity(phi);
      long found = 0;
      for (const auto& [r, mu] : roots) found += mu;
      if (roots.empty() || (need_all_ && found < b.index - a.index)) {
        throw Error(ErrorKind::IrrationalResidueRoot,
                    "edge equation " + residue_string(phi) + " has roots outside Q (valuation " + to_string(m) + ")");
      }
      for (const auto& [r, mu] : roots) {
        const Scalar q = Scalar::t_power(m, r);
        std::vector<Approx> found_here;
        descend(taylor_shift(g, q), q, m, found_here);
        for (auto& x : found_here) out.emplace_back(std::move(x), mu);
      }
    }
  }

 private:
  void descend(const std::vector<Scalar>& g, const Scalar& prefix, const Rat& last, std::vector<Approx>& out) {
    size_t r = 0;
    while (r < g.size() && g[r].is_zero()) ++r;
    if (r > 0) out.push_back({prefix, ExtRat::infinity()});
    std::vector<Scalar> h(g.begin() + static_cast<long>(r), g.end());
    while (!h.empty() && h.back().is_zero()) h.pop_back();
    if (h.size() <= 1) return;
    NewtonPolygon P = newton_polygon(h, Field::puiseux());
    ExtRat tail = ExtRat::infinity();
    for (size_t e = 0; e + 1 < P.vertices.size(); ++e) {
      const auto& a = P.vertices[e];
      const auto& b = P.vertices[e + 1];
      const Rat m = -(b.value - a.value) / (b.index - a.index);
      if (m <= last) continue;
      if (m > bound_) {
        tail = min(tail, ExtRat(m));
        continue;
      }
      QPoly phi = edge_residue(h, m, a, b);
      auto roots = rational_roots_with_multiplicity(phi);
      long found = 0;
      for (const auto& [x, mu] : roots) found += mu;
      if (need_all_ && found < b.index - a.index) {
        throw Error(ErrorKind::IrrationalResidueRoot,
                    "edge equation " + residue_string(phi) + " has roots outside Q (exponent " + to_string(m) + ")");
      }
      for (const auto& [x, mu] : roots) {
        const Scalar q = Scalar::t_power(m, x);
        descend(taylor_shift(g, q), prefix + q, m, out);
      }
    }
    if (tail.is_finite()) out.push_back({prefix, tail});
  }

  Rat bound_;
  bool need_all_;
};

struct EdgeInfo {
  HullVertex a, b;
};

std::optional<EdgeInfo> edge_with_slope(const NewtonPolygon& P, const Rat& m) {
  for (size_t e = 0; e + 1 < P.vertices.size(); ++e) {
    const auto& a = P.vertices[e];
    const auto& b = P.vertices[e + 1];
    if (Rat(-(b.value - a.value) / (b.index - a.index)) == m) return EdgeInfo{a, b};
  }
  return std::nullopt;
}

std::vector<Approx> padic_roots(std::span<const Approx> coeffs, const Rat& m, const Rat& level, const ExtRat& slack,
                                const EdgeInfo& edge, const Field& field, long k, bool need_all) {
  const long p = field.prime();
  if (m.get_den() != 1) {
    throw Error(ErrorKind::NoResidueRoot,
                "valuation " + to_string(m) + " is not integral; the roots lie in a ramified extension of Q_" +
                    std::to_string(p));
  }
  const long mi = m.get_num().get_si();
  const long s = level.get_num().get_si();
  long K = k;
  if (slack.is_finite()) {
    Rat e = slack.value();
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
    K = std::min<long>(K, fl.get_si());
  }
  std::vector<Rat> h;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    h.push_back(coeffs[i].value.is_zero() ? Rat(0) : Rat(coeffs[i].value.rational_value() *
                                                       rat_pow(p, mi * static_cast<long>(i) - s)));
  }
  ResidueRoots rr = residue_roots(h, p, 1);
  const long width = edge.b.index - edge.a.index;
  if (rr.simple.empty() || (need_all && static_cast<long>(rr.simple.size()) < width)) {
    if (rr.has_multiple) {
      throw Error(ErrorKind::MultipleResidueRoot, "residue equation at valuation " + to_string(m) +
                                                      " has a repeated root mod " + std::to_string(p));
    }
    throw Error(ErrorKind::NoResidueRoot, "residue equation at valuation " + to_string(m) + " has " +
                                              std::to_string(rr.simple.size()) + " of " + std::to_string(width) +
                                              " roots in F_" + std::to_string(p));
  }
  const bool all_exact = std::all_of(coeffs.begin(), coeffs.end(), [](const Approx& c) { return c.is_exact(); });
  std::vector<Rat> exact_roots;
  if (all_exact) {
    std::vector<Rat> g;
    for (const auto& c : coeffs) g.push_back(c.value.is_zero() ? Rat(0) : c.value.rational_value());
    try {
      exact_roots = rational_roots(QPoly(std::move(g)));
    } catch (const Error&) {
      exact_roots.clear();
    }
  }
  std::vector<Approx> out;
  const Rat scale = rat_pow(p, mi);
  for (long r : rr.simple) {
    Rat c = scale * Rat(lift(h, r, p, K));
    ExtRat prec = Rat(mi + K);
    for (const auto& x : exact_roots) {
      if (field.val(Scalar(x)) == ExtRat(m) && field.val(Scalar(Rat(x - c))) >= prec) {
        c = x;
        prec = ExtRat::infinity();
        break;
      }
    }
    out.push_back({Scalar(c), prec});
  }
  return out;
}

}  // namespace

std::optional<Rat> Approx::valuation(const Field& field) const {
  ExtRat v = field.val(value);
  if (v.is_infinite()) return std::nullopt;
  if (precision.is_infinite() || v < precision) return v.value();
  return std::nullopt;
}

std::vector<PadicApprox> hensel_root(const QPoly& f, long p, long k) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "precision must be positive");
  if (f.is_zero_poly()) throw Error(ErrorKind::ZeroPolynomial, "Hensel lifting of the zero polynomial");
  std::vector<Rat> h;
  for (const auto& c : primitive_integer_vector(f.coeffs())) h.emplace_back(c);
  ResidueRoots rr = residue_roots(h, p, 0);
  if (rr.simple.empty()) {
    if (rr.has_multiple) throw Error(ErrorKind::MultipleResidueRoot, "every root mod " + std::to_string(p) + " is repeated");
    throw Error(ErrorKind::NoResidueRoot, "no root mod " + std::to_string(p));
  }
  std::vector<PadicApprox> out;
  for (long r : rr.simple) out.push_back({lift(h, r, p, k), k, p});
  return out;
}

std::vector<Approx> puiseux_root(const std::vector<Scalar>& coeffs, const Rat& bound) {
  std::vector<Scalar> g = coeffs;
  while (!g.empty() && g.back().is_zero()) g.pop_back();
  const Field K = Field::puiseux();
  NewtonPolygon P = newton_polygon(g, K);
  std::vector<Approx> out;
  for (const auto& [m, width] : lambda(P)) {
    PuiseuxExpander ex(std::max(bound, m), false);
    std::vector<std::pair<Approx, long>> found;
    ex.top(g, m, found);
    for (auto& [x, mu] : found) out.push_back(std::move(x));
  }
  return out;
}

Approx evaluate(const MPoly& f, std::span<const Approx> point) {
  const Field& field = f.field();
  std::vector<std::optional<Rat>> w(point.size());
  auto weight = [&](size_t j) -> const Rat& {
    if (j >= point.size()) {
      throw Error(ErrorKind::VariableOutOfScope, "variable " + f.ring()->vars[j] + " has no value at this point");
    }
    if (!w[j]) {
      w[j] = point[j].valuation(field);
      if (!w[j]) {
        throw Error(ErrorKind::InsufficientPrecision,
                    "valuation of " + f.ring()->vars[j] + " is not determined at the current precision");
      }
    }
    return *w[j];
  };
  Approx out;
  for (const auto& [e, c] : f.terms()) {
    Scalar term = c;
    Rat tw = field.val(c).value();
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      tw += Rat(e[j]) * weight(j);
      term *= point[j].value.pow(e[j]);
    }
    out.value += term;
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0 || point[j].is_exact()) continue;
      out.precision = min(out.precision, ExtRat(Rat(tw - weight(j) + point[j].precision.value())));
    }
  }
  return out;
}

std::vector<Approx> coefficients_at(const MPoly& f, size_t var, std::span<const Approx> point) {
  std::vector<Approx> out;
  for (const auto& c : coefficients_wrt(f, var)) out.push_back(evaluate(c, point));
  return out;
}

NewtonPolygon certified_polygon(std::span<const Approx> coeffs, const Field& field) {
  if (coeffs.empty() || (coeffs.front().value.is_zero() && coeffs.front().is_exact())) {
    throw Error(ErrorKind::ZeroConstantTerm, "constant coefficient vanishes, so 0 is a root");
  }
  std::vector<std::pair<long, ExtRat>> pts;
  std::vector<bool> exact(coeffs.size(), true);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    const Approx& c = coeffs[i];
    if (auto v = c.valuation(field)) {
      pts.emplace_back(static_cast<long>(i), *v);
    } else if (!c.is_exact()) {
      pts.emplace_back(static_cast<long>(i), c.precision);
      exact[i] = false;
    }
  }
  NewtonPolygon P = lower_hull(pts);
  for (const auto& v : P.vertices) {
    if (!exact[static_cast<size_t>(v.index)]) {
      throw Error(ErrorKind::InsufficientPrecision,
                  "valuation of the coefficient of degree " + std::to_string(v.index) + " is not determined");
    }
  }
  return P;
}

std::vector<Approx> roots_with_valuation(std::span<const Approx> coeffs, const Rat& m, const Field& field, long k,
                                         bool need_all) {
  NewtonPolygon P = certified_polygon(coeffs, field);
  auto edge = edge_with_slope(P, m);
  if (!edge) return {};
  const Rat level = edge->a.value + m * edge->a.index;
  // Error of every coefficient after scaling x = u^m y and dividing by u^level;
  // the edge equation is determined only while this stays positive.
  ExtRat slack = ExtRat::infinity();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_exact()) continue;
    slack = min(slack, ExtRat(Rat(coeffs[i].precision.value() + m * static_cast<long>(i) - level)));
  }
  if (slack.is_finite() && slack.value() <= 0) {
    throw Error(ErrorKind::InsufficientPrecision, "edge equation at valuation " + to_string(m) + " is not determined");
  }
  if (field.is_padic()) return padic_roots(coeffs, m, level, slack, *edge, field, k, need_all);

  std::vector<Scalar> g;
  for (const auto& c : coeffs) g.push_back(c.value);
  while (!g.empty() && g.back().is_zero()) g.pop_back();
  PuiseuxExpander ex(m + k, need_all);
  std::vector<std::pair<Approx, long>> found;
  ex.top(g, m, found);
  std::vector<Approx> out;
  for (auto& [x, mu] : found) {
    // A cluster of mu residue roots moves by at most slack / mu.
    if (slack.is_finite()) x.precision = min(x.precision, ExtRat(Rat(m + slack.value() / mu)));
    out.push_back(std::move(x));
  }
  return out;
}

PrefixRoot solve_triangular_prefix(const TriangularSet& F, size_t i, const PrecisionSchedule& schedule,
                                   std::span<const Rat> w) {
  if (i >= F.polys.size()) throw Error(ErrorKind::VariableOutOfScope, "level beyond the triangular set");
  if (!w.empty() && w.size() != i) {
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(i) + " valuations");
  }
  const Field& field = F.ring->field;
  for (long k = schedule.start;; k *= 2) {
    try {
      std::vector<Approx> point;
      for (size_t j = 0; j < i; ++j) {
        auto coeffs = coefficients_at(F.polys[j], j, point);
        Rat m = w.empty() ? lambda(certified_polygon(coeffs, field)).front().valuation : w[j];
        auto roots = roots_with_valuation(coeffs, m, field, k, false);
        if (roots.empty()) {
          throw Error(ErrorKind::InvalidArgument,
                      F.ring->vars[j] + " has no root of valuation " + to_string(m) + " over this prefix");
        }
        point.push_back(std::move(roots.front()));
      }
      NewtonPolygon P = certified_polygon(coefficients_at(F.polys[i], i, point), field);
      return {std::move(point), std::move(P), k};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InsufficientPrecision) throw;
      if (k * 2 > schedule.cap) {
        throw Error(ErrorKind::InsufficientPrecision,
                    e.detail() + " (precision cap " + std::to_string(schedule.cap) + " reached)");
      }
    }
  }
}

}  // namespace tropnewton
