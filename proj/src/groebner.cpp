#include "tropnewton/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <numeric>

#include "tropnewton/error.hpp"

namespace tropnewton {

namespace {

long degree(const Exponent& e, size_t lo, size_t hi) {
  long d = 0;
  for (size_t i = lo; i < hi; ++i) d += e[i];
  return d;
}

long degree(const Exponent& e) { return degree(e, 0, e.size()); }

int revlex_block(const Exponent& a, const Exponent& b, size_t lo, size_t hi) {
  long da = degree(a, lo, hi), db = degree(b, lo, hi);
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_cmp(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool disjoint(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

Exponent lcm_of(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent minus(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

struct Term {
  Exponent e;
  Scalar c;
};

// Terms sorted by descending monomial order.
using GPoly = std::vector<Term>;

GPoly to_gpoly(const MPoly& f, const MonomialOrder& ord) {
  GPoly p;
  p.reserve(f.nterms());
  for (const auto& [e, c] : f.terms()) p.push_back({e, c});
  std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ord.greater(a.e, b.e); });
  return p;
}

MPoly to_mpoly(const GPoly& p, const RingPtr& ring) {
  MPoly f(ring);
  for (const auto& t : p) f.add_term(t.e, t.c);
  return f;
}

void make_monic(GPoly& p) {
  if (p.empty()) return;
  const Scalar inv = Scalar(1) / p.front().c;
  p.front().c = Scalar(1);
  for (size_t i = 1; i < p.size(); ++i) p[i].c *= inv;
}

class Engine {
 public:
  Engine(const MonomialOrder& ord, const GroebnerOptions& opts) : ord_(ord), opts_(opts) {}

  // p[start..] - c * x^m * g, assuming p[start] and the leading term of
  // x^m * g cancel.
  GPoly sub_mul(const GPoly& p, size_t start, const Scalar& c, const Exponent& m, const GPoly& g) const {
    GPoly out;
    out.reserve(p.size() - start + g.size());
    size_t i = start + 1, j = 1;
    Exponent shifted(m.size());
    auto shift = [&](size_t k) {
      for (size_t v = 0; v < m.size(); ++v) shifted[v] = g[k].e[v] + m[v];
    };
    if (j < g.size()) shift(j);
    while (i < p.size() || j < g.size()) {
      int cmp;
      if (i == p.size()) {
        cmp = -1;
      } else if (j == g.size()) {
        cmp = 1;
      } else {
        cmp = ord_.compare(p[i].e, shifted);
      }
      if (cmp > 0) {
        out.push_back(p[i++]);
      } else if (cmp < 0) {
        out.push_back({shifted, -(c * g[j].c)});
        if (++j < g.size()) shift(j);
      } else {
        Scalar v = p[i].c - c * g[j].c;
        if (!v.is_zero()) out.push_back({shifted, std::move(v)});
        ++i;
        if (++j < g.size()) shift(j);
      }
    }
    if (out.size() > opts_.max_terms) {
      throw Error(ErrorKind::ResourceLimit, "intermediate polynomial exceeds " + std::to_string(opts_.max_terms) + " terms");
    }
    return out;
  }

  // Full normal form of p modulo the listed divisors (all monic).
  GPoly reduce(GPoly p, long& sugar, const std::vector<size_t>& divisors) const {
    GPoly rest;
    size_t pos = 0;
    while (pos < p.size()) {
      const Exponent& lead = p[pos].e;
      const GPoly* g = nullptr;
      size_t gi = 0;
      for (size_t k : divisors) {
        if (divides(polys_[k].front().e, lead)) {
          g = &polys_[k];
          gi = k;
          break;
        }
      }
      if (g == nullptr) {
        rest.push_back(std::move(p[pos++]));
        continue;
      }
      Exponent m = minus(lead, g->front().e);
      sugar = std::max(sugar, sugar_[gi] + degree(m));
      Scalar c = p[pos].c;
      p = sub_mul(p, pos, c, m, *g);
      pos = 0;
    }
    return rest;
  }

  std::vector<size_t> active_indices() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(k);
    }
    return out;
  }

  // Returns false once the unit ideal is detected.
  bool add(GPoly h, long sugar) {
    if (h.empty()) return true;
    make_monic(h);
    if (degree(h.front().e) == 0) {
      unit_ = true;
      return false;
    }
    const size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    update(hi);
    size_t total = 0;
    for (size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) total += polys_[k].size();
    }
    if (total > opts_.max_terms) {
      throw Error(ErrorKind::ResourceLimit, "basis exceeds " + std::to_string(opts_.max_terms) + " terms");
    }
    return true;
  }

  void run(const std::vector<GPoly>& inputs) {
    for (const auto& f : inputs) {
      long s = f.empty() ? 0 : degree(f.front().e);
      for (const auto& t : f) s = std::max(s, degree(t.e));
      GPoly r = reduce(f, s, active_indices());
      if (!add(std::move(r), s)) return;
    }
    while (!pairs_.empty()) {
      size_t best = 0;
      for (size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && ord_.compare(a.lcm, b.lcm) < 0)) best = k;
      }
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<long>(best));
      long s = 0;
      GPoly sp = spoly(pr, s);
      GPoly r = reduce(std::move(sp), s, active_indices());
      if (!add(std::move(r), s)) return;
    }
  }

  // Reduced basis, ascending by leading monomial.
  std::vector<GPoly> finish() {
    if (unit_) {
      return {GPoly{{Exponent(nvars_), Scalar(1)}}};
    }
    std::vector<size_t> act = active_indices();
    std::vector<GPoly> out;
    for (size_t k : act) {
      std::vector<size_t> others;
      for (size_t o : act) {
        if (o != k) others.push_back(o);
      }
      GPoly tail(polys_[k].begin() + 1, polys_[k].end());
      long s = 0;
      GPoly r = reduce(std::move(tail), s, others);
      GPoly full;
      full.reserve(r.size() + 1);
      full.push_back(polys_[k].front());
      for (auto& t : r) full.push_back(std::move(t));
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(), [&](const GPoly& a, const GPoly& b) { return ord_.greater(b.front().e, a.front().e); });
    return out;
  }

  void set_nvars(size_t n) { nvars_ = n; }
  void load_basis(std::vector<GPoly> basis) {
    for (auto& g : basis) {
      polys_.push_back(std::move(g));
      sugar_.push_back(0);
      active_.push_back(true);
    }
  }

 private:
  struct Pair {
    size_t i, j;
    Exponent lcm;
    long sugar;
  };

  GPoly spoly(const Pair& pr, long& sugar) const {
    const GPoly& a = polys_[pr.i];
    const GPoly& b = polys_[pr.j];
    Exponent ma = minus(pr.lcm, a.front().e);
    Exponent mb = minus(pr.lcm, b.front().e);
    sugar = pr.sugar;
    GPoly sa;
    sa.reserve(a.size());
    for (const auto& t : a) {
      Exponent e = t.e;
      for (size_t v = 0; v < e.size(); ++v) e[v] += ma[v];
      sa.push_back({std::move(e), t.c});
    }
    return sub_mul(sa, 0, Scalar(1), mb, b);
  }

  long pair_sugar(size_t i, size_t j, const Exponent& l) const {
    return std::max(sugar_[i] + degree(l) - degree(polys_[i].front().e), sugar_[j] + degree(l) - degree(polys_[j].front().e));
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(size_t h) {
    const Exponent& lh = polys_[h].front().e;
    std::vector<Pair> c;
    for (size_t g = 0; g < h; ++g) {
      if (!active_[g]) continue;
      Exponent l = lcm_of(lh, polys_[g].front().e);
      c.push_back({h, g, l, 0});
    }
    std::vector<Pair> d;
    for (size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = disjoint(lh, polys_[p.j].front().e);
      if (!keep) {
        keep = true;
        for (size_t r = k + 1; r < c.size() && keep; ++r) {
          if (divides(c[r].lcm, p.lcm)) keep = false;
        }
        for (size_t r = 0; r < d.size() && keep; ++r) {
          if (divides(d[r].lcm, p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      bool drop = divides(lh, p.lcm) && lcm_of(polys_[p.i].front().e, lh) != p.lcm &&
                  lcm_of(polys_[p.j].front().e, lh) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& p : d) {
      if (disjoint(lh, polys_[p.j].front().e)) continue;
      p.sugar = pair_sugar(p.i, p.j, p.lcm);
      kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (size_t g = 0; g < h; ++g) {
      if (active_[g] && divides(lh, polys_[g].front().e)) active_[g] = false;
    }
  }

  const MonomialOrder& ord_;
  GroebnerOptions opts_;
  size_t nvars_ = 0;
  std::vector<GPoly> polys_;
  std::vector<long> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

MPoly embed_with_y(const MPoly& f, const RingPtr& big) {
  MPoly r(big);
  for (const auto& [e, c] : f.terms()) {
    Exponent ne;
    ne.reserve(e.size() + 1);
    ne.push_back(0);
    ne.insert(ne.end(), e.begin(), e.end());
    r.add_term(ne, c);
  }
  return r;
}

RingPtr ring_with_y(const RingPtr& ring) {
  std::vector<std::string> names{"_y"};
  names.insert(names.end(), ring->vars.begin(), ring->vars.end());
  return make_ring(std::move(names), ring->field);
}

MPoly permuted(const MPoly& f, const std::vector<size_t>& perm, const RingPtr& target) {
  MPoly r(target);
  for (const auto& [e, c] : f.terms()) {
    Exponent ne(e.size());
    for (size_t v = 0; v < e.size(); ++v) ne[perm[v]] = e[v];
    r.add_term(ne, c);
  }
  return r;
}

// Generators of (I : x_var^infinity) for homogeneous I, by dividing a
// degrevlex basis with x_var last by the largest x_var power.
std::vector<MPoly> saturate_homogeneous(const RingPtr& ring, const std::vector<MPoly>& gens, size_t var,
                                        const GroebnerOptions& opts) {
  const size_t n = ring->nvars();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[var], perm[n - 1]);
  std::vector<std::string> names(n);
  for (size_t v = 0; v < n; ++v) names[perm[v]] = ring->vars[v];
  RingPtr pr = make_ring(std::move(names), ring->field);
  std::vector<MPoly> pg;
  for (const auto& g : gens) pg.push_back(permuted(g, perm, pr));
  GroebnerBasis G = buchberger(pr, pg, MonomialOrder::degrevlex(), opts);
  std::vector<MPoly> out;
  for (const auto& g : G.polys) {
    int k = g.terms().begin()->first[n - 1];
    for (const auto& [e, c] : g.terms()) k = std::min(k, e[n - 1]);
    MPoly back(ring);
    for (const auto& [e, c] : g.terms()) {
      Exponent ne(n);
      for (size_t v = 0; v < n; ++v) ne[v] = e[perm[v]];
      ne[var] -= k;
      back.add_term(ne, c);
    }
    out.push_back(std::move(back));
  }
  return out;
}

bool has_nonzero_constant(const std::vector<MPoly>& gens) {
  return std::any_of(gens.begin(), gens.end(), [](const MPoly& g) { return !g.is_zero() && g.is_constant(); });
}

void require_constant_valuation(const MPoly& g, const char* what) {
  if (!has_constant_valuation_zero(g)) {
    throw Error(ErrorKind::NonConstantValuation, std::string(what) + " needs rational coefficients of valuation zero: " + g.to_string());
  }
}

}  // namespace

MonomialOrder MonomialOrder::weighted(const WeightVec& w, OrderKind tiebreak) {
  if (tiebreak != OrderKind::Lex && tiebreak != OrderKind::DegRevLex) {
    throw Error(ErrorKind::InvalidArgument, "weighted order tiebreak must be lex or degrevlex");
  }
  MonomialOrder o(OrderKind::Weighted);
  o.tiebreak_ = tiebreak;
  o.rational_weight_ = w;
  Int l = 1;
  for (const auto& x : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  for (const auto& x : w) {
    Int v = x.get_num() * (l / x.get_den());
    if (!v.fits_slong_p() || abs(v) > Int(1L << 40)) throw Error(ErrorKind::ResourceLimit, "weight entries too large");
    o.weight_.push_back(v.get_si());
  }
  return o;
}

MonomialOrder MonomialOrder::block(size_t k) {
  MonomialOrder o(OrderKind::Block);
  o.block_ = k;
  return o;
}

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      return lex_cmp(a, b);
    case OrderKind::DegRevLex:
      return revlex_block(a, b, 0, a.size());
    case OrderKind::Block: {
      int c = revlex_block(a, b, 0, block_);
      return c != 0 ? c : revlex_block(a, b, block_, a.size());
    }
    case OrderKind::Weighted: {
      long da = degree(a), db = degree(b);
      if (da != db) return da > db ? 1 : -1;
      if (weight_.size() != a.size()) throw Error(ErrorKind::LengthMismatch, "weight length does not match ring");
      long long wa = 0, wb = 0;
      for (size_t i = 0; i < a.size(); ++i) {
        wa += weight_[i] * a[i];
        wb += weight_[i] * b[i];
      }
      if (wa != wb) return wa < wb ? 1 : -1;
      return tiebreak_ == OrderKind::Lex ? lex_cmp(a, b) : revlex_block(a, b, 0, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::DegRevLex:
      return "degrevlex";
    case OrderKind::Block:
      return "block(" + std::to_string(block_) + ")";
    case OrderKind::Weighted:
      return "weighted(" + format_weight_list(rational_weight_) + ")";
  }
  return "";
}

bool GroebnerBasis::is_unit() const { return polys.size() == 1 && polys.front().is_constant() && !polys.front().is_zero(); }

std::vector<Exponent> GroebnerBasis::leading_monomials() const {
  std::vector<Exponent> out;
  for (const auto& g : polys) out.push_back(leading_monomial(g, order));
  return out;
}

Exponent leading_monomial(const MPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading monomial of zero");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : f.terms()) {
    if (best == nullptr || order.greater(e, *best)) best = &e;
  }
  return *best;
}

Scalar leading_coefficient(const MPoly& f, const MonomialOrder& order) {
  return f.terms().at(leading_monomial(f, order));
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<MPoly>& gens, const MonomialOrder& order,
                         const GroebnerOptions& opts) {
  Engine eng(order, opts);
  eng.set_nvars(ring->nvars());
  std::vector<GPoly> inputs;
  for (const auto& g : gens) {
    if (g.nvars() != ring->nvars()) throw Error(ErrorKind::RingMismatch, "generator ring does not match");
    if (!g.is_zero()) inputs.push_back(to_gpoly(g, order));
  }
  // Low-degree generators first keeps early reductions cheap.
  std::stable_sort(inputs.begin(), inputs.end(),
                   [&](const GPoly& a, const GPoly& b) { return order.greater(b.front().e, a.front().e); });
  eng.run(inputs);
  GroebnerBasis G{ring, order, {}, true};
  for (const auto& g : eng.finish()) G.polys.push_back(to_mpoly(g, ring));
  return G;
}

MPoly normal_form(const MPoly& f, const GroebnerBasis& G) {
  Engine eng(G.order, GroebnerOptions{});
  std::vector<GPoly> basis;
  for (const auto& g : G.polys) {
    GPoly p = to_gpoly(g, G.order);
    make_monic(p);
    basis.push_back(std::move(p));
  }
  std::vector<size_t> idx(basis.size());
  std::iota(idx.begin(), idx.end(), 0);
  eng.load_basis(std::move(basis));
  long s = 0;
  return to_mpoly(eng.reduce(to_gpoly(f, G.order), s, idx), f.ring());
}

namespace {

// Reduced basis, for target, of the kernel of f -> NF(h*f) modulo the ideal
// of G. Normal forms are linear in f, so each candidate monomial x_i*m costs
// one reduction of x_i*NF(h*m).
GroebnerBasis kernel_basis(const GroebnerBasis& G, const MPoly& h, const MonomialOrder& target) {
  const RingPtr& R = G.ring;
  const size_t n = R->nvars();
  if (G.is_unit()) return {R, target, G.polys, true};
  if (dimension_and_independent_set(G).dimension != 0) {
    throw Error(ErrorKind::NotZeroDimensional, "linear algebra on normal forms needs a zero-dimensional ideal");
  }
  Engine eng(G.order, GroebnerOptions{});
  {
    std::vector<GPoly> basis;
    for (const auto& g : G.polys) {
      GPoly p = to_gpoly(g, G.order);
      make_monic(p);
      basis.push_back(std::move(p));
    }
    eng.load_basis(std::move(basis));
  }
  std::vector<size_t> idx(G.polys.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto nf = [&](const MPoly& f) {
    long sugar = 0;
    return to_mpoly(eng.reduce(to_gpoly(f, G.order), sugar, idx), R);
  };

  // Rows of a Gauss-Jordan echelon form of the normal forms seen so far.
  // Each pivot exponent occurs in exactly one row; comb is the polynomial in
  // the new standard monomials whose normal form is that row.
  struct Row {
    MPoly vec;
    MPoly comb;
    Exponent pivot;
  };
  std::vector<Row> rows;
  std::set<Exponent> standard;
  std::vector<Exponent> leads;
  std::vector<MPoly> out;
  auto cmp = [&](const Exponent& a, const Exponent& b) { return target.compare(a, b) < 0; };
  std::set<Exponent, decltype(cmp)> todo(cmp);
  todo.insert(Exponent(n, 0));
  std::map<Exponent, MPoly> pending{{Exponent(n, 0), nf(h)}};

  while (!todo.empty()) {
    Exponent m = *todo.begin();
    todo.erase(todo.begin());
    const MPoly m_nf = std::move(pending.at(m));
    pending.erase(m);
    if (std::any_of(leads.begin(), leads.end(), [&](const Exponent& l) { return divides(l, m); })) continue;
    MPoly v = m_nf;
    MPoly comb = MPoly::monomial(R, m, Scalar(1));
    for (const auto& r : rows) {
      auto it = v.terms().find(r.pivot);
      if (it == v.terms().end()) continue;
      Scalar a = it->second / r.vec.terms().at(r.pivot);
      v -= r.vec.scaled(a);
      comb -= r.comb.scaled(a);
    }
    if (v.is_zero()) {
      leads.push_back(m);
      out.push_back(std::move(comb));
      continue;
    }
    Row fresh{v, comb, v.terms().begin()->first};
    for (auto& r : rows) {
      auto it = r.vec.terms().find(fresh.pivot);
      if (it == r.vec.terms().end()) continue;
      Scalar a = it->second / fresh.vec.terms().at(fresh.pivot);
      r.vec -= fresh.vec.scaled(a);
      r.comb -= fresh.comb.scaled(a);
    }
    rows.push_back(std::move(fresh));
    standard.insert(m);
    for (size_t i = 0; i < n; ++i) {
      Exponent next = m;
      ++next[i];
      if (standard.count(next) != 0 || pending.count(next) != 0) continue;
      pending.emplace(next, nf(m_nf * MPoly::variable(R, i)));
      todo.insert(next);
    }
  }
  GroebnerBasis H{R, target, {}, true};
  for (auto& g : out) {
    GPoly p = to_gpoly(g, target);
    make_monic(p);
    H.polys.push_back(to_mpoly(p, R));
  }
  return H;
}

}  // namespace

GroebnerBasis fglm(const GroebnerBasis& G, const MonomialOrder& target) {
  return kernel_basis(G, MPoly::constant(G.ring, 1), target);
}

GroebnerBasis ideal_quotient(const GroebnerBasis& G, const MPoly& h, const MonomialOrder& target) {
  if (h.nvars() != G.ring->nvars()) throw Error(ErrorKind::RingMismatch, "quotient element ring does not match");
  return kernel_basis(G, h, target);
}

DimensionInfo dimension_and_independent_set(const GroebnerBasis& G) {
  const size_t n = G.ring->nvars();
  if (G.is_unit()) return {-1, {}};
  std::vector<std::vector<size_t>> supports;
  for (const auto& lm : G.leading_monomials()) {
    std::vector<size_t> s;
    for (size_t v = 0; v < n; ++v) {
      if (lm[v] != 0) s.push_back(v);
    }
    supports.push_back(std::move(s));
  }
  // Depth-first from the highest variable, including before excluding, so the
  // first set found of each size has the largest bitmask.
  std::vector<bool> chosen(n, false), best;
  long best_size = -1;
  auto violates = [&]() {
    return std::any_of(supports.begin(), supports.end(), [&](const std::vector<size_t>& s) {
      return std::all_of(s.begin(), s.end(), [&](size_t v) { return chosen[v]; });
    });
  };
  std::function<void(long, long)> dfs = [&](long v, long size) {
    if (size + v + 1 <= best_size) return;
    if (v < 0) {
      best_size = size;
      best = chosen;
      return;
    }
    chosen[static_cast<size_t>(v)] = true;
    if (!violates()) dfs(v - 1, size + 1);
    chosen[static_cast<size_t>(v)] = false;
    dfs(v - 1, size);
  };
  dfs(static_cast<long>(n) - 1, 0);
  DimensionInfo info{best_size, {}};
  for (size_t v = 0; v < n; ++v) {
    if (best[v]) info.independent.push_back(v);
  }
  return info;
}

std::vector<size_t> independent_set_by_elimination(const GroebnerBasis& G, const GroebnerOptions& opts,
                                                   size_t max_tests) {
  const DimensionInfo info = dimension_and_independent_set(G);
  const size_t n = G.ring->nvars();
  if (info.dimension <= 0 || static_cast<size_t>(info.dimension) == n) return info.independent;
  const size_t d = static_cast<size_t>(info.dimension);
  // S is independent iff I meets K[S] only in 0: eliminate the other
  // variables with a block order that puts S last.
  auto independent = [&](const std::vector<size_t>& S) {
    std::vector<size_t> perm(n);
    std::vector<std::string> names(n);
    size_t front = 0, back = n - d;
    for (size_t v = 0; v < n; ++v) {
      perm[v] = std::binary_search(S.begin(), S.end(), v) ? back++ : front++;
      names[perm[v]] = G.ring->vars[v];
    }
    RingPtr pr = make_ring(std::move(names), G.ring->field);
    std::vector<MPoly> pg;
    for (const auto& g : G.polys) pg.push_back(permuted(g, perm, pr));
    GroebnerBasis E = buchberger(pr, pg, MonomialOrder::block(n - d), opts);
    return std::none_of(E.polys.begin(), E.polys.end(), [&](const MPoly& g) {
      for (size_t v = 0; v < n - d; ++v) {
        if (g.involves(v)) return false;
      }
      return true;
    });
  };
  // Subsets of size d in decreasing bitmask order, stopping at the known set.
  std::vector<size_t> chosen;
  std::optional<std::vector<size_t>> found;
  size_t tests = 0;
  std::function<bool(long)> dfs = [&](long v) {
    if (chosen.size() == d) {
      std::vector<size_t> S(chosen.rbegin(), chosen.rend());
      if (S == info.independent || tests++ >= max_tests) return true;
      if (independent(S)) found = S;
      return found.has_value();
    }
    if (v < 0 || static_cast<size_t>(v + 1) + chosen.size() < d) return false;
    chosen.push_back(static_cast<size_t>(v));
    if (dfs(v - 1)) return true;
    chosen.pop_back();
    return dfs(v - 1);
  };
  dfs(static_cast<long>(n) - 1);
  return found.value_or(info.independent);
}

LinearSubspace lineality_space(const GroebnerBasis& G) {
  const size_t n = G.ring->nvars();
  linalg::Matrix<Rat> rows;
  for (const auto& g : G.polys) {
    const Exponent& first = g.terms().begin()->first;
    for (const auto& [e, c] : g.terms()) {
      if (e == first) continue;
      std::vector<Rat> row(n);
      for (size_t v = 0; v < n; ++v) row[v] = e[v] - first[v];
      rows.push_back(std::move(row));
    }
  }
  LinearSubspace L;
  L.ambient = n;
  if (G.is_unit()) return L;
  L.basis = linalg::nullspace(rows, n);
  return L;
}

LinearSubspace homogeneity_space(const GroebnerBasis& G) {
  for (const auto& g : G.polys) require_constant_valuation(g, "homogeneity space");
  return lineality_space(G);
}

bool contains_monomial(const RingPtr& ring, const std::vector<MPoly>& gens, const GroebnerOptions& opts) {
  std::vector<MPoly> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return false;
  if (has_nonzero_constant(nonzero)) return true;
  const bool homogeneous = std::all_of(nonzero.begin(), nonzero.end(), [](const MPoly& g) { return g.is_homogeneous(); });
  if (homogeneous && ring->nvars() > 0) {
    std::vector<MPoly> cur = nonzero;
    for (size_t v = 0; v < ring->nvars(); ++v) {
      cur = saturate_homogeneous(ring, cur, v, opts);
      if (has_nonzero_constant(cur)) return true;
    }
    return false;
  }
  RingPtr big = ring_with_y(ring);
  std::vector<MPoly> ext;
  for (const auto& g : nonzero) ext.push_back(embed_with_y(g, big));
  Exponent e(big->nvars(), 1);
  MPoly rab = MPoly::constant(big, 1);
  rab.add_term(e, Scalar(-1));
  ext.push_back(rab);
  return buchberger(big, ext, MonomialOrder::block(1), opts).is_unit();
}

std::vector<MPoly> initial_ideal(const RingPtr& ring, const std::vector<MPoly>& gens, const WeightVec& w,
                                 const GroebnerOptions& opts) {
  if (w.size() != ring->nvars()) throw Error(ErrorKind::LengthMismatch, "weight length does not match ring");
  if (ring->field.is_padic()) {
    throw Error(ErrorKind::NonConstantValuation, "initial ideals are supported over Puiseux fields only");
  }
  for (const auto& g : gens) {
    require_constant_valuation(g, "initial ideal");
    if (!g.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "generator is not homogeneous: " + g.to_string());
  }
  GroebnerBasis G = buchberger(ring, gens, MonomialOrder::weighted(w), opts);
  std::vector<MPoly> out;
  for (const auto& g : G.polys) {
    MPoly r(ring);
    for (const auto& [e, c] : initial_form(g, w).terms) r.add_term(e, Scalar(c));
    out.push_back(std::move(r));
  }
  return out;
}

bool is_in_tropical_variety(const RingPtr& ring, const std::vector<MPoly>& gens, const WeightVec& w,
                            const GroebnerOptions& opts) {
  return !contains_monomial(ring, initial_ideal(ring, gens, w, opts), opts);
}

bool in_prevariety(const std::vector<MPoly>& gens, const WeightVec& w) {
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const Rat m = trop_eval(g, w).value();
    int hits = 0;
    for (const auto& [e, c] : g.terms()) {
      if (dot(w, e) + g.field().val(c).value() == m) ++hits;
    }
    if (hits < 2) return false;
  }
  return true;
}

bool zero_dim_torus_check(const RingPtr& ring, const std::vector<MPoly>& gens, const GroebnerOptions& opts) {
  GroebnerBasis G = buchberger(ring, gens, MonomialOrder::degrevlex(), opts);
  if (G.is_unit() || dimension_and_independent_set(G).dimension != 0) return false;
  for (size_t v = 0; v < ring->nvars(); ++v) {
    std::vector<MPoly> ext = G.polys;
    ext.push_back(MPoly::variable(ring, v));
    if (!buchberger(ring, ext, MonomialOrder::degrevlex(), opts).is_unit()) return false;
  }
  return true;
}

GroebnerBasis saturation(const RingPtr& ring, const std::vector<MPoly>& gens, const MPoly& h,
                         const GroebnerOptions& opts) {
  RingPtr big = ring_with_y(ring);
  std::vector<MPoly> ext;
  for (const auto& g : gens) ext.push_back(embed_with_y(g, big));
  MPoly yh = embed_with_y(h, big) * MPoly::variable(big, 0);
  ext.push_back(MPoly::constant(big, 1) - yh);
  GroebnerBasis B = buchberger(big, ext, MonomialOrder::block(1), opts);
  GroebnerBasis G{ring, MonomialOrder::degrevlex(), {}, true};
  for (const auto& g : B.polys) {
    if (g.involves(0)) continue;
    MPoly r(ring);
    for (const auto& [e, c] : g.terms()) r.add_term(Exponent(e.begin() + 1, e.end()), c);
    G.polys.push_back(std::move(r));
  }
  return G;
}

MPoly variable_product(const RingPtr& ring) {
  return MPoly::monomial(ring, Exponent(ring->nvars(), 1), Scalar(1));
}

}  // namespace tropnewton
