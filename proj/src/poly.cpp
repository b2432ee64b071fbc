#include "tropnewton/poly.hpp"

#include <algorithm>
#include <numeric>

#include "tropnewton/error.hpp"

namespace tropnewton {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  return a > b;
}

std::optional<size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) return std::nullopt;
  return static_cast<size_t>(it - vars.begin());
}

RingPtr make_ring(std::vector<std::string> vars, Field field) {
  return std::make_shared<const Ring>(Ring{std::move(vars), field});
}

namespace {

std::string monomial_string(const Exponent& e, const std::vector<std::string>& vars) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

bool is_unit_exponent(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Appends "c*m" after a sign separator; a unit coefficient is omitted.
void append_term(std::string& out, const std::string& coeff_text, bool negative, const std::string& mono) {
  std::string body;
  if (mono.empty()) {
    body = coeff_text;
  } else if (coeff_text == "1") {
    body = mono;
  } else {
    body = coeff_text + "*" + mono;
  }
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

}  // namespace

ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b) {
  ResiduePoly r;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      Exponent e = add_exponents(ea, eb);
      Rat& slot = r.terms[e];
      slot += ca * cb;
      if (is_zero(slot)) r.terms.erase(e);
    }
  }
  return r;
}

std::string ResiduePoly::to_string(const std::vector<std::string>& vars) const {
  std::string out;
  for (const auto& [e, c] : terms) {
    append_term(out, tropnewton::to_string(abs(c)), sgn(c) < 0, monomial_string(e, vars));
  }
  return out.empty() ? "0" : out;
}

MPoly MPoly::constant(RingPtr ring, const Scalar& c) {
  Exponent e(ring->nvars(), 0);
  return monomial(std::move(ring), std::move(e), c);
}

MPoly MPoly::variable(RingPtr ring, size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorKind::VariableOutOfScope, "variable index out of range");
  Exponent e(ring->nvars(), 0);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e), Scalar(1));
}

MPoly MPoly::monomial(RingPtr ring, Exponent e, const Scalar& c) {
  if (e.size() != ring->nvars()) throw Error(ErrorKind::LengthMismatch, "exponent length does not match ring");
  MPoly p(std::move(ring));
  p.add_term(e, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_unit_exponent(terms_.begin()->first));
}

void MPoly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void MPoly::check_ring(const MPoly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw Error(ErrorKind::RingMismatch, "polynomials live in different rings");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  check_ring(o);
  MPoly r(ring_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
  }
  terms_ = std::move(r.terms_);
  return *this;
}

MPoly operator-(MPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

MPoly MPoly::scaled(const Scalar& c) const {
  MPoly r(ring_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(ring_, Scalar(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.terms_ == b.terms_;
}

long MPoly::degree_in(size_t var) const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max<long>(d, e[var]);
  return d;
}

long MPoly::total_degree() const {
  // Grlex storage puts the largest total degree first.
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0L);
}

bool MPoly::involves(size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

std::optional<size_t> MPoly::max_variable() const {
  for (size_t v = nvars(); v-- > 0;) {
    if (involves(v)) return v;
  }
  return std::nullopt;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0L) == d;
  });
}

MPoly MPoly::with_ring(RingPtr ring) const {
  if (ring->nvars() != nvars()) throw Error(ErrorKind::RingMismatch, "variable count differs");
  MPoly r(std::move(ring));
  r.terms_ = terms_;
  return r;
}

std::string MPoly::to_string() const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono = monomial_string(e, ring_->vars);
    auto nt = c.numerator_terms();
    if (c.is_polynomial() && nt.size() == 1) {
      const Rat& coeff = nt.front().second;
      bool negative = sgn(coeff) < 0;
      std::string text = Scalar::t_power(nt.front().first, abs(coeff)).to_string();
      append_term(out, text, negative, mono);
    } else {
      append_term(out, "(" + c.to_string() + ")", false, mono);
    }
  }
  return out.empty() ? "0" : out;
}

ExtRat trop_eval(const MPoly& f, std::span<const Rat> w) {
  if (w.size() != f.nvars()) {
    throw Error(ErrorKind::LengthMismatch,
                "weight has length " + std::to_string(w.size()) + ", ring has " + std::to_string(f.nvars()) + " variables");
  }
  ExtRat best = ExtRat::infinity();
  for (const auto& [e, c] : f.terms()) best = min(best, ExtRat(dot(w, e) + f.field().val(c).value()));
  return best;
}

ResiduePoly initial_form(const MPoly& f, std::span<const Rat> w) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "initial form of the zero polynomial");
  const Rat m = trop_eval(f, w).value();
  ResiduePoly g;
  for (const auto& [e, c] : f.terms()) {
    if (dot(w, e) + f.field().val(c).value() == m) g.terms.emplace(e, f.field().leading_residue(c));
  }
  return g;
}

std::vector<MPoly> coefficients_wrt(const MPoly& f, size_t k) {
  if (k >= f.nvars()) throw Error(ErrorKind::VariableOutOfScope, "variable index out of range");
  for (size_t j = k + 1; j < f.nvars(); ++j) {
    if (f.involves(j)) {
      throw Error(ErrorKind::VariableOutOfScope,
                  "polynomial involves " + f.ring()->vars[j] + " beyond " + f.ring()->vars[k]);
    }
  }
  std::vector<MPoly> out(static_cast<size_t>(f.degree_in(k)) + 1, MPoly(f.ring()));
  for (const auto& [e, c] : f.terms()) {
    Exponent rest = e;
    rest[k] = 0;
    out[static_cast<size_t>(e[k])].add_term(rest, c);
  }
  return out;
}

namespace {

// Evaluates assigned variables. in_place keeps full-length exponents;
// otherwise assigned positions are dropped.
MPoly evaluate(const MPoly& f, const std::map<size_t, Scalar>& assignment, const RingPtr& target, bool in_place) {
  for (const auto& [v, val] : assignment) {
    if (v >= f.nvars()) throw Error(ErrorKind::VariableOutOfScope, "substitution variable out of range");
  }
  std::map<std::pair<size_t, int>, Scalar> powers;
  auto power = [&](size_t v, int k) -> const Scalar& {
    auto key = std::make_pair(v, k);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, assignment.at(v).pow(k)).first;
    return it->second;
  };
  MPoly r(target);
  for (const auto& [e, c] : f.terms()) {
    Scalar coeff = c;
    Exponent ne;
    if (in_place) ne.assign(e.size(), 0);
    for (size_t v = 0; v < e.size(); ++v) {
      if (assignment.count(v)) {
        if (e[v] != 0) coeff *= power(v, e[v]);
      } else if (in_place) {
        ne[v] = e[v];
      } else {
        ne.push_back(e[v]);
      }
    }
    r.add_term(ne, coeff);
  }
  return r;
}

}  // namespace

MPoly substitute(const MPoly& f, const std::map<size_t, Scalar>& assignment, bool allow_zero) {
  if (!allow_zero) {
    for (const auto& [v, val] : assignment) {
      if (val.is_zero()) throw Error(ErrorKind::ZeroInput, "zero substituted for " + f.ring()->vars.at(v));
    }
  }
  std::vector<std::string> names;
  for (size_t v = 0; v < f.nvars(); ++v) {
    if (!assignment.count(v)) names.push_back(f.ring()->vars[v]);
  }
  return evaluate(f, assignment, make_ring(std::move(names), f.field()), false);
}

MPoly substitute_in_place(const MPoly& f, const std::map<size_t, Scalar>& assignment) {
  return evaluate(f, assignment, f.ring(), true);
}

std::vector<Scalar> univariate_coefficients(const MPoly& f, size_t var) {
  std::vector<Scalar> out(static_cast<size_t>(f.degree_in(var)) + 1);
  for (const auto& [e, c] : f.terms()) {
    for (size_t v = 0; v < e.size(); ++v) {
      if (v != var && e[v] != 0) throw Error(ErrorKind::VariableOutOfScope, "polynomial is not univariate");
    }
    out[static_cast<size_t>(e[var])] = c;
  }
  return out;
}

bool is_monomial(const ResiduePoly& g) { return g.terms.size() == 1; }

bool has_constant_valuation_zero(const MPoly& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) {
    return t.second.is_rational() && f.field().val(t.second) == ExtRat(0);
  });
}

}  // namespace tropnewton
