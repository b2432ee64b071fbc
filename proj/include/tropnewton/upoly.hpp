#pragma once

#include <utility>
#include <vector>

#include "tropnewton/error.hpp"
#include "tropnewton/rational.hpp"

namespace tropnewton {

// Dense univariate polynomial over a field F. Coefficient i multiplies x^i;
// the vector never carries trailing zeros, so the zero polynomial is empty.
// F needs the field operators and a free function is_zero(const F&).
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit UPoly(const F& constant) {
    if (!is_zero(constant)) c_.push_back(constant);
  }

  static UPoly monomial(const F& coeff, size_t degree) {
    if (is_zero(coeff)) return {};
    std::vector<F> c(degree + 1, F(0));
    c[degree] = coeff;
    return UPoly(std::move(c));
  }

  bool is_zero_poly() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const { return c_; }
  const F& lead() const { return c_.back(); }
  F coeff(size_t i) const { return i < c_.size() ? c_[i] : F(0); }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly scaled(const F& s) const {
    if (is_zero(s)) return {};
    UPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  F eval(const F& x) const {
    F acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> r(c_.size() - 1, F(0));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<long>(i));
    return UPoly(std::move(r));
  }

  UPoly monic() const {
    if (c_.empty()) return {};
    return scaled(F(1) / c_.back());
  }

  /// Euclidean division: returns (quotient, remainder).
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.c_.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<F> rem = a.c_;
    std::vector<F> quo(a.c_.size() - b.c_.size() + 1, F(0));
    const F inv_lead = F(1) / b.c_.back();
    for (size_t k = quo.size(); k-- > 0;) {
      const F& top = rem[k + b.c_.size() - 1];
      if (is_zero(top)) continue;
      F q = top * inv_lead;
      for (size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
      quo[k] = q;
    }
    rem.resize(b.c_.size() - 1);
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }

  /// Monic greatest common divisor (zero iff both inputs are zero).
  static UPoly gcd(UPoly a, UPoly b) { return euclid_gcd(std::move(a), std::move(b)); }

  static UPoly euclid_gcd(UPoly a, UPoly b) {
    while (!b.c_.empty()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  UPoly squarefree_part() const {
    if (c_.size() <= 1) return monic();
    UPoly g = gcd(*this, derivative());
    return divmod(*this, g).first.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

using QPoly = UPoly<Rat>;

// Over Q the remainder sequence swells quickly; this goes through Z[x]
// with a heuristic integer gcd and falls back to euclid_gcd.
template <>
QPoly QPoly::gcd(QPoly a, QPoly b);

/// Nonzero rational roots of a polynomial over Q, ascending, via the rational
/// root theorem. Throws ResourceLimit when the extreme coefficients are too
/// large to factor by trial division.
std::vector<Rat> rational_roots(const QPoly& f);

}  // namespace tropnewton
