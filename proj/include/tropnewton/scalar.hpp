#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropnewton/rational.hpp"
#include "tropnewton/upoly.hpp"

namespace tropnewton {

/// Element of Q(t^(1/N)): a fraction of Puiseux polynomials with rational
/// coefficients. Rational constants are the special case used by p-adic
/// fields, where t never appears.
///
/// Canonical form: value = t^(shift/N) * num(s) / den(s) with s = t^(1/N),
/// num(0) != 0, den(0) == 1, gcd(num, den) == 1 and N minimal. Two equal
/// values therefore have identical representations.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : num_(Rat(v)) {}         // NOLINT(google-explicit-constructor)
  Scalar(const Rat& v) : num_(v) {}        // NOLINT(google-explicit-constructor)

  /// coeff * t^exponent
  static Scalar t_power(const Rat& exponent, const Rat& coeff = 1);

  bool is_zero() const { return num_.is_zero_poly(); }
  /// True when the value lies in Q (no t anywhere).
  bool is_rational() const { return shift_ == 0 && num_.degree() <= 0 && den_.degree() == 0; }
  /// True when the denominator is 1, i.e. a finite sum of coefficient * t^e.
  bool is_polynomial() const { return den_.degree() == 0; }
  Rat rational_value() const;

  /// Least t-exponent (the t-adic valuation); infinity for zero.
  ExtRat t_order() const;
  /// Coefficient of the least t-power; throws ZeroInput for zero.
  Rat t_leading_coeff() const;
  long ramification() const { return ram_; }

  /// Terms of the numerator and denominator as (exponent, coefficient),
  /// ascending by exponent. The numerator terms include the t^shift factor.
  std::vector<std::pair<Rat, Rat>> numerator_terms() const;
  std::vector<std::pair<Rat, Rat>> denominator_terms() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(Scalar a);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.ram_ == b.ram_ && a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  Scalar pow(long e) const;

  /// Literal syntax accepted by the ideal-file parser, e.g. "2*t^3 - 1",
  /// "t^(1/2)" or "(1)/(1 + t)".
  std::string to_string() const;

 private:
  void normalize();
  Scalar lifted(long ram) const;
  bool is_one_den() const { return den_.degree() == 0; }

  long ram_ = 1;
  long shift_ = 0;
  QPoly num_;
  QPoly den_{Rat(1)};
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

}  // namespace tropnewton
