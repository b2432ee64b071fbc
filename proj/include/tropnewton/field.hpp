#pragma once

#include <string>

#include "tropnewton/rational.hpp"
#include "tropnewton/scalar.hpp"

namespace tropnewton {

enum class FieldKind { Puiseux, Padic };

/// The valued coefficient field: Puiseux fractions with the t-adic valuation,
/// or Q with the p-adic valuation. Arithmetic lives in Scalar; this class
/// owns everything that depends on the valuation.
class Field {
 public:
  static Field puiseux() { return Field(FieldKind::Puiseux, 0); }
  /// Throws NonPrimeModulus unless p is a prime that fits a machine word.
  static Field padic(long p);

  FieldKind kind() const { return kind_; }
  long prime() const { return prime_; }
  bool is_padic() const { return kind_ == FieldKind::Padic; }

  ExtRat val(const Scalar& a) const;
  /// Residue of a * uniformizer^(-val(a)). Puiseux: the coefficient of the
  /// least t-power; p-adic: the unit part reduced mod p, in [1, p).
  Rat leading_residue(const Scalar& a) const;
  /// coeff * uniformizer^e. p-adic fields require an integral exponent.
  Scalar uniformizer_power(const Rat& e, const Rat& coeff = 1) const;
  std::string uniformizer_symbol() const { return is_padic() ? "p" : "t"; }
  std::string describe() const;

  /// Exact p-adic order of a nonzero rational.
  static long padic_order(const Rat& x, long p);

  friend bool operator==(const Field& a, const Field& b) { return a.kind_ == b.kind_ && a.prime_ == b.prime_; }

 private:
  Field(FieldKind kind, long prime) : kind_(kind), prime_(prime) {}
  FieldKind kind_;
  long prime_;
};

bool is_prime(long n);

}  // namespace tropnewton
