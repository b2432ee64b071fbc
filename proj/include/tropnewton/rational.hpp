#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tropnewton {

using Int = mpz_class;
using Rat = mpq_class;
using WeightVec = std::vector<Rat>;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

Rat parse_rat(std::string_view text);
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

/// Parses a comma-separated list of rationals such as "0,-2,1/2".
WeightVec parse_weight_list(std::string_view text);
std::string format_weight_list(std::span<const Rat> w);

Rat dot(std::span<const Rat> a, std::span<const int> exponents);

/// Clears denominators and divides by the gcd of the entries. Scaling is
/// positive, so the ray spanned by the vector is preserved. The zero vector
/// maps to the zero vector.
std::vector<Int> primitive_integer_vector(std::span<const Rat> v);

/// A rational number or +infinity; the codomain of a valuation.
class ExtRat {
 public:
  ExtRat() : value_(std::nullopt) {}  // infinity
  ExtRat(const Rat& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ExtRat(long v) : value_(Rat(v)) {}   // NOLINT(google-explicit-constructor)

  static ExtRat infinity() { return ExtRat(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const Rat& value() const;

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  std::string to_string() const;

 private:
  std::optional<Rat> value_;
};

inline ExtRat min(const ExtRat& a, const ExtRat& b) { return (b < a) ? b : a; }

}  // namespace tropnewton
