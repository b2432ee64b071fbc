#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropnewton/newton.hpp"
#include "tropnewton/poly.hpp"
#include "tropnewton/triangular.hpp"

namespace tropnewton {

// A scalar known up to an error term: the true value lies in
// value + {e : val(e) >= precision}. Infinite precision means exact.
struct Approx {
  Scalar value;
  ExtRat precision = ExtRat::infinity();

  bool is_exact() const { return precision.is_infinite(); }
  /// The valuation of every admissible value, if it is determined.
  std::optional<Rat> valuation(const Field& field) const;
};

// The coset residue + p^precision Z_p.
struct PadicApprox {
  Int residue;  // in [0, p^precision)
  long precision;
  long prime;
  friend bool operator==(const PadicApprox&, const PadicApprox&) = default;
};

struct PrecisionSchedule {
  long start = 2;
  long cap = 64;
};

/// Roots in Z_p whose residues are simple roots of f mod p (f scaled to a
/// primitive integer polynomial first), lifted to precision k and ordered by
/// residue mod p. NoResidueRoot when f mod p has no root in F_p;
/// MultipleResidueRoot when it has roots but none is simple.
std::vector<PadicApprox> hensel_root(const QPoly& f, long p, long k);

/// Newton-Puiseux expansions of the roots of sum coeffs[i] x^i: one entry per
/// distinct truncated expansion, every term of exponent <= bound (the leading
/// term is always kept). Precision is a lower bound on the valuation of the
/// omitted tail. IrrationalResidueRoot when some edge equation has a root
/// outside Q.
std::vector<Approx> puiseux_root(const std::vector<Scalar>& coeffs, const Rat& bound);

/// Value of f at an approximate point, with the error bound propagated
/// termwise. f may only involve the first point.size() variables, and each
/// coordinate's valuation must be determined.
Approx evaluate(const MPoly& f, std::span<const Approx> point);

/// Coefficients of f with respect to x_var, evaluated at the point.
std::vector<Approx> coefficients_at(const MPoly& f, size_t var, std::span<const Approx> point);

/// Lower hull of approximate coefficients. Throws InsufficientPrecision
/// unless every vertex valuation is exact and every other point provably
/// lies on or above the hull; ZeroConstantTerm if coeffs[0] is exactly zero.
NewtonPolygon certified_polygon(std::span<const Approx> coeffs, const Field& field);

/// Roots of valuation m of sum coeffs[i] x^i, each with error valuation at
/// least m + k where the coefficient errors allow it (p-adic: k digits;
/// Puiseux: exponents up to m + k). With need_all, every such root is
/// returned or an error explains why not; otherwise at least one.
std::vector<Approx> roots_with_valuation(std::span<const Approx> coeffs, const Rat& m, const Field& field, long k,
                                         bool need_all);

struct PrefixRoot {
  std::vector<Approx> point;  // coordinates x_0..x_{i-1}
  NewtonPolygon polygon;      // certified polygon of f_i at point
  long precision;             // schedule step that certified it
};

/// One approximate common root of F[0..i-1] whose valuations are w (chosen
/// from the polygons when w is empty), refined along the schedule until the
/// polygon of F[i] at the point is certified.
PrefixRoot solve_triangular_prefix(const TriangularSet& F, size_t i, const PrecisionSchedule& schedule,
                                   std::span<const Rat> w = {});

}  // namespace tropnewton
