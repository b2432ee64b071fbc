#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropnewton/linalg.hpp"
#include "tropnewton/poly.hpp"

namespace tropnewton {

enum class OrderKind { Lex, DegRevLex, Weighted, Block };

// Lex and DegRevLex treat x_0 as the largest variable. Weighted compares
// total degree, then the w-weight with the SMALLER weight ranking higher
// (so leading terms are initial-form terms), then the tiebreak order; it is
// a monomial order only on homogeneous input. Block(k) is degrevlex on the
// first k variables, then degrevlex on the rest.
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
  static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::DegRevLex); }
  static MonomialOrder weighted(const WeightVec& w, OrderKind tiebreak = OrderKind::DegRevLex);
  static MonomialOrder block(size_t k);

  OrderKind kind() const { return kind_; }
  /// -1, 0 or 1 as a is smaller, equal or larger than b.
  int compare(const Exponent& a, const Exponent& b) const;
  bool greater(const Exponent& a, const Exponent& b) const { return compare(a, b) > 0; }
  std::string describe() const;

 private:
  explicit MonomialOrder(OrderKind kind) : kind_(kind) {}
  OrderKind kind_;
  OrderKind tiebreak_ = OrderKind::DegRevLex;
  std::vector<long long> weight_;  // scaled to integers
  WeightVec rational_weight_;
  size_t block_ = 0;
};

struct GroebnerOptions {
  /// Cap on the total number of stored terms across the basis and any
  /// intermediate polynomial.
  size_t max_terms = 1'000'000;
};

struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::degrevlex();
  /// Monic, reduced, sorted by ascending leading monomial.
  std::vector<MPoly> polys;
  bool reduced = true;

  bool is_unit() const;
  bool is_zero_ideal() const { return polys.empty(); }
  std::vector<Exponent> leading_monomials() const;
};

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<MPoly>& gens, const MonomialOrder& order,
                         const GroebnerOptions& opts = {});

Exponent leading_monomial(const MPoly& f, const MonomialOrder& order);
Scalar leading_coefficient(const MPoly& f, const MonomialOrder& order);

/// Reduced basis of the same ideal for another order, by linear algebra on
/// normal forms. G must be zero-dimensional (NotZeroDimensional otherwise).
GroebnerBasis fglm(const GroebnerBasis& G, const MonomialOrder& target);

/// Reduced basis of (I : h) for target, where I is the zero-dimensional
/// ideal of G. For radical I this is also the saturation by h.
GroebnerBasis ideal_quotient(const GroebnerBasis& G, const MPoly& h, const MonomialOrder& target);

/// Fully reduced remainder of f modulo G.
MPoly normal_form(const MPoly& f, const GroebnerBasis& G);

struct DimensionInfo {
  /// Krull dimension; -1 for the unit ideal.
  long dimension;
  /// Maximal independent variable set, ascending. Among sets of maximal size
  /// the one with the largest bitmask (highest-index variables) is chosen.
  std::vector<size_t> independent;
};

DimensionInfo dimension_and_independent_set(const GroebnerBasis& G);

/// Independent set of maximal size with the largest bitmask among all such
/// sets, not only those independent modulo the degrevlex leading ideal.
/// Candidates above the degrevlex choice are tested by elimination, at most
/// max_tests of them.
std::vector<size_t> independent_set_by_elimination(const GroebnerBasis& G, const GroebnerOptions& opts = {},
                                                   size_t max_tests = 32);

struct LinearSubspace {
  size_t ambient = 0;
  linalg::Matrix<Rat> basis;  // independent rows
  size_t dimension() const { return basis.size(); }
  bool contains(const std::vector<Rat>& v) const { return linalg::in_span(basis, v); }
};

/// {w : init_w(g) = g for all g in G}. Requires rational valuation-zero
/// coefficients (NonConstantValuation otherwise).
LinearSubspace homogeneity_space(const GroebnerBasis& G);

/// Same equations, reading only supports. Equals the homogeneity space when
/// coefficients are constant; used where valuations are not all zero.
LinearSubspace lineality_space(const GroebnerBasis& G);

/// True iff the saturation of the ideal by the product of all variables is
/// the unit ideal.
bool contains_monomial(const RingPtr& ring, const std::vector<MPoly>& gens, const GroebnerOptions& opts = {});

/// Generators of in_w(I) (rational coefficients, same ring). Requires a
/// Puiseux field, rational valuation-zero coefficients and homogeneous
/// generators.
std::vector<MPoly> initial_ideal(const RingPtr& ring, const std::vector<MPoly>& gens, const WeightVec& w,
                                 const GroebnerOptions& opts = {});

bool is_in_tropical_variety(const RingPtr& ring, const std::vector<MPoly>& gens, const WeightVec& w,
                            const GroebnerOptions& opts = {});

/// Every generator attains its tropical minimum at least twice.
bool in_prevariety(const std::vector<MPoly>& gens, const WeightVec& w);

/// Dimension zero, not the unit ideal, and no solution with a zero coordinate.
bool zero_dim_torus_check(const RingPtr& ring, const std::vector<MPoly>& gens, const GroebnerOptions& opts = {});

/// Degrevlex Groebner basis of (I : h^infinity).
GroebnerBasis saturation(const RingPtr& ring, const std::vector<MPoly>& gens, const MPoly& h,
                         const GroebnerOptions& opts = {});

/// Product of all ring variables.
MPoly variable_product(const RingPtr& ring);

}  // namespace tropnewton
