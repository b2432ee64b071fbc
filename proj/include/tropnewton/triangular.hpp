#pragma once

#include <vector>

#include "tropnewton/groebner.hpp"
#include "tropnewton/poly.hpp"

namespace tropnewton {

// polys[i] lies in K[x_0..x_i] and has positive degree in x_i; one
// polynomial per ring variable.
struct TriangularSet {
  RingPtr ring;
  std::vector<MPoly> polys;
};

bool is_triangular(const RingPtr& ring, const std::vector<MPoly>& F);

/// Triangular sets F_1..F_s with pairwise disjoint varieties whose union is
/// V(I). Each <F_i> is radical. The unit ideal yields no components.
/// Throws NotZeroDimensional for positive-dimensional ideals.
std::vector<TriangularSet> triangular_decomposition(const RingPtr& ring, const std::vector<MPoly>& gens,
                                                    const GroebnerOptions& opts = {});

/// Minimal polynomial of x_var modulo a zero-dimensional Groebner basis,
/// as coefficients by ascending degree (monic).
std::vector<Scalar> minimal_polynomial(const GroebnerBasis& G, size_t var);

}  // namespace tropnewton
