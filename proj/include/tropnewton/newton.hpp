#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tropnewton/poly.hpp"
#include "tropnewton/rational.hpp"

namespace tropnewton {

struct HullVertex {
  long index;
  Rat value;
  friend bool operator==(const HullVertex&, const HullVertex&) = default;
};

// Vertices of a lower hull, strictly increasing in index, with strictly
// increasing edge slopes. The vertical edge above index 0 is implicit.
struct NewtonPolygon {
  std::vector<HullVertex> vertices;
  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

// One root valuation (the negated slope of an edge) and the edge's width.
struct SlopeEntry {
  Rat valuation;
  long multiplicity;
  friend bool operator==(const SlopeEntry&, const SlopeEntry&) = default;
};

// Entries sorted by strictly decreasing valuation.
using SlopeSet = std::vector<SlopeEntry>;

/// Lower hull of (index, value) points; infinite values are skipped and
/// collinear points are dropped.
NewtonPolygon lower_hull(const std::vector<std::pair<long, ExtRat>>& points);

/// Polygon of a univariate coefficient list over the given field.
/// Throws ZeroConstantTerm if coeffs[0] == 0.
NewtonPolygon newton_polygon(const std::vector<Scalar>& coeffs, const Field& field);

/// f must involve at most one variable.
NewtonPolygon newton_polygon(const MPoly& f);

/// Throws DegeneratePolygon for a single-vertex polygon.
SlopeSet lambda(const NewtonPolygon& P);

/// Hull of (i, trop_eval(f_i, w)) with f = sum f_i x_k^i. w holds the weights
/// of x_0..x_{k-1}; f must not involve variables after x_k.
NewtonPolygon expected_polygon(const MPoly& f, size_t k, std::span<const Rat> w);

/// True iff every vertex coefficient f_i has a monomial initial form at w.
bool is_unique_at(const MPoly& f, size_t k, std::span<const Rat> w);

}  // namespace tropnewton
