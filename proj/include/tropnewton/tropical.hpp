#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropnewton/groebner.hpp"
#include "tropnewton/newton.hpp"
#include "tropnewton/roots.hpp"
#include "tropnewton/triangular.hpp"

namespace tropnewton {

struct LevelRecord {
  size_t level;
  NewtonPolygon polygon;  // expected polygon, or certified polygon at a root
  Rat chosen;
  bool unique;
  std::optional<long> fallback_precision;  // set when a root prefix was computed
};

using ChoiceTrace = std::vector<LevelRecord>;

struct TracedPoint {
  WeightVec point;
  ChoiceTrace trace;
  size_t component = 0;  // index into the triangular decomposition
};

struct ZeroDimConfig {
  PrecisionSchedule schedule;
};

/// One point of Trop(<F>), choosing the largest valuation at every level.
/// Non-unique levels compute a root prefix and its certified polygon.
/// NonTorusVariety when some polygon shows a root on a coordinate hyperplane.
TracedPoint zero_dim_point(const TriangularSet& F, const ZeroDimConfig& cfg = {});

/// Every choice and every root branch, deduplicated and sorted by point.
std::vector<TracedPoint> zero_dim_variety(const TriangularSet& F, const ZeroDimConfig& cfg = {});

struct ZeroDimResult {
  std::vector<TriangularSet> components;
  std::vector<TracedPoint> points;  // union over components, sorted by point
};

/// zero_dim_variety on gens if they already form a triangular set, else on
/// each component of the triangular decomposition.
ZeroDimResult zero_dim_ideal(const RingPtr& ring, const std::vector<MPoly>& gens, const ZeroDimConfig& cfg = {},
                             const GroebnerOptions& opts = {});

struct StartingPointConfig {
  std::uint64_t seed = 0;
  long max_attempts = 20;
  bool pure_powers = false;
  long unit_bound = 100;
  /// Used for the first attempt instead of a random substitution; entries
  /// follow the independent variables in ascending index order.
  std::optional<std::vector<Scalar>> substitution;
  /// Valuations for the first attempt (units stay random unless pure_powers).
  std::optional<WeightVec> weight;
  ZeroDimConfig zero_dim;
  GroebnerOptions groebner;
};

struct StartingPointWitness {
  std::vector<size_t> independent;
  std::vector<Scalar> substitution;
  TriangularSet component;
  ChoiceTrace trace;
  long attempts = 0;
  std::vector<std::vector<Scalar>> rejected;  // substitutions failing the torus check
};

struct StartingPoint {
  WeightVec point;
  StartingPointWitness witness;
};

/// A point of Trop(I) outside the homogeneity space, found by slicing with
/// random affine hyperplanes x_i = c_i on a maximal independent set.
StartingPoint starting_point(const RingPtr& ring, const std::vector<MPoly>& gens, const StartingPointConfig& cfg = {});

struct LinkConfig {
  std::uint64_t seed = 0;
  bool precondition = false;
  bool paper_exact = false;
  unsigned jobs = 1;
  ZeroDimConfig zero_dim;
  GroebnerOptions groebner;
};

struct SliceRecord {
  size_t coordinate;
  Rat exponent;
  std::vector<WeightVec> vectors;  // assembled full-length vectors
};

struct RaySet {
  LinearSubspace lineality;
  std::vector<size_t> transversal;  // coordinates set to t
  WeightVec base;                   // point of the lineality space, 1 on the transversal
  std::vector<std::vector<Int>> rays;
  std::vector<std::pair<size_t, Rat>> sources;  // slice that first produced each ray
  std::vector<SliceRecord> slices;
  std::vector<std::string> warnings;
  std::vector<std::vector<long>> unimodular;  // preconditioning matrix, empty if unused

  size_t valency() const { return rays.size(); }
};

/// Primitive integer representative of the ray through v modulo the
/// subspace: the orthogonal projection, scaled positively. nullopt if v lies
/// in the subspace.
std::optional<std::vector<Int>> canonical_ray(const LinearSubspace& lineality, const WeightVec& v);

/// Rays of Trop(I) modulo C_0(I) for I whose tropical variety is
/// combinatorially a curve. Slices x_j = t^(z_j -+ 1) around the base point
/// z, or t^(-+1) with paper_exact.
RaySet tropical_link(const RingPtr& ring, const std::vector<MPoly>& gens, const LinkConfig& cfg = {});

struct VerificationItem {
  WeightVec point;
  bool prevariety;
  std::optional<bool> tropical;  // only for constant-coefficient homogeneous input
};

struct VerificationReport {
  std::vector<VerificationItem> items;
  bool passed() const;
};

/// True when is_in_tropical_variety applies: Puiseux field, rational
/// coefficients and homogeneous generators.
bool supports_membership_test(const std::vector<MPoly>& gens);

VerificationReport verify_output(const RingPtr& ring, const std::vector<MPoly>& gens,
                                 const std::vector<WeightVec>& points, const GroebnerOptions& opts = {});

}  // namespace tropnewton
