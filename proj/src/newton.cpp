#include "tropnewton/newton.hpp"

#include <algorithm>

#include "tropnewton/error.hpp"

namespace tropnewton {

namespace {

// Sign of the cross product (b - a) x (c - a); >= 0 means b is on or above ac.
int turn(const HullVertex& a, const HullVertex& b, const HullVertex& c) {
  Rat lhs = Rat(b.index - a.index) * (c.value - a.value);
  Rat rhs = Rat(c.index - a.index) * (b.value - a.value);
  return sgn(Rat(lhs - rhs));
}

// Weights of x_0..x_{k-1} padded with zeros to the ring length.
WeightVec padded(std::span<const Rat> w, size_t k, size_t n) {
  if (w.size() != k) {
    throw Error(ErrorKind::LengthMismatch,
                "expected " + std::to_string(k) + " prefix weights, got " + std::to_string(w.size()));
  }
  WeightVec out(w.begin(), w.end());
  out.resize(n, Rat(0));
  return out;
}

}  // namespace

NewtonPolygon lower_hull(const std::vector<std::pair<long, ExtRat>>& points) {
  std::vector<HullVertex> pts;
  for (const auto& [i, v] : points) {
    if (v.is_finite()) pts.push_back({i, v.value()});
  }
  std::sort(pts.begin(), pts.end(), [](const HullVertex& a, const HullVertex& b) {
    return a.index != b.index ? a.index < b.index : a.value < b.value;
  });
  NewtonPolygon P;
  auto& h = P.vertices;
  for (const auto& p : pts) {
    if (!h.empty() && h.back().index == p.index) continue;  // keep the lowest value per index
    while (h.size() >= 2 && turn(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  return P;
}

NewtonPolygon newton_polygon(const std::vector<Scalar>& coeffs, const Field& field) {
  if (coeffs.empty() || coeffs.front().is_zero()) {
    throw Error(ErrorKind::ZeroConstantTerm, "constant coefficient vanishes, so 0 is a root");
  }
  std::vector<std::pair<long, ExtRat>> pts;
  for (size_t i = 0; i < coeffs.size(); ++i) pts.emplace_back(static_cast<long>(i), field.val(coeffs[i]));
  return lower_hull(pts);
}

NewtonPolygon newton_polygon(const MPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Newton polygon of the zero polynomial");
  size_t var = f.max_variable().value_or(0);
  return newton_polygon(univariate_coefficients(f, var), f.field());
}

SlopeSet lambda(const NewtonPolygon& P) {
  if (P.vertices.size() < 2) throw Error(ErrorKind::DegeneratePolygon, "Newton polygon has zero width");
  SlopeSet out;
  for (size_t i = 0; i + 1 < P.vertices.size(); ++i) {
    const auto& a = P.vertices[i];
    const auto& b = P.vertices[i + 1];
    long width = b.index - a.index;
    out.push_back({Rat(-(b.value - a.value) / width), width});
  }
  return out;
}

NewtonPolygon expected_polygon(const MPoly& f, size_t k, std::span<const Rat> w) {
  WeightVec full = padded(w, k, f.nvars());
  auto cs = coefficients_wrt(f, k);
  if (cs.front().is_zero()) {
    throw Error(ErrorKind::ZeroConstantTerm, "coefficient of " + f.ring()->vars[k] + "^0 vanishes");
  }
  std::vector<std::pair<long, ExtRat>> pts;
  for (size_t i = 0; i < cs.size(); ++i) pts.emplace_back(static_cast<long>(i), trop_eval(cs[i], full));
  return lower_hull(pts);
}

bool is_unique_at(const MPoly& f, size_t k, std::span<const Rat> w) {
  NewtonPolygon P = expected_polygon(f, k, w);
  WeightVec full = padded(w, k, f.nvars());
  auto cs = coefficients_wrt(f, k);
  return std::all_of(P.vertices.begin(), P.vertices.end(), [&](const HullVertex& v) {
    return is_monomial(initial_form(cs[static_cast<size_t>(v.index)], full));
  });
}

}  // namespace tropnewton
