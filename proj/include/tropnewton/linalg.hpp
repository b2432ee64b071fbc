#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tropnewton/error.hpp"
#include "tropnewton/rational.hpp"

namespace tropnewton::linalg {

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Reduced row echelon form in place; returns pivot columns in row order.
template <class F>
std::vector<size_t> rref(Matrix<F>& a, size_t ncols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < a.size(); ++col) {
    size_t p = row;
    while (p < a.size() && is_zero(a[p][col])) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const F inv = F(1) / a[row][col];
    for (size_t j = col; j < ncols; ++j) a[row][j] *= inv;
    for (size_t r = 0; r < a.size(); ++r) {
      if (r == row || is_zero(a[r][col])) continue;
      const F factor = a[r][col];
      for (size_t j = col; j < ncols; ++j) {
        if (!is_zero(a[row][j])) a[r][j] -= factor * a[row][j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return pivots;
}

/// Basis of {x : A x = 0}; one vector per free column, in column order.
template <class F>
Matrix<F> nullspace(Matrix<F> a, size_t ncols) {
  auto pivots = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  Matrix<F> basis;
  for (size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(ncols, F(0));
    v[free] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
size_t rank(Matrix<F> a, size_t ncols) {
  return rref(a, ncols).size();
}

/// Some x with A x = b, or nullopt if the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b, size_t ncols) {
  Matrix<F> aug = a;
  for (size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto pivots = rref(aug, ncols + 1);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  std::vector<F> x(ncols, F(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][ncols];
  return x;
}

/// True iff v lies in the row span of basis.
inline bool in_span(const Matrix<Rat>& basis, const std::vector<Rat>& v) {
  if (basis.empty()) {
    for (const auto& x : v) {
      if (!is_zero(x)) return false;
    }
    return true;
  }
  Matrix<Rat> m = basis;
  size_t r0 = rank(m, v.size());
  m.push_back(v);
  return rank(m, v.size()) == r0;
}

/// Orthogonal projection of v onto the complement of span(basis), via the
/// normal equations (B B^T) c = B v.
inline std::vector<Rat> project_orthogonal(const Matrix<Rat>& basis, const std::vector<Rat>& v) {
  if (basis.empty()) return v;
  const size_t k = basis.size();
  Matrix<Rat> gram(k, std::vector<Rat>(k));
  std::vector<Rat> rhs(k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      Rat s = 0;
      for (size_t c = 0; c < v.size(); ++c) s += basis[i][c] * basis[j][c];
      gram[i][j] = s;
    }
    Rat s = 0;
    for (size_t c = 0; c < v.size(); ++c) s += basis[i][c] * v[c];
    rhs[i] = s;
  }
  auto coeffs = solve(gram, rhs, k);
  if (!coeffs) throw Error(ErrorKind::InvalidArgument, "projection basis is not independent");
  std::vector<Rat> out = v;
  for (size_t i = 0; i < k; ++i) {
    for (size_t c = 0; c < v.size(); ++c) out[c] -= (*coeffs)[i] * basis[i][c];
  }
  return out;
}

}  // namespace tropnewton::linalg
