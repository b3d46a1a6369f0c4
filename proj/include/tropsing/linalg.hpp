/**
 * Small exact dense routines on Eigen matrices with field scalars:
 * fraction-free style Gaussian elimination for rank, determinant, unique
 * solve and one-dimensional nullspace.  Sizes here are tiny (n <= 7), so
 * plain elimination with exact pivots is all that is needed.
 */

#ifndef TROPSING_LINALG_HPP
#define TROPSING_LINALG_HPP

#include "tropsing/rational.hpp"

#include <algorithm>
#include <optional>

namespace tropsing {

template <typename S>
int rank_of(Mat<S> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, col) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      S f = m(i, col) / m(r, col);
      m.row(i) -= f * m.row(r);
    }
    ++r;
  }
  return r;
}

template <typename S>
S det_of(Mat<S> m) {
  const Eigen::Index n = m.rows();
  S result = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (m(i, col) != 0) { pivot = i; break; }
    if (pivot < 0) return S(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      result = -result;
    }
    result *= m(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      S f = m(i, col) / m(col, col);
      m.row(i) -= f * m.row(col);
    }
  }
  return result;
}

/// Unique solution of the square system A x = b, or nullopt when A is
/// singular.
template <typename S>
std::optional<Vec<S>> solve_unique(Mat<S> a, Vec<S> b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (a(i, col) != 0) { pivot = i; break; }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      std::swap(b(pivot), b(col));
    }
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      S f = a(i, col) / a(col, col);
      a.row(i) -= f * a.row(col);
      b(i) -= f * b(col);
    }
  }
  Vec<S> x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    S acc = b(i);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= a(i, j) * x(j);
    x(i) = acc / a(i, i);
  }
  return x;
}

/// A nonzero vector spanning ker(A) when that kernel is one-dimensional,
/// nullopt otherwise.
template <typename S>
std::optional<Vec<S>> nullspace_direction(Mat<S> a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, col) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(r));
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, col) == 0) continue;
      S f = a(i, col) / a(r, col);
      a.row(i) -= f * a.row(r);
    }
    pivot_col.push_back(col);
    ++r;
  }
  if (cols - r != 1) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index c : pivot_col) is_pivot[c] = true;
  Eigen::Index free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  Vec<S> x = Vec<S>::Zero(cols);
  x(free_col) = 1;
  for (Eigen::Index i = 0; i < r; ++i)
    x(pivot_col[i]) = -a(i, free_col) / a(i, pivot_col[i]);
  return x;
}

inline bool lex_less(const RatVec& a, const RatVec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

/// Scales a nonzero rational vector to the unique primitive integer vector
/// on the same ray (positive multiple, integer entries, gcd 1).
RatVec primitive(const RatVec& v);

/// Canonical order for vertex sets and deterministic output.
void sort_lex(std::vector<RatVec>& pts);

}  // namespace tropsing

#endif  // TROPSING_LINALG_HPP
