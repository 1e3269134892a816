#pragma once

#include <algorithm>
#include <vector>

#include "curvesing/bihom.hpp"
#include "curvesing/linalg.hpp"
#include "curvesing/matrix.hpp"
#include "curvesing/unipoly.hpp"

namespace curvesing {

using PolyMatrix = Matrix<UniPoly>;
using HomMatrix = Matrix<BiHomPoly>;

/// Upper bound on the degree of det(A): the smaller of the row-wise and
/// column-wise sums of maximal entry degrees.
inline int det_degree_bound(const PolyMatrix& a) {
  long rows = 0, cols = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    int m = -1;
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, a(i, j).degree());
    if (m < 0) return -1;
    rows += m;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    int m = -1;
    for (std::size_t i = 0; i < a.rows(); ++i) m = std::max(m, a(i, j).degree());
    if (m < 0) return -1;
    cols += m;
  }
  return static_cast<int>(std::min(rows, cols));
}

/// Interpolation nodes 0, 1, -1, 2, -2, ...
inline Rat interpolation_node(int i) {
  return (i % 2 == 1) ? Rat((i + 1) / 2) : Rat(-(i / 2));
}

/// Newton interpolation through (x_i, y_i), returned in monomial form.
inline UniPoly interpolate(const std::vector<Rat>& xs, std::vector<Rat> ys) {
  const std::size_t n = xs.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
  UniPoly p;
  for (std::size_t i = n; i-- > 0;) {
    p = p * UniPoly(std::vector<Rat>{-xs[i], Rat(1)});
    p += UniPoly::constant(ys[i]);
  }
  return p;
}

/// Determinant of a polynomial matrix by evaluation at deg+1 integer nodes and
/// interpolation.
inline UniPoly det_interp(const PolyMatrix& a) {
  require(a.is_square(), ErrorKind::Invariant, "polycore", "determinant of a non-square matrix");
  if (a.rows() == 0) return UniPoly::constant(Rat(1));
  const int bound = det_degree_bound(a);
  if (bound < 0) return {};
  std::vector<Rat> xs, ys;
  for (int i = 0; i <= bound; ++i) {
    Rat x = interpolation_node(i);
    xs.push_back(x);
    ys.push_back(det(a.map([&](const UniPoly& p) { return p.eval(x); })));
  }
  return interpolate(xs, ys);
}

/// Fraction-free Bareiss elimination over Q[t] with exact polynomial division.
inline UniPoly det_bareiss(PolyMatrix a) {
  require(a.is_square(), ErrorKind::Invariant, "polycore", "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return UniPoly::constant(Rat(1));
  bool negate = false;
  UniPoly prev = UniPoly::constant(Rat(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return {};
      a.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

/// Degree of every entry in column j, required to be uniform; -1 if it is not.
inline int uniform_column_degree(const HomMatrix& a, std::size_t j) {
  int d = a(0, j).degree();
  for (std::size_t i = 1; i < a.rows(); ++i)
    if (a(i, j).degree() != d) return -1;
  return d;
}

inline int uniform_row_degree(const HomMatrix& a, std::size_t i) {
  int d = a(i, 0).degree();
  for (std::size_t j = 1; j < a.cols(); ++j)
    if (a(i, j).degree() != d) return -1;
  return d;
}

/// Total degree of det(A) for a matrix with uniform column (or row) degrees.
inline int hom_det_degree(const HomMatrix& a) {
  int total = 0;
  bool ok = true;
  for (std::size_t j = 0; j < a.cols() && ok; ++j) {
    int d = uniform_column_degree(a, j);
    ok = d >= 0;
    total += d;
  }
  if (ok) return total;
  total = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    int d = uniform_row_degree(a, i);
    require(d >= 0, ErrorKind::Invariant, "polycore", "matrix entries are not graded by rows or columns");
    total += d;
  }
  return total;
}

inline PolyMatrix dehomogenize(const HomMatrix& a) {
  return a.map([](const BiHomPoly& f) { return f.dehomogenize(); });
}

inline PolyMatrix dehomogenize_first(const HomMatrix& a) {
  return a.map([](const BiHomPoly& f) { return f.dehomogenize_first(); });
}

inline HomMatrix apply_moebius(const HomMatrix& a, const MoebiusChange& m) {
  return a.map([&](const BiHomPoly& f) { return apply_moebius(f, m); });
}

/// Determinant of a homogeneous matrix, computed at u = 1 and rehomogenised.
inline BiHomPoly det_hom(const HomMatrix& a) {
  require(a.is_square() && a.rows() > 0, ErrorKind::Invariant, "polycore", "determinant of an empty or non-square matrix");
  const int d = hom_det_degree(a);
  UniPoly p = det_interp(dehomogenize(a));
  return BiHomPoly::homogenize(p, d, a(0, 0).vars());
}

}  // namespace curvesing
