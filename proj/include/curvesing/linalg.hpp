#pragma once

#include <optional>
#include <vector>

#include "curvesing/matrix.hpp"
#include "curvesing/rational.hpp"

namespace curvesing {

using RatMatrix = Matrix<Rat>;

struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination. The first nonzero
/// entry of each column is the pivot, so results are deterministic.
inline Echelon rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

/// Kernel basis in echelon order: one vector per free column, ascending,
/// with a 1 in that free position.
inline std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant over Q: rows are scaled to integers, then fraction-free
/// Bareiss elimination runs over Z.
inline Rat det(const RatMatrix& m) {
  require(m.is_square(), ErrorKind::Invariant, "polycore", "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  Matrix<Int> a(n, n);
  Rat scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Int l(1);
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, m(i, j).get_den());
    scale *= Rat(l);
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Rat(0);
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  Rat d(a(n - 1, n - 1));
  if (sign < 0) d = -d;
  return d / scale;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  require(m.is_square(), ErrorKind::Invariant, "polycore", "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

}  // namespace curvesing
