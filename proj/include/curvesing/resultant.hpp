#pragma once

#include <vector>

#include "curvesing/biform.hpp"
#include "curvesing/polydet.hpp"

namespace curvesing {

/// Sylvester matrix of f, g given by coefficient vectors ascending in s.
/// Rows are s^(N-1) .. s^0 with N = deg f + deg g; columns are deg g shifts of f
/// (lowest first) followed by deg f shifts of g.
template <class T>
Matrix<T> sylvester_matrix(const std::vector<T>& f, const std::vector<T>& g, const T& zero) {
  require(!f.empty() && !g.empty(), ErrorKind::Invariant, "resmat", "empty coefficient vector");
  const std::size_t df = f.size() - 1, dg = g.size() - 1, n = df + dg;
  Matrix<T> m(n, n, zero);
  for (std::size_t k = 0; k < dg; ++k)
    for (std::size_t i = 0; i <= df; ++i) m(n - 1 - (i + k), k) = f[i];
  for (std::size_t k = 0; k < df; ++k)
    for (std::size_t i = 0; i <= dg; ++i) m(n - 1 - (i + k), dg + k) = g[i];
  m.set_kind(MatrixKind::Sylvester);
  return m;
}

/// Bezout matrix of two polynomials of the same degree n, from the Cayley
/// quotient (f(s)g(y) - f(y)g(s)) / (s - y). Entry (r, c) is the coefficient of
/// s^(n-1-r) y^(n-1-c).
template <class T>
Matrix<T> bezout_matrix(const std::vector<T>& f, const std::vector<T>& g, const T& zero) {
  require(f.size() == g.size() && f.size() >= 2, ErrorKind::Invariant, "resmat", "bezout inputs need equal degree >= 1");
  const std::size_t n = f.size() - 1;
  Matrix<T> m(n, n, zero);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 0; b < a; ++b) {
      T w = f[a] * g[b] - f[b] * g[a];
      for (std::size_t l = 0; l < a - b; ++l) {
        const std::size_t ps = b + l, py = a - 1 - l;
        m(n - 1 - ps, n - 1 - py) += w;
      }
    }
  return m;
}

/// Resultant of two binary forms over Q, using their declared degrees.
inline Rat resultant(const BiHomPoly& f, const BiHomPoly& g, bool* zero_input = nullptr) {
  require(f.vars() == g.vars(), ErrorKind::Invariant, "polycore", "resultant: variable pair mismatch");
  if (zero_input) *zero_input = f.is_zero() || g.is_zero();
  if (f.degree() == 0 && g.degree() == 0) return Rat(1);
  if (f.degree() == 0) return pow(f.coeff(0), static_cast<unsigned>(g.degree()));
  if (g.degree() == 0) return pow(g.coeff(0), static_cast<unsigned>(f.degree()));
  return det(sylvester_matrix(f.coeffs(), g.coeffs(), Rat(0)));
}

/// Resultant in (s,v) of two bihomogeneous forms; a form in (t,u).
inline BiHomPoly resultant(const BiForm& f, const BiForm& g) {
  require(f.s_degree() >= 1 && g.s_degree() >= 1, ErrorKind::Invariant, "polycore", "resultant of a form of s-degree 0");
  HomMatrix m = sylvester_matrix(f.s_coeffs(), g.s_coeffs(), BiHomPoly::zero(f.t_degree(), VarPair::TU));
  // Zero entries in the g block carry g's degree so columns stay graded.
  for (std::size_t j = static_cast<std::size_t>(g.s_degree()); j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j).is_zero()) m(i, j) = BiHomPoly::zero(g.t_degree(), VarPair::TU);
  return det_hom(m);
}

/// First principal subresultant coefficient from an n x n Sylvester matrix of
/// forms of degrees m and n - m: the (n-2)-minor on rows s^(n-2) .. s^1 that
/// drops the highest shift of each column block.
inline BiHomPoly first_principal_subresultant_minor(const HomMatrix& s, int m) {
  const int n = static_cast<int>(s.rows());
  require(s.is_square() && n >= 3 && m >= 1 && m <= n - 1, ErrorKind::Input, "polycore",
          "subresultant minor needs a square Sylvester matrix of size >= 3");
  std::vector<std::size_t> rows, cols;
  for (int r = 1; r <= n - 2; ++r) rows.push_back(static_cast<std::size_t>(r));
  const int first_block = n - m;  // shifts of the degree-m form
  for (int c = 0; c < n; ++c)
    if (c != first_block - 1 && c != n - 1) cols.push_back(static_cast<std::size_t>(c));
  return det_hom(s.submatrix(rows, cols));
}

/// f / u^k (second variable); throws if not divisible.
inline BiHomPoly div_second_power(const BiHomPoly& f, int k) {
  require(k <= f.degree() && f.second_valuation() >= k, ErrorKind::Invariant, "polycore", "form not divisible by the requested power");
  std::vector<Rat> c(f.coeffs().begin(), f.coeffs().end() - k);
  return BiHomPoly(f.degree() - k, std::move(c), f.vars());
}

}  // namespace curvesing
