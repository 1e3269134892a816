#pragma once

#include <vector>

#include "curvesing/biform.hpp"
#include "curvesing/mubasis.hpp"
#include "curvesing/resultant.hpp"
#include "curvesing/ternary.hpp"

namespace curvesing {

/// p_phi = sum p_i(s,v) x_i(t,u) and likewise q_phi.
struct MovingForms {
  BiForm p_phi, q_phi;
  int mu = 0, n = 0;
};

inline MovingForms build_moving_forms(const Parameterization& phi, const MuBasis& b) {
  MovingForms m;
  m.n = phi.degree();
  m.mu = b.mu;
  const Triple x = phi.forms_tu();
  m.p_phi = contract({b.p[0], b.p[1], b.p[2]}, {x[0], x[1], x[2]});
  m.q_phi = contract({b.q[0], b.q[1], b.q[2]}, {x[0], x[1], x[2]});
  // Both must vanish on the diagonal; div_diagonal throws otherwise.
  try {
    (void)m.p_phi.div_diagonal();
    (void)m.q_phi.div_diagonal();
  } catch (const Error&) {
    fail(ErrorKind::Invariant, "resmat", "moving form is not divisible by s*u - t*v; the mu-basis is invalid");
  }
  return m;
}

/// Sylvester matrix of (p_phi, q_phi) in (s,v): n x n, entries of degree n in (t,u).
inline HomMatrix build_sylvester(const MovingForms& m) {
  return sylvester_matrix(m.p_phi.s_coeffs(), m.q_phi.s_coeffs(), BiHomPoly::zero(m.n, VarPair::TU));
}

/// The family psi_j between Sylvester (j = 0) and hybrid Bezout (j = deg g).
/// f, g are coefficient lists ascending in s with deg f >= deg g >= 1.
/// Columns: p_(m-j) .. p_(m-1), then m - j shifts of f, then deg f - j shifts of g,
/// where p_k = g_k f - f_k g and f_k, g_k drop the lowest m - k coefficients.
inline HomMatrix build_hybrid(const std::vector<BiHomPoly>& f, const std::vector<BiHomPoly>& g, int j) {
  const int nf = static_cast<int>(f.size()) - 1, m = static_cast<int>(g.size()) - 1;
  require(m >= 1 && nf >= m, ErrorKind::Input, "resmat", "hybrid matrix needs deg f >= deg g >= 1");
  require(j >= 0 && j <= m, ErrorKind::Input, "resmat", "hybrid index j out of range [0, deg g]");
  const int size = m + nf - j;
  const int df = f[0].degree(), dg = g[0].degree();
  HomMatrix out(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  auto put = [&](int col, const std::vector<BiHomPoly>& c, int shift, int deg) {
    for (int r = 0; r < size; ++r) out(static_cast<std::size_t>(r), static_cast<std::size_t>(col)) = BiHomPoly::zero(deg, VarPair::TU);
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
      if (c[i].is_zero()) continue;
      const int power = i + shift;
      require(power < size, ErrorKind::Invariant, "resmat", "hybrid column exceeds the monomial basis");
      out(static_cast<std::size_t>(size - 1 - power), static_cast<std::size_t>(col)) = c[i];
    }
  };
  int col = 0;
  for (int k = m - j; k <= m - 1; ++k) {
    const int cut = m - k;
    // p_k = g_k f - f_k g, with f_k = sum_{i >= cut} f_i s^(i - cut), same for g_k.
    std::vector<BiHomPoly> pk(static_cast<std::size_t>(nf + k + 1), BiHomPoly::zero(df + dg, VarPair::TU));
    for (int a = cut; a <= m; ++a)
      for (int i = 0; i <= nf; ++i) pk[a - cut + i] += g[a] * f[i];
    for (int a = cut; a <= nf; ++a)
      for (int i = 0; i <= m; ++i) pk[a - cut + i] -= f[a] * g[i];
    put(col++, pk, 0, df + dg);
  }
  for (int sh = 0; sh < m - j; ++sh) put(col++, f, sh, df);
  for (int sh = 0; sh < nf - j; ++sh) put(col++, g, sh, dg);
  out.set_kind(MatrixKind::Hybrid);
  return out;
}

/// psi_j for the moving forms, with f = q_phi and g = p_phi.
inline HomMatrix build_hybrid(const MovingForms& m, int j) {
  return build_hybrid(m.q_phi.s_coeffs(), m.p_phi.s_coeffs(), j);
}

/// F = a(s,v)c(t,u) - a(t,u)c(s,v), G likewise with b, and their quotients by (su - tv).
struct DiagonalQuotients {
  BiForm F, G, P, Q;
};

inline DiagonalQuotients diagonal_quotients(const Parameterization& phi) {
  const Triple x = phi.forms_tu();
  DiagonalQuotients d;
  d.F = BiForm::outer(phi.a, x[2]) - BiForm::outer(phi.c, x[0]);
  d.G = BiForm::outer(phi.b, x[2]) - BiForm::outer(phi.c, x[1]);
  d.P = d.F.div_diagonal();
  d.Q = d.G.div_diagonal();
  return d;
}

/// Bezout matrix in (s,v) of F and G; n x n with entries of degree 2n in (t,u).
inline HomMatrix build_bezout_FG(const Parameterization& phi) {
  const DiagonalQuotients d = diagonal_quotients(phi);
  HomMatrix b = bezout_matrix(d.F.s_coeffs(), d.G.s_coeffs(), BiHomPoly::zero(2 * phi.degree(), VarPair::TU));
  b.set_kind(MatrixKind::BezoutFG);
  return b;
}

using FormMatrix = Matrix<TernaryForm>;

/// Sylvester matrix of p . x and q . x with entries linear in x.
inline FormMatrix symbolic_sylvester(const MuBasis& b) {
  auto coeffs = [](const Triple& g) {
    std::vector<TernaryForm> c;
    for (int i = 0; i <= g[0].degree(); ++i) c.push_back(TernaryForm::linear(g[0].coeff(i), g[1].coeff(i), g[2].coeff(i)));
    return c;
  };
  return sylvester_matrix(coeffs(b.p), coeffs(b.q), TernaryForm{});
}

struct SymbolicBezout {
  FormMatrix B;      // Bezout matrix of a x3 - c x1 and b x3 - c x2
  FormMatrix A;      // B / x3, linear in x
  RatMatrix N;       // A = N * S^T
  bool divisible_by_x3 = false;
};

namespace detail {

inline RatMatrix linear_part(const FormMatrix& m, int k) {
  TernaryForm::Exponent e{0, 0, 0};
  e[k] = 1;
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).coeff(e);
  return r;
}

}  // namespace detail

/// Symbolic Bezout matrix and the constant N with B = x3 * N * S^T.
/// Throws when N does not exist or is singular (gcd(a, b, c) != 1).
inline SymbolicBezout build_symbolic_bezout(const Parameterization& phi, const MuBasis& mb) {
  const int n = phi.degree();
  std::vector<TernaryForm> f, g;
  const TernaryForm x1 = TernaryForm::variable(0), x2 = TernaryForm::variable(1), x3 = TernaryForm::variable(2);
  for (int i = 0; i <= n; ++i) {
    f.push_back(x3 * phi.a.coeff(i) - x1 * phi.c.coeff(i));
    g.push_back(x3 * phi.b.coeff(i) - x2 * phi.c.coeff(i));
  }
  SymbolicBezout out;
  out.B = bezout_matrix(f, g, TernaryForm{});
  out.B.set_kind(MatrixKind::SymbolicBezout);
  out.divisible_by_x3 = true;
  for (std::size_t i = 0; i < out.B.rows(); ++i)
    for (std::size_t j = 0; j < out.B.cols(); ++j) out.divisible_by_x3 = out.divisible_by_x3 && out.B(i, j).divisible_by_x3();
  require(out.divisible_by_x3, ErrorKind::Invariant, "resmat", "symbolic Bezout entries are not divisible by x3");
  out.A = out.B.map([](const TernaryForm& e) { return e.div_x3(); });

  // Solve N * T_k = A_k for k = 1, 2, 3 at once, where T = S^T.
  const FormMatrix st = symbolic_sylvester(mb).transpose();
  const std::size_t sz = static_cast<std::size_t>(n);
  RatMatrix sys(3 * sz, 2 * sz);  // rows: (T^T | A^T) stacked over k
  for (int k = 0; k < 3; ++k) {
    const RatMatrix tk = detail::linear_part(st, k), ak = detail::linear_part(out.A, k);
    for (std::size_t r = 0; r < sz; ++r)
      for (std::size_t c = 0; c < sz; ++c) {
        sys(k * sz + r, c) = tk(c, r);
        sys(k * sz + r, sz + c) = ak(c, r);
      }
  }
  Echelon e = rref(sys);
  require(e.pivots.size() == sz && e.pivots.back() == sz - 1, ErrorKind::Degenerate, "resmat",
          "no constant N with B = x3 * N * S^T (gcd(a, b, c) != 1?)");
  out.N = RatMatrix(sz, sz);
  for (std::size_t r = 0; r < sz; ++r)
    for (std::size_t c = 0; c < sz; ++c) out.N(c, r) = e.reduced(r, sz + c);
  require(det(out.N) != 0, ErrorKind::Degenerate, "resmat", "N is singular (gcd(a, b, c) != 1?)");
  return out;
}

/// Entrywise substitution x -> (a, b, c)(t,u) of a matrix of forms in x.
inline HomMatrix substitute(const FormMatrix& m, const Parameterization& phi) {
  const Triple x = phi.forms_tu();
  const int d = [&] {
    int k = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) k = std::max(k, m(i, j).degree());
    return k;
  }();
  return m.map([&](const TernaryForm& f) {
    if (f.is_zero()) return BiHomPoly::zero(d * phi.degree(), VarPair::TU);
    return f.substitute(x[0], x[1], x[2]);
  });
}

}  // namespace curvesing
