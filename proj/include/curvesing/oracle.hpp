#pragma once

#include <cstdint>
#include <vector>

#include "curvesing/linalg.hpp"
#include "curvesing/mubasis.hpp"
#include "curvesing/polydet.hpp"
#include "curvesing/resmat.hpp"
#include "curvesing/resultant.hpp"

namespace curvesing {

struct OracleConfig {
  std::size_t max_enum_size = 8;
  int sample_count = 5;
  std::uint64_t seed = 0;
};

/// D[i] = gcd of all i x i minors, by enumeration with Bareiss determinants.
inline std::vector<UniPoly> minor_gcd_chain(const PolyMatrix& a, const OracleConfig& cfg = {}) {
  require(cfg.max_enum_size >= 2, ErrorKind::Input, "oracle", "max_enum_size must be at least 2");
  require(std::max(a.rows(), a.cols()) <= cfg.max_enum_size, ErrorKind::Input, "oracle",
          "matrix exceeds the minor enumeration guard (" + std::to_string(cfg.max_enum_size) + ")");
  std::vector<UniPoly> chain{UniPoly::constant(Rat(1))};
  for (std::size_t i = 1; i <= std::min(a.rows(), a.cols()); ++i) {
    UniPoly g;
    for (const auto& rs : combinations(a.rows(), i))
      for (const auto& cs : combinations(a.cols(), i)) g = poly_gcd(g, det_bareiss(a.submatrix(rs, cs)));
    chain.push_back(g.is_zero() ? g : normalize_primitive(g));
  }
  return chain;
}

/// Invariant factors from a divisor chain; zero once the chain hits zero.
inline std::vector<UniPoly> invariant_factors(const std::vector<UniPoly>& chain) {
  std::vector<UniPoly> out;
  for (std::size_t i = 1; i < chain.size(); ++i)
    out.push_back(chain[i].is_zero() ? UniPoly{} : normalize_primitive(exact_div(chain[i], chain[i - 1])));
  return out;
}

inline std::size_t corank_at_parameter(const PolyMatrix& s, const Rat& t0) {
  RatMatrix m(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) m(i, j) = s(i, j).eval(t0);
  return std::min(s.rows(), s.cols()) - rank(m);
}

inline std::size_t corank_at_parameter(const HomMatrix& s, const Rat& t0, const Rat& u0 = Rat(1)) {
  RatMatrix m(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) m(i, j) = s(i, j).eval(t0, u0);
  return std::min(s.rows(), s.cols()) - rank(m);
}

namespace detail {

inline bool divides_or_zero(const UniPoly& g, const UniPoly& f) {
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  return divides(g, f);
}

}  // namespace detail

/// Checks alpha_i1..alpha_im beta_j1..beta_jm | gamma_(i1+j1-1)..gamma_(im+jm-m)
/// for m = 1, 2, where alpha, beta, gamma are the invariant factors of A, B, AB.
inline bool thompson_divisibility_probe(const PolyMatrix& a, const PolyMatrix& b, const OracleConfig& cfg = {}) {
  require(a.is_square() && b.is_square() && a.rows() == b.rows(), ErrorKind::Input, "oracle", "Thompson probe needs square matrices of one size");
  const int n = static_cast<int>(a.rows());
  const auto al = invariant_factors(minor_gcd_chain(a, cfg));
  const auto be = invariant_factors(minor_gcd_chain(b, cfg));
  const auto ga = invariant_factors(minor_gcd_chain(multiply(a, b, UniPoly{}), cfg));
  auto A = [&](int i) { return al[i - 1]; };
  auto B = [&](int i) { return be[i - 1]; };
  auto G = [&](int i) { return ga[i - 1]; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n + 1; ++j)
      if (!detail::divides_or_zero(A(i) * B(j), G(i + j - 1))) return false;
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2)
      for (int j1 = 1; j1 <= n; ++j1)
        for (int j2 = j1 + 1; j2 <= n; ++j2) {
          if (i2 + j2 > n + 2) continue;
          if (!detail::divides_or_zero(A(i1) * A(i2) * B(j1) * B(j2), G(i1 + j1 - 1) * G(i2 + j2 - 2))) return false;
        }
  return true;
}

/// Delta(t,1) as Res_(s,v) of the (su - tv)-quotients of the moving forms,
/// with a Bareiss determinant at u = 1.
inline UniPoly delta_via_diagonal_resultant(const Parameterization& phi, const MuBasis& b) {
  const MovingForms m = build_moving_forms(phi, b);
  const BiForm p = m.p_phi.div_diagonal(), q = m.q_phi.div_diagonal();
  auto at_u1 = [](const BiForm& f) {
    std::vector<UniPoly> c;
    for (const auto& x : f.s_coeffs()) c.push_back(x.dehomogenize());
    return c;
  };
  UniPoly r;
  if (p.s_degree() == 0) {
    r = pow(p.s_coeff(0).dehomogenize(), q.s_degree());
  } else {
    r = det_bareiss(sylvester_matrix(at_u1(p), at_u1(q), UniPoly{}));
  }
  return r.is_zero() ? r : normalize_primitive(r);
}

}  // namespace curvesing
