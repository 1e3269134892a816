#pragma once

#include <array>
#include <string>
#include <vector>

#include "curvesing/bihom.hpp"
#include "curvesing/linalg.hpp"
#include "curvesing/polydet.hpp"
#include "curvesing/resultant.hpp"
#include "curvesing/ternary.hpp"

namespace curvesing {

using Triple = std::array<BiHomPoly, 3>;

/// (a : b : c) in (s,v), all of degree n >= 3 with no common factor.
struct Parameterization {
  BiHomPoly a, b, c;

  Parameterization() = default;
  Parameterization(BiHomPoly a_, BiHomPoly b_, BiHomPoly c_, int min_degree = 3)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    require(a.vars() == VarPair::SV && b.vars() == VarPair::SV && c.vars() == VarPair::SV, ErrorKind::Input, "mubasis",
            "parameterization must be given in (s,v)");
    require(a.degree() == b.degree() && b.degree() == c.degree(), ErrorKind::Input, "mubasis",
            "a, b, c must have the same degree");
    require(a.degree() >= min_degree, ErrorKind::Input, "mubasis",
            "degree " + std::to_string(a.degree()) + " is below the minimum " + std::to_string(min_degree));
    require(!a.is_zero() || !b.is_zero() || !c.is_zero(), ErrorKind::Degenerate, "mubasis", "all three forms vanish");
    require(bihom_gcd(bihom_gcd(a, b), c).degree() == 0, ErrorKind::Degenerate, "mubasis", "gcd(a, b, c) is not constant");
  }

  int degree() const { return a.degree(); }
  Triple forms() const { return {a, b, c}; }
  Triple forms_tu() const { return {a.with_vars(VarPair::TU), b.with_vars(VarPair::TU), c.with_vars(VarPair::TU)}; }
  /// Reparameterise by a change of coordinates of the source line.
  Parameterization compose(const MoebiusChange& m) const {
    return Parameterization(apply_moebius(a, m), apply_moebius(b, m), apply_moebius(c, m), 1);
  }
};

struct PointP2 {
  std::array<Rat, 3> x;

  bool is_zero() const { return x[0] == 0 && x[1] == 0 && x[2] == 0; }
  /// Projective equality: all 2x2 minors vanish.
  friend bool operator==(const PointP2& p, const PointP2& q) {
    return p.x[0] * q.x[1] == p.x[1] * q.x[0] && p.x[0] * q.x[2] == p.x[2] * q.x[0] && p.x[1] * q.x[2] == p.x[2] * q.x[1];
  }
  /// Representative with integer coprime coordinates and positive last nonzero entry.
  PointP2 normalized() const {
    require(!is_zero(), ErrorKind::Invariant, "mubasis", "zero projective point");
    UniPoly tmp(std::vector<Rat>{x[0], x[1], x[2]});
    Rat c = content(tmp);
    if (tmp.leading() < 0) c = -c;
    return {{x[0] / c, x[1] / c, x[2] / c}};
  }
};

inline PointP2 curve_point(const Parameterization& phi, const Rat& s, const Rat& v) {
  return PointP2{{phi.a.eval(s, v), phi.b.eval(s, v), phi.c.eval(s, v)}};
}

struct MuBasis {
  Triple p, q;
  int mu = 0;
};

inline BiHomPoly dot(const Triple& g, const Triple& x) {
  return g[0] * x[0] + g[1] * x[1] + g[2] * x[2];
}

/// Hilbert-Burch minors of the 2x3 matrix [p; q], in the order matching (a, b, c).
inline Triple hilbert_burch_minors(const MuBasis& b) {
  return {b.p[1] * b.q[2] - b.p[2] * b.q[1], b.p[2] * b.q[0] - b.p[0] * b.q[2], b.p[0] * b.q[1] - b.p[1] * b.q[0]};
}

namespace detail {

/// Matrix of (g1, g2, g3) -> g1 a + g2 b + g3 c on forms of degree d.
inline RatMatrix syzygy_system(const Parameterization& phi, int d) {
  const int n = phi.degree();
  const Triple x = phi.forms();
  RatMatrix m(static_cast<std::size_t>(n + d + 1), static_cast<std::size_t>(3 * (d + 1)));
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j <= d; ++j)
      for (int i = 0; i <= n; ++i) m(static_cast<std::size_t>(i + j), static_cast<std::size_t>(k * (d + 1) + j)) = x[k].coeff(i);
  return m;
}

inline Triple unpack(const std::vector<Rat>& v, int d) {
  Triple g;
  for (int k = 0; k < 3; ++k) g[k] = BiHomPoly(d, std::vector<Rat>(v.begin() + k * (d + 1), v.begin() + (k + 1) * (d + 1)));
  return g;
}

inline std::vector<Rat> pack(const Triple& g) {
  std::vector<Rat> v;
  for (const auto& f : g) v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
  return v;
}

/// Scale to integer entries with content 1 and a positive first nonzero entry.
inline std::vector<Rat> primitive_vector(std::vector<Rat> v) {
  Int num(0), den(1);
  for (const auto& x : v) {
    if (x == 0) continue;
    num = gcd(num, x.get_num());
    den = lcm(den, x.get_den());
  }
  if (num == 0) return v;
  Rat k(den, num);
  k.canonicalize();
  for (const auto& x : v)
    if (x != 0) {
      if (x < 0) k = -k;
      break;
    }
  for (auto& x : v) x *= k;
  return v;
}

}  // namespace detail

struct MuBasisReport {
  bool syzygy_p = false, syzygy_q = false, degrees = false, minors = false;
  Rat scalar{0};  // minors = scalar * (a, b, c)
  std::vector<std::string> failures;
  bool valid() const { return syzygy_p && syzygy_q && degrees && minors; }
};

inline MuBasisReport validate_mu_basis(const Parameterization& phi, const MuBasis& b) {
  MuBasisReport r;
  const Triple x = phi.forms();
  const int n = phi.degree();
  r.syzygy_p = dot(b.p, x).is_zero();
  r.syzygy_q = dot(b.q, x).is_zero();
  if (!r.syzygy_p) r.failures.push_back("p is not a syzygy of (a, b, c)");
  if (!r.syzygy_q) r.failures.push_back("q is not a syzygy of (a, b, c)");
  r.degrees = b.mu >= 1 && 2 * b.mu <= n;
  for (const auto& f : b.p) r.degrees = r.degrees && f.degree() == b.mu;
  for (const auto& f : b.q) r.degrees = r.degrees && f.degree() == n - b.mu;
  if (!r.degrees) {
    r.failures.push_back("degrees are not (mu, n - mu) with 1 <= mu <= n - mu");
    return r;
  }
  const Triple m = hilbert_burch_minors(b);
  for (int k = 0; k < 3 && r.scalar == 0; ++k)
    for (int i = 0; i <= n; ++i)
      if (x[k].coeff(i) != 0) {
        r.scalar = m[k].coeff(i) / x[k].coeff(i);
        break;
      }
  r.minors = r.scalar != 0;
  for (int k = 0; k < 3 && r.minors; ++k) r.minors = m[k] == x[k] * r.scalar;
  if (!r.minors) r.failures.push_back("2x2 minors of [p; q] are not a common multiple of (a, b, c)");
  return r;
}

/// mu-basis by linear algebra: mu is the least degree with a syzygy, p the
/// first kernel vector there; q is the first kernel vector in degree n - mu
/// that is not in the span of the multiples of p.
inline MuBasis compute_mu_basis(const Parameterization& phi) {
  const int n = phi.degree();
  for (int d = 1; 2 * d <= n; ++d) {
    auto ker = nullspace(detail::syzygy_system(phi, d));
    if (ker.empty()) continue;
    MuBasis b;
    b.mu = d;
    b.p = detail::unpack(detail::primitive_vector(ker[0]), d);
    const int e = n - d;
    std::vector<std::vector<Rat>> multiples;
    for (int i = 0; i <= e - d; ++i) {
      const BiHomPoly m = BiHomPoly::monomial(i, e - d - i);
      multiples.push_back(detail::pack({b.p[0] * m, b.p[1] * m, b.p[2] * m}));
    }
    auto rank_of = [](const std::vector<std::vector<Rat>>& rows) {
      RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
      return rank(m);
    };
    const std::size_t base = rank_of(multiples);
    for (const auto& cand : nullspace(detail::syzygy_system(phi, e))) {
      auto rows = multiples;
      rows.push_back(cand);
      if (rank_of(rows) == base) continue;
      b.q = detail::unpack(detail::primitive_vector(cand), e);
      if (validate_mu_basis(phi, b).valid()) return b;
    }
    fail(ErrorKind::Degenerate, "mubasis", "no second generator completes a mu-basis (gcd(a, b, c) != 1?)");
  }
  fail(ErrorKind::Degenerate, "mubasis", "no syzygy of degree <= n/2 (degenerate input)");
}

/// The implicit equation Res_(s,v)(p . x, q . x), a form of degree n in x.
/// Computed as a determinant after the substitution x1 = z, x2 = z^(n+1), x3 = 1,
/// which keeps exponents of degree-n forms apart.
inline TernaryForm implicit_equation(const MuBasis& b) {
  const int n = b.mu + b.q[0].degree();
  const std::array<UniPoly, 3> x{UniPoly::monomial(Rat(1), 1), UniPoly::monomial(Rat(1), n + 1), UniPoly::constant(Rat(1))};
  auto coeffs = [&](const Triple& g) {
    std::vector<UniPoly> c;
    for (int i = 0; i <= g[0].degree(); ++i) c.push_back(x[0] * g[0].coeff(i) + x[1] * g[1].coeff(i) + x[2] * g[2].coeff(i));
    return c;
  };
  UniPoly r = det_interp(sylvester_matrix(coeffs(b.p), coeffs(b.q), UniPoly{}));
  TernaryForm f;
  for (int e = 0; e <= r.degree(); ++e) {
    if (r.coeff(e) == 0) continue;
    const int i = e % (n + 1), j = e / (n + 1);
    require(i + j <= n, ErrorKind::Invariant, "mubasis", "implicit equation is not homogeneous of degree n");
    f.add_term({i, j, n - i - j}, r.coeff(e));
  }
  return f;
}

inline BiHomPoly specialize(const Triple& g, const PointP2& q) {
  return g[0] * q.x[0] + g[1] * q.x[1] + g[2] * q.x[2];
}

/// gcd of the mu-basis specialised at Q; its degree is the multiplicity of Q.
inline BiHomPoly h_invariant(const MuBasis& b, const PointP2& q) {
  require(!q.is_zero(), ErrorKind::Input, "mubasis", "zero projective point");
  return bihom_gcd(specialize(b.p, q), specialize(b.q, q));
}

/// Multiplicity m of any point satisfies m <= 1, 2 <= m <= mu, or m = n - mu.
inline bool multiplicity_range_check(int n, int mu, int m) {
  return m <= 1 || (m >= 2 && m <= mu) || m == n - mu;
}

}  // namespace curvesing
