#pragma once

#include <optional>
#include <random>
#include <vector>

#include "curvesing/mubasis.hpp"
#include "curvesing/polydet.hpp"
#include "curvesing/roots.hpp"

namespace curvesing {

struct SmithForm {
  std::vector<UniPoly> diag;  // min(rows, cols) entries; nonzero ones monic, zeros last
  std::optional<PolyMatrix> left, right;  // left * A * right = diag(diag)
};

namespace detail {

inline void row_axpy(PolyMatrix& m, std::size_t dst, std::size_t src, const UniPoly& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(src, j).is_zero()) m(dst, j) -= q * m(src, j);
}
inline void col_axpy(PolyMatrix& m, std::size_t dst, std::size_t src, const UniPoly& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m(i, src).is_zero()) m(i, dst) -= q * m(i, src);
}
inline void row_scale(PolyMatrix& m, std::size_t r, const Rat& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= k;
}

}  // namespace detail

/// Smith normal form over Q[t] by elementary row and column operations.
/// Pivot: an entry of least degree, ties broken by coefficient height and then
/// row-major position. Rows are rescaled by their content to slow coefficient growth.
inline SmithForm smith_normal_form(PolyMatrix a, bool keep_transforms = false) {
  using detail::col_axpy;
  using detail::row_axpy;
  const std::size_t R = a.rows(), C = a.cols(), K = std::min(R, C);
  const UniPoly one = UniPoly::constant(Rat(1));
  PolyMatrix L, Rt;
  if (keep_transforms) {
    L = PolyMatrix::identity(R, one, UniPoly{});
    Rt = PolyMatrix::identity(C, one, UniPoly{});
  }
  auto scale_row = [&](std::size_t r, const Rat& k) {
    detail::row_scale(a, r, k);
    if (keep_transforms) detail::row_scale(L, r, k);
  };
  auto tidy_row = [&](std::size_t r) {
    Rat c(0);
    for (std::size_t j = 0; j < C; ++j) {
      if (a(r, j).is_zero()) continue;
      Rat cj = content(a(r, j));
      if (c == 0) {
        c = cj;
      } else {
        Int num = gcd(c.get_num(), cj.get_num()), den = lcm(c.get_den(), cj.get_den());
        c = Rat(num, den);
        c.canonicalize();
      }
    }
    if (c != 0 && c != 1) scale_row(r, 1 / c);
  };

  std::size_t k = 0;
  for (; k < K; ++k) {
    for (;;) {
      // Pivot search.
      std::size_t pi = R, pj = C;
      int best_deg = 0;
      std::size_t best_h = 0;
      for (std::size_t i = k; i < R; ++i)
        for (std::size_t j = k; j < C; ++j) {
          const UniPoly& e = a(i, j);
          if (e.is_zero()) continue;
          const int d = e.degree();
          if (pi == R || d < best_deg || (d == best_deg && e.height() < best_h)) {
            pi = i;
            pj = j;
            best_deg = d;
            best_h = e.height();
          }
        }
      if (pi == R) goto done;
      a.swap_rows(k, pi);
      a.swap_cols(k, pj);
      if (keep_transforms) {
        L.swap_rows(k, pi);
        Rt.swap_cols(k, pj);
      }
      bool clean = true;
      for (std::size_t i = k + 1; i < R; ++i) {
        if (a(i, k).is_zero()) continue;
        auto [q, r] = divrem(a(i, k), a(k, k));
        row_axpy(a, i, k, q);
        if (keep_transforms) row_axpy(L, i, k, q);
        if (!r.is_zero()) clean = false;
        tidy_row(i);
      }
      for (std::size_t j = k + 1; j < C; ++j) {
        if (a(k, j).is_zero()) continue;
        auto [q, r] = divrem(a(k, j), a(k, k));
        col_axpy(a, j, k, q);
        if (keep_transforms) col_axpy(Rt, j, k, q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry.
      std::size_t bad = R;
      for (std::size_t i = k + 1; i < R && bad == R; ++i)
        for (std::size_t j = k + 1; j < C; ++j)
          if (!a(i, j).is_zero() && !divides(a(k, k), a(i, j))) {
            bad = i;
            break;
          }
      if (bad == R) break;
      // Add the offending row to the pivot row and redo the sweep.
      row_axpy(a, k, bad, -one);
      if (keep_transforms) row_axpy(L, k, bad, -one);
    }
    scale_row(k, 1 / a(k, k).leading());
  }
done:
  SmithForm out;
  for (std::size_t i = 0; i < K; ++i) out.diag.push_back(i < k ? a(i, i) : UniPoly{});
  if (keep_transforms) {
    out.left = std::move(L);
    out.right = std::move(Rt);
  }
  return out;
}

namespace detail {

struct SplitFound {
  UniPoly factor;
};

/// Local Smith exponents of A at the square-free modulus pi, computed over
/// Q[t]/(pi^E). Entry k is the exponent of pi in the k-th invariant factor,
/// E meaning "divisible by pi^E". Throws SplitFound when an entry exposes a
/// proper factor of pi, since pi must then be refined.
inline std::vector<int> local_smith_exponents(PolyMatrix a, const UniPoly& pi, int e) {
  const UniPoly modulus = pow(pi, e);
  const std::size_t R = a.rows(), C = a.cols(), K = std::min(R, C);
  auto valuation = [&](const UniPoly& x, UniPoly* unit) {
    if (x.is_zero()) return e;
    UniPoly y = x;
    int j = 0;
    for (;;) {
      const UniPoly g = poly_gcd(y, pi);
      if (g.degree() == 0) break;
      if (g.degree() < pi.degree()) throw SplitFound{g};
      y = exact_div(y, pi);
      ++j;
    }
    if (unit) *unit = y;
    return j;
  };
  auto tidy = [&](std::size_t r) {
    Rat c(0);
    for (std::size_t j = 0; j < C; ++j) {
      if (a(r, j).is_zero()) continue;
      const Rat cj = content(a(r, j));
      if (c == 0) {
        c = cj;
      } else {
        c = Rat(gcd(c.get_num(), cj.get_num()), lcm(c.get_den(), cj.get_den()));
        c.canonicalize();
      }
    }
    if (c != 0 && c != 1)
      for (std::size_t j = 0; j < C; ++j) a(r, j) *= 1 / c;
  };
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) a(i, j) = a(i, j) % modulus;
    tidy(i);
  }
  std::vector<int> out(K, e);
  for (std::size_t k = 0; k < K; ++k) {
    std::size_t pi_r = R, pj = C;
    int best = e;
    for (std::size_t i = k; i < R && best > 0; ++i)
      for (std::size_t j = k; j < C; ++j) {
        if (a(i, j).is_zero()) continue;
        const int v = valuation(a(i, j), nullptr);
        if (v < best) {
          best = v;
          pi_r = i;
          pj = j;
          if (v == 0) break;
        }
      }
    if (pi_r == R) break;
    a.swap_rows(k, pi_r);
    a.swap_cols(k, pj);
    out[k] = best;
    UniPoly w;
    valuation(a(k, k), &w);
    const UniPoly piv = pow(pi, best);
    for (std::size_t i = k + 1; i < R; ++i) {
      if (a(i, k).is_zero()) continue;
      const UniPoly y = exact_div(a(i, k), piv);
      a(i, k) = UniPoly{};
      for (std::size_t j = k + 1; j < C; ++j) a(i, j) = (w * a(i, j) - y * a(k, j)) % modulus;
      tidy(i);
    }
  }
  return out;
}

}  // namespace detail

/// Smith diagonal of a matrix of rank >= min(rows, cols) - 1 by local
/// computations at the square-free parts of a nonzero maximal or submaximal
/// minor. Falls back to smith_normal_form for matrices of lower rank.
inline std::vector<UniPoly> smith_diagonal(const PolyMatrix& a) {
  const std::size_t K = std::min(a.rows(), a.cols());
  if (K == 0) return {};
  auto square_block = [&](std::size_t size, std::size_t skip_r, std::size_t skip_c) {
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 0; rs.size() < size && i < a.rows(); ++i)
      if (i != skip_r) rs.push_back(i);
    for (std::size_t j = 0; cs.size() < size && j < a.cols(); ++j)
      if (j != skip_c) cs.push_back(j);
    return a.submatrix(rs, cs);
  };
  if (!a.is_square()) return smith_normal_form(a).diag;
  UniPoly minor = det_interp(a);
  std::size_t rank_ = K;
  if (minor.is_zero() && K >= 2) {
    rank_ = K - 1;
    for (std::size_t i = 0; i < K && minor.is_zero(); ++i)
      for (std::size_t j = 0; j < K && minor.is_zero(); ++j) minor = det_interp(square_block(K - 1, i, j));
  }
  if (minor.is_zero()) return smith_normal_form(a).diag;
  std::vector<UniPoly> diag(K, UniPoly::constant(Rat(1)));
  for (std::size_t k = rank_; k < K; ++k) diag[k] = UniPoly{};
  std::vector<std::pair<UniPoly, int>> work;
  for (const auto& sf : squarefree_decomposition(minor)) work.push_back({sf.factor, sf.exponent + 1});
  while (!work.empty()) {
    auto [pi, e] = work.back();
    work.pop_back();
    std::vector<int> ex;
    try {
      ex = detail::local_smith_exponents(a, pi, e);
    } catch (const detail::SplitFound& s) {
      const UniPoly g = normalize_primitive(s.factor);
      work.push_back({g, e});
      work.push_back({normalize_primitive(exact_div(pi, g)), e});
      continue;
    }
    for (std::size_t k = 0; k < rank_; ++k) {
      require(ex[k] < e, ErrorKind::Invariant, "smithlab", "local Smith exponent reached the truncation order");
      if (ex[k] > 0) diag[k] = diag[k] * pow(pi, ex[k]);
    }
  }
  for (std::size_t k = 0; k < rank_; ++k) diag[k] = monic(diag[k]);
  return diag;
}

/// Partial products of the Smith diagonal: D[i] = gcd of i x i minors, D[0] = 1.
inline std::vector<UniPoly> divisors_from_smith(const SmithForm& sf) {
  std::vector<UniPoly> d{UniPoly::constant(Rat(1))};
  for (const auto& e : sf.diag) d.push_back(d.back().is_zero() || e.is_zero() ? UniPoly{} : normalize_primitive(d.back() * e));
  return d;
}

/// gcd of all i x i minors by enumeration, with interpolation determinants.
inline UniPoly minor_gcd(const PolyMatrix& a, std::size_t i) {
  if (i == 0) return UniPoly::constant(Rat(1));
  UniPoly g;
  for (const auto& rs : combinations(a.rows(), i))
    for (const auto& cs : combinations(a.cols(), i)) {
      g = poly_gcd(g, det_interp(a.submatrix(rs, cs)));
      if (g.degree() == 0) return UniPoly::constant(Rat(1));
    }
  return g.is_zero() ? g : normalize_primitive(g);
}

/// Determinantal divisors D[0..k] by minor enumeration. Full chains are
/// limited to max_size x max_size; larger matrices need an explicit index list.
inline std::vector<UniPoly> determinantal_divisors(const PolyMatrix& a, std::size_t max_size = 8) {
  require(std::max(a.rows(), a.cols()) <= max_size, ErrorKind::Input, "smithlab",
          "matrix exceeds the minor enumeration guard (" + std::to_string(max_size) + ")");
  std::vector<UniPoly> d;
  for (std::size_t i = 0; i <= std::min(a.rows(), a.cols()); ++i) d.push_back(minor_gcd(a, i));
  return d;
}

/// Homogeneous determinantal divisors of a matrix over Q[t,u], from Smith forms
/// in both affine charts. D[i] has degree deg D_i(t,1) + ord_(u=0), the order
/// read off the chart t = 1.
inline std::vector<BiHomPoly> homogeneous_divisor_chain(const HomMatrix& a) {
  const auto dt = divisors_from_smith(SmithForm{smith_diagonal(dehomogenize(a)), {}, {}});
  const auto du = divisors_from_smith(SmithForm{smith_diagonal(dehomogenize_first(a)), {}, {}});
  std::vector<BiHomPoly> out;
  for (std::size_t i = 0; i < dt.size(); ++i) {
    if (dt[i].is_zero()) {
      out.push_back(BiHomPoly::zero(0, VarPair::TU));
      continue;
    }
    const int at_inf = du[i].valuation();
    out.push_back(normalize_primitive(BiHomPoly::homogenize(dt[i], dt[i].degree() + at_inf, VarPair::TU)));
  }
  return out;
}

struct SingularFactorSet {
  int n = 0, mu = 0;
  std::vector<BiHomPoly> d;        // index k = 0..n; d[0], d[1] unused (set to 1)
  std::vector<BiHomPoly> reduced;  // same indexing, empty until filled
  MoebiusChange change;            // the change of coordinates that was used
  int attempts = 0;

  const BiHomPoly& factor(int k) const { return d[static_cast<std::size_t>(k)]; }
  /// sum_k (k - 1) deg d_k
  int weighted_degree() const {
    int s = 0;
    for (int k = 2; k <= n; ++k) s += (k - 1) * d[k].degree();
    return s;
  }
};

inline bool same_factors(const SingularFactorSet& x, const SingularFactorSet& y) {
  if (x.n != y.n) return false;
  for (int k = 2; k <= x.n; ++k)
    if (x.d[k] != y.d[k]) return false;
  return true;
}

/// Read d_k from a Smith diagonal e_1 | ... | e_N with e_N = 0:
/// d_k = e_(N-k+1) / e_(N-k) for 2 <= k <= N (e_0 = 1), and d_k = 1 for k > N.
inline std::vector<UniPoly> factors_from_diagonal(const std::vector<UniPoly>& e, int n) {
  const int N = static_cast<int>(e.size());
  require(N >= 2 && e.back().is_zero(), ErrorKind::Degenerate, "smithlab", "Sylvester-type matrix is not singular");
  require(!e[N - 2].is_zero(), ErrorKind::Degenerate, "smithlab", "matrix has corank > 1 (non-birational or degenerate input)");
  std::vector<UniPoly> d(static_cast<std::size_t>(n) + 1, UniPoly::constant(Rat(1)));
  for (int k = 2; k <= std::min(N, n); ++k) {
    const UniPoly& hi = e[N - k];
    const UniPoly lo = (N - k - 1 >= 0) ? e[N - k - 1] : UniPoly::constant(Rat(1));
    d[k] = normalize_primitive(exact_div(hi, lo));
  }
  return d;
}

/// Singular factors d_2..d_n from a homogeneous Sylvester-type matrix (the
/// Sylvester matrix or any psi_j). A random change of coordinates moves every
/// root away from infinity before the Smith form is taken at u = 1; factors are
/// pulled back afterwards. The degree identity sum (k-1) deg d_k = (n-1)(n-2)
/// certifies that nothing was lost at infinity; on failure the draw is repeated.
inline SingularFactorSet singular_factors(const HomMatrix& s, int n, int mu, std::uint64_t seed, int retries = 5) {
  std::mt19937_64 rng(seed);
  const int target = (n - 1) * (n - 2);
  for (int attempt = 1; attempt <= retries; ++attempt) {
    const MoebiusChange m = MoebiusChange::random(rng);
    const PolyMatrix moved = dehomogenize(apply_moebius(s, m));
    const std::vector<UniPoly> dk = factors_from_diagonal(smith_diagonal(moved), n);
    SingularFactorSet out;
    out.n = n;
    out.mu = mu;
    out.change = m;
    out.attempts = attempt;
    const MoebiusChange back = m.inverse();
    for (int k = 0; k <= n; ++k) {
      const BiHomPoly h = BiHomPoly::homogenize(dk[k], dk[k].degree(), VarPair::TU);
      out.d.push_back(k < 2 ? BiHomPoly::constant(Rat(1), VarPair::TU) : normalize_primitive(apply_moebius(h, back)));
    }
    if (out.weighted_degree() == target) return out;
  }
  fail(ErrorKind::Degenerate, "smithlab", "degree identity for singular factors fails after " + std::to_string(retries) +
                                              " changes of coordinates (non-birational or degenerate input)");
}

}  // namespace curvesing
