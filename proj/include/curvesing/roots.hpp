#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "curvesing/unipoly.hpp"

namespace curvesing {

struct SquarefreeFactor {
  UniPoly factor;  // normalized primitive, degree >= 1
  int exponent;
};

/// Yun's algorithm. The product of factor^exponent equals f up to a nonzero
/// scalar; factors are square-free and pairwise coprime, ordered by exponent.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f) {
  require(!f.is_zero(), ErrorKind::Input, "polycore", "square-free decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  UniPoly fp = f.derivative();
  UniPoly g = poly_gcd(f, fp);
  UniPoly b = exact_div(f, g);
  UniPoly c = exact_div(fp, g);
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.push_back({normalize_primitive(a), i});
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

/// Square-free part, normalized primitive.
inline UniPoly squarefree_part(const UniPoly& f) {
  UniPoly r = UniPoly::constant(Rat(1));
  for (const auto& sf : squarefree_decomposition(f)) r = r * sf.factor;
  return normalize_primitive(r);
}

struct ApproxRoot {
  std::complex<long double> value;
  int multiplicity;
  long double residual;  // |g(value)| for the monic square-free factor g
  bool converged;
};

namespace detail {

/// Aberth iteration on a square-free polynomial, in long double.
inline std::vector<std::complex<long double>> aberth(const UniPoly& g, bool& converged, int max_iter = 1000) {
  using C = std::complex<long double>;
  const int d = g.degree();
  std::vector<long double> c(static_cast<std::size_t>(d) + 1);
  const Rat lead = g.leading();
  for (int i = 0; i <= d; ++i) c[i] = static_cast<long double>(Rat(g.coeff(i) / lead).get_d());
  auto eval = [&](C z, C& dz) {
    C p(c[d]);
    dz = C(0);
    for (int i = d - 1; i >= 0; --i) {
      dz = dz * z + p;
      p = p * z + c[i];
    }
    return p;
  };
  long double radius = 0;
  for (int i = 0; i < d; ++i) radius = std::max(radius, std::fabs(c[i]));
  radius = 1 + radius;
  std::vector<C> z(d);
  for (int k = 0; k < d; ++k) {
    long double ang = 2 * M_PIl * k / d + 0.4L;
    z[k] = std::polar(radius * 0.5L + 0.1L, ang);
  }
  converged = false;
  for (int it = 0; it < max_iter; ++it) {
    long double worst = 0;
    for (int k = 0; k < d; ++k) {
      C dp;
      C p = eval(z[k], dp);
      if (std::abs(p) == 0) continue;
      C ratio = p / dp;
      C sum(0);
      for (int j = 0; j < d; ++j)
        if (j != k) sum += C(1) / (z[k] - z[j]);
      C step = ratio / (C(1) - ratio * sum);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst < 1e-17L) {
      converged = true;
      break;
    }
  }
  return z;
}

}  // namespace detail

/// Approximate complex roots with multiplicities from the square-free
/// decomposition. Each root is flagged unconverged when the iteration cap is
/// hit or its residual exceeds tol.
inline std::vector<ApproxRoot> complex_roots_approx(const UniPoly& f, const Rat& tol = Rat(1, 1000000000)) {
  require(f.degree() >= 1, ErrorKind::Input, "polycore", "root approximation needs a polynomial of degree >= 1");
  const long double eps = static_cast<long double>(tol.get_d());
  std::vector<ApproxRoot> out;
  for (const auto& sf : squarefree_decomposition(f)) {
    const UniPoly g = monic(sf.factor);
    bool conv = true;
    std::vector<std::complex<long double>> zs;
    if (g.degree() == 1) zs.push_back(static_cast<long double>(Rat(-g.coeff(0)).get_d()));
    else zs = detail::aberth(g, conv);
    for (auto z : zs) {
      if (std::fabs(z.imag()) < 1e-15L * std::max(1.0L, std::abs(z))) z = {z.real(), 0};
      long double res = std::abs(g.eval(z));
      out.push_back({z, sf.exponent, res, conv && res <= eps});
    }
  }
  return out;
}

/// Rational roots of f with multiplicity. Candidates come from the real
/// approximations and are verified exactly, so the list is never wrong but may
/// miss roots whose candidates are out of floating-point reach.
inline std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& f) {
  std::vector<std::pair<Rat, int>> out;
  if (f.degree() < 1) return out;
  for (const auto& sf : squarefree_decomposition(f)) {
    const UniPoly& g = sf.factor;  // primitive integer polynomial
    const Int lead = g.leading().get_num();
    if (g.coeff(0) == 0) out.push_back({Rat(0), sf.exponent});
    if (g.degree() == 1) {
      Rat r = -g.coeff(0) / g.coeff(1);
      if (r != 0) out.push_back({r, sf.exponent});
      continue;
    }
    bool conv = true;
    std::vector<Rat> found;
    for (const auto& z : detail::aberth(monic(g), conv)) {
      if (std::fabs(z.imag()) > 1e-6L * std::max(1.0L, std::abs(z))) continue;
      std::vector<Rat> cands;
      // A rational root p/q of a primitive polynomial has q | lead.
      Rat scaled = Rat(static_cast<double>(z.real())) * Rat(lead);
      Int p;
      mpz_fdiv_q(p.get_mpz_t(), Rat(scaled + Rat(1, 2)).get_num_mpz_t(), Rat(scaled + Rat(1, 2)).get_den_mpz_t());
      cands.push_back(Rat(p) / Rat(lead));
      for (const Rat& r : cands) {
        Rat c = r;
        c.canonicalize();
        if (c == 0 || g.eval(c) != 0) continue;
        bool dup = false;
        for (const auto& fr : found) dup = dup || fr == c;
        if (!dup) found.push_back(c);
      }
    }
    for (const auto& r : found) out.push_back({r, sf.exponent});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace curvesing
