#pragma once

// Shared fixtures and brute-force oracles for the test binaries. Nothing here
// calls into the code path it is used to check.

#include <random>
#include <vector>

#include "curvesing/bihom.hpp"
#include "curvesing/matrix.hpp"
#include "curvesing/unipoly.hpp"

namespace testing_support {

using namespace curvesing;

inline BiHomPoly sv(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  const int d = static_cast<int>(v.size()) - 1;
  return BiHomPoly(d, std::move(v), VarPair::SV);
}
inline BiHomPoly tu(std::initializer_list<long> c) { return sv(c).with_vars(VarPair::TU); }
inline BiHomPoly s_(VarPair p = VarPair::SV) { return BiHomPoly::monomial(1, 0, p); }
inline BiHomPoly v_(VarPair p = VarPair::SV) { return BiHomPoly::monomial(0, 1, p); }
/// x*s + y*v
inline BiHomPoly lin(long x, long y, VarPair p = VarPair::SV) { return BiHomPoly::linear(Rat(x), Rat(y), p); }

struct Curve {
  BiHomPoly a, b, c;
};

inline Curve cusp() { return {pow(s_(), 2) * v_(), pow(s_(), 3), pow(v_(), 3)}; }

inline Curve node() {
  BiHomPoly q = pow(s_(), 2) - pow(v_(), 2);
  return {v_() * q, s_() * q, pow(v_(), 3)};
}

/// The degree-10 curve with a multiplicity-6 point and an infinitely near chain.
inline Curve sextuple_point() {
  BiHomPoly s = s_(), v = v_();
  BiHomPoly a = pow(s, 2) * pow(lin(2, 1), 2) * pow(lin(1, 1), 6);
  BiHomPoly b = pow(s, 3) * pow(lin(2, 1), 5) * (pow(s, 2) * Rat(3) + s * v * Rat(2) + pow(v, 2));
  BiHomPoly c = -pow(lin(1, 1), 10);
  return {a, b, c};
}

inline UniPoly upoly(std::initializer_list<long> c) { return UniPoly(c); }

inline UniPoly random_poly(std::mt19937_64& rng, int degree, int bound = 5) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = d(rng);
  while (c.back() == 0) c.back() = d(rng);
  return UniPoly(std::move(c));
}

inline BiHomPoly random_form(std::mt19937_64& rng, int degree, int bound = 5, VarPair p = VarPair::SV) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = d(rng);
  if (std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; })) c[0] = 1;
  return BiHomPoly(degree, std::move(c), p);
}

/// Random curve of degree n; with small coefficients the triple is coprime
/// and birational with overwhelming probability, callers still validate.
inline Curve random_curve(std::mt19937_64& rng, int n, int bound = 4) {
  return {random_form(rng, n, bound), random_form(rng, n, bound), random_form(rng, n, bound)};
}

/// Laplace expansion along the first row. Exponential; only for tiny sizes.
template <class T>
T laplace_det(const Matrix<T>& m, const T& zero, const T& one) {
  const std::size_t n = m.rows();
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  T acc = zero;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 1; i < n; ++i) rs.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cs.push_back(k);
    T term = m(0, j) * laplace_det(m.submatrix(rs, cs), zero, one);
    if (j % 2) acc = acc - term;
    else acc = acc + term;
  }
  return acc;
}

/// Plain Euclid over Q with no content handling.
inline UniPoly euclid_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divrem(a, b).rem;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : monic(a);
}

}  // namespace testing_support
