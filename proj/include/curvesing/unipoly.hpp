#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "curvesing/rational.hpp"

namespace curvesing {

/// Dense univariate polynomial over Q. Entry i is the coefficient of t^i; the
/// highest stored coefficient is nonzero unless the polynomial is zero, whose
/// degree is -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static UniPoly constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }
  static UniPoly monomial(const Rat& c, int k) {
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
  }
  /// The linear polynomial t - r.
  static UniPoly linear_root(const Rat& r) { return UniPoly(std::vector<Rat>{-r, Rat(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
  /// Smallest power of t with a nonzero coefficient; -1 for zero.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::complex<long double> eval(std::complex<long double> z) const {
    std::complex<long double> acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + static_cast<long double>(it->get_d());
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rat& k) {
    if (k == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= k;
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend UniPoly operator*(UniPoly a, const Rat& k) { return a *= k; }
  friend UniPoly operator*(const Rat& k, UniPoly a) { return a *= k; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Multiply by t^k.
  UniPoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<Rat> r(static_cast<std::size_t>(k), Rat(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(std::move(r));
  }

  /// Maximum coefficient bit height; used for pivot tie-breaking.
  std::size_t height() const {
    std::size_t h = 0;
    for (const auto& v : c_) h = std::max(h, curvesing::height(v));
    return h;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

struct DivRem {
  UniPoly quot;
  UniPoly rem;
};

inline DivRem divrem(const UniPoly& f, const UniPoly& g) {
  require(!g.is_zero(), ErrorKind::Invariant, "polycore", "division by the zero polynomial");
  if (f.degree() < g.degree()) return {UniPoly{}, f};
  std::vector<Rat> r = f.coeffs();
  const int dg = g.degree();
  const Rat inv_lead = 1 / g.leading();
  std::vector<Rat> q(static_cast<std::size_t>(f.degree() - dg) + 1);
  for (int k = f.degree() - dg; k >= 0; --k) {
    Rat coef = r[k + dg] * inv_lead;
    q[k] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= dg; ++j) r[k + j] -= coef * g.coeff(j);
  }
  r.resize(static_cast<std::size_t>(dg));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

inline UniPoly operator%(const UniPoly& f, const UniPoly& g) { return divrem(f, g).rem; }

inline bool divides(const UniPoly& g, const UniPoly& f) {
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  return divrem(f, g).rem.is_zero();
}

inline UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
  auto [q, r] = divrem(f, g);
  require(r.is_zero(), ErrorKind::Invariant, "polycore", "inexact polynomial division");
  return q;
}

inline UniPoly pow(const UniPoly& f, int e) {
  UniPoly r = UniPoly::constant(Rat(1));
  UniPoly b = f;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

/// Positive rational c with f / c having coprime integer coefficients.
inline Rat content(const UniPoly& f) {
  Int num(0), den(1);
  for (const auto& v : f.coeffs()) {
    if (v == 0) continue;
    num = gcd(num, v.get_num());
    den = lcm(den, v.get_den());
  }
  if (num == 0) return Rat(0);
  Rat c(num, den);
  c.canonicalize();
  return abs(c);
}

inline UniPoly monic(const UniPoly& f) {
  if (f.is_zero()) return f;
  return f * (1 / f.leading());
}

/// Integer coefficients, content 1, positive leading coefficient.
inline UniPoly normalize_primitive(const UniPoly& f) {
  require(!f.is_zero(), ErrorKind::Input, "polycore", "normalize_primitive of the zero polynomial");
  Rat c = content(f);
  if (f.leading() < 0) c = -c;
  return f * (1 / c);
}

inline bool equal_up_to_scalar(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return normalize_primitive(f) == normalize_primitive(g);
}

/// Monic gcd via a primitive remainder sequence; gcd(0, 0) = 0.
inline UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) return {};
  if (f.is_zero()) return monic(g);
  if (g.is_zero()) return monic(f);
  UniPoly a = normalize_primitive(f);
  UniPoly b = normalize_primitive(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = r.is_zero() ? UniPoly{} : normalize_primitive(r);
  }
  return monic(a);
}

inline std::string to_string(const UniPoly& f, const std::string& var = "t") {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    Rat c = f.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = (a == 1);
    if (!unit || i == 0) out += to_string(a);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& f) { return os << to_string(f); }

}  // namespace curvesing
