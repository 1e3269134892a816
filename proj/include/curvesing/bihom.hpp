#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "curvesing/unipoly.hpp"

namespace curvesing {

enum class VarPair { SV, TU };

inline const char* first_var(VarPair p) { return p == VarPair::SV ? "s" : "t"; }
inline const char* second_var(VarPair p) { return p == VarPair::SV ? "v" : "u"; }

/// Homogeneous binary form of a fixed degree d. Entry i is the coefficient of
/// s^i v^(d-i) (or t^i u^(d-i)). The zero form keeps its declared degree so that
/// matrix entries stay homogeneous.
class BiHomPoly {
 public:
  BiHomPoly() : deg_(0), c_(1, Rat(0)) {}
  BiHomPoly(int degree, std::vector<Rat> coeffs, VarPair vars = VarPair::SV)
      : deg_(degree), c_(std::move(coeffs)), vars_(vars) {
    require(degree >= 0, ErrorKind::Invariant, "polycore", "negative form degree");
    require(static_cast<int>(c_.size()) == degree + 1, ErrorKind::Invariant, "polycore",
            "coefficient count does not match form degree");
  }

  static BiHomPoly zero(int degree, VarPair vars = VarPair::SV) {
    return BiHomPoly(degree, std::vector<Rat>(static_cast<std::size_t>(degree) + 1), vars);
  }
  static BiHomPoly constant(const Rat& c, VarPair vars = VarPair::SV) { return BiHomPoly(0, {c}, vars); }
  /// c_first * s + c_second * v
  static BiHomPoly linear(const Rat& c_first, const Rat& c_second, VarPair vars = VarPair::SV) {
    return BiHomPoly(1, {c_second, c_first}, vars);
  }
  /// s^i v^j
  static BiHomPoly monomial(int i, int j, VarPair vars = VarPair::SV) {
    BiHomPoly m = zero(i + j, vars);
    m.c_[i] = 1;
    return m;
  }
  /// Homogenisation of f to the given degree (which must be >= deg f).
  static BiHomPoly homogenize(const UniPoly& f, int degree, VarPair vars = VarPair::SV) {
    require(f.degree() <= degree, ErrorKind::Invariant, "polycore", "homogenisation degree below polynomial degree");
    std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= f.degree(); ++i) c[i] = f.coeff(i);
    return BiHomPoly(degree, std::move(c), vars);
  }

  int degree() const { return deg_; }
  VarPair vars() const { return vars_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& coeff(int i) const { return c_[i]; }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
  }
  BiHomPoly with_vars(VarPair p) const {
    BiHomPoly r = *this;
    r.vars_ = p;
    return r;
  }

  /// Set the second variable to 1.
  UniPoly dehomogenize() const { return UniPoly(c_); }
  /// Set the first variable to 1; the result is a polynomial in the second variable.
  UniPoly dehomogenize_first() const { return UniPoly(std::vector<Rat>(c_.rbegin(), c_.rend())); }

  /// Largest k with s^k dividing the form (degree + 1 sentinel for zero).
  int first_valuation() const {
    for (int i = 0; i <= deg_; ++i)
      if (c_[i] != 0) return i;
    return deg_ + 1;
  }
  /// Largest k with v^k dividing the form.
  int second_valuation() const {
    for (int i = deg_; i >= 0; --i)
      if (c_[i] != 0) return deg_ - i;
    return deg_ + 1;
  }

  Rat eval(const Rat& x, const Rat& y) const {
    Rat acc(0);
    Rat ypow(1);
    std::vector<Rat> ypows(static_cast<std::size_t>(deg_) + 1);
    for (int i = 0; i <= deg_; ++i) {
      ypows[i] = ypow;
      ypow *= y;
    }
    Rat xpow(1);
    for (int i = 0; i <= deg_; ++i) {
      if (c_[i] != 0) acc += c_[i] * xpow * ypows[deg_ - i];
      xpow *= x;
    }
    return acc;
  }

  BiHomPoly& operator+=(const BiHomPoly& o) { return combine(o, Rat(1)); }
  BiHomPoly& operator-=(const BiHomPoly& o) { return combine(o, Rat(-1)); }
  BiHomPoly& operator*=(const Rat& k) {
    for (auto& v : c_) v *= k;
    return *this;
  }
  friend BiHomPoly operator+(BiHomPoly a, const BiHomPoly& b) { return a += b; }
  friend BiHomPoly operator-(BiHomPoly a, const BiHomPoly& b) { return a -= b; }
  friend BiHomPoly operator-(BiHomPoly a) { return a *= Rat(-1); }
  friend BiHomPoly operator*(BiHomPoly a, const Rat& k) { return a *= k; }
  friend BiHomPoly operator*(const Rat& k, BiHomPoly a) { return a *= k; }
  friend BiHomPoly operator*(const BiHomPoly& a, const BiHomPoly& b) {
    require(a.vars_ == b.vars_, ErrorKind::Invariant, "polycore", "variable pair mismatch in product");
    std::vector<Rat> r(static_cast<std::size_t>(a.deg_ + b.deg_) + 1);
    for (int i = 0; i <= a.deg_; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j <= b.deg_; ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return BiHomPoly(a.deg_ + b.deg_, std::move(r), a.vars_);
  }
  friend bool operator==(const BiHomPoly& a, const BiHomPoly& b) {
    return a.deg_ == b.deg_ && a.vars_ == b.vars_ && a.c_ == b.c_;
  }
  friend bool operator!=(const BiHomPoly& a, const BiHomPoly& b) { return !(a == b); }

  std::size_t height() const {
    std::size_t h = 0;
    for (const auto& v : c_) h = std::max(h, curvesing::height(v));
    return h;
  }

 private:
  BiHomPoly& combine(const BiHomPoly& o, const Rat& sign) {
    require(vars_ == o.vars_, ErrorKind::Invariant, "polycore", "variable pair mismatch in sum");
    if (o.deg_ != deg_) {
      // Forms of different degrees only add when one side is zero.
      if (o.is_zero()) return *this;
      require(is_zero(), ErrorKind::Invariant, "polycore", "sum of forms of different degrees");
      *this = o * sign;
      return *this;
    }
    for (int i = 0; i <= deg_; ++i) c_[i] += sign * o.c_[i];
    return *this;
  }

  int deg_;
  std::vector<Rat> c_;
  VarPair vars_ = VarPair::SV;
};

inline BiHomPoly pow(const BiHomPoly& f, int e) {
  BiHomPoly r = BiHomPoly::constant(Rat(1), f.vars());
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

/// Integer coefficients with content 1 and a positive coefficient on the
/// highest-index monomial. This is the canonical "up to a nonzero scalar" form.
inline BiHomPoly normalize_primitive(const BiHomPoly& f) {
  require(!f.is_zero(), ErrorKind::Input, "polycore", "normalize_primitive of the zero form");
  UniPoly u = f.dehomogenize();
  Rat c = content(u);
  if (u.leading() < 0) c = -c;
  return f * (1 / c);
}

inline bool equal_up_to_scalar(const BiHomPoly& f, const BiHomPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return f.degree() == g.degree() && normalize_primitive(f) == normalize_primitive(g);
}

/// Exact quotient f / g; throws when g does not divide f.
inline BiHomPoly exact_div(const BiHomPoly& f, const BiHomPoly& g) {
  require(f.vars() == g.vars(), ErrorKind::Invariant, "polycore", "variable pair mismatch in division");
  require(!g.is_zero(), ErrorKind::Invariant, "polycore", "division by the zero form");
  require(f.degree() >= g.degree() || f.is_zero(), ErrorKind::Invariant, "polycore", "inexact form division");
  const int dq = f.degree() - g.degree();
  if (f.is_zero()) return BiHomPoly::zero(std::max(dq, 0), f.vars());
  auto [q, r] = divrem(f.dehomogenize(), g.dehomogenize());
  require(r.is_zero() && q.degree() <= dq, ErrorKind::Invariant, "polycore", "inexact form division");
  BiHomPoly out = BiHomPoly::homogenize(q, dq, f.vars());
  require(out * g == f, ErrorKind::Invariant, "polycore", "inexact form division");
  return out;
}

inline bool divides(const BiHomPoly& g, const BiHomPoly& f) {
  if (f.is_zero()) return true;
  if (g.is_zero() || g.degree() > f.degree()) return false;
  auto [q, r] = divrem(f.dehomogenize(), g.dehomogenize());
  if (!r.is_zero() || q.degree() > f.degree() - g.degree()) return false;
  return BiHomPoly::homogenize(q, f.degree() - g.degree(), f.vars()) * g == f;
}

/// Homogeneous gcd, normalised primitive. Powers of each variable are split off
/// first so that roots at 0 and at infinity are both accounted for; the rest is
/// the gcd of the dehomogenisations. gcd(0, g) = g.
inline BiHomPoly bihom_gcd(const BiHomPoly& f, const BiHomPoly& g) {
  require(f.vars() == g.vars(), ErrorKind::Input, "polycore", "bihom_gcd: variable pair mismatch");
  if (f.is_zero() && g.is_zero()) return BiHomPoly::zero(0, f.vars());
  if (f.is_zero()) return normalize_primitive(g);
  if (g.is_zero()) return normalize_primitive(f);
  const int sf = f.first_valuation(), sg = g.first_valuation();
  const int vf = f.second_valuation(), vg = g.second_valuation();
  auto strip = [](const BiHomPoly& h, int sval, int vval) {
    // h / (s^sval v^vval), dehomogenised at v = 1
    const int d = h.degree() - sval - vval;
    std::vector<Rat> c(h.coeffs().begin() + sval, h.coeffs().begin() + sval + d + 1);
    return UniPoly(std::move(c));
  };
  UniPoly core = poly_gcd(strip(f, sf, vf), strip(g, sg, vg));
  const int s_common = std::min(sf, sg), v_common = std::min(vf, vg);
  BiHomPoly out = BiHomPoly::homogenize(core, core.degree(), f.vars()) * BiHomPoly::monomial(s_common, v_common, f.vars());
  return normalize_primitive(out);
}

inline BiHomPoly bihom_lcm(const BiHomPoly& f, const BiHomPoly& g) {
  return normalize_primitive(exact_div(f * g, bihom_gcd(f, g)));
}

/// Invertible linear change of P^1 acting by substitution:
/// f(t, u) -> f(alpha t + beta u, delta t + gamma u).
struct MoebiusChange {
  Rat alpha{1}, beta{0}, delta{0}, gamma{1};

  Rat det() const { return alpha * gamma - beta * delta; }

  MoebiusChange inverse() const {
    Rat d = det();
    require(d != 0, ErrorKind::Input, "polycore", "singular change of coordinates");
    return {gamma / d, -beta / d, -delta / d, alpha / d};
  }

  static MoebiusChange identity() { return {}; }
  static MoebiusChange swap() { return {Rat(0), Rat(1), Rat(1), Rat(0)}; }

  /// Integer entries uniform in [-bound, bound] with nonzero determinant.
  template <class Rng>
  static MoebiusChange random(Rng& rng, int bound = 20) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    for (;;) {
      MoebiusChange m{Rat(dist(rng)), Rat(dist(rng)), Rat(dist(rng)), Rat(dist(rng))};
      if (m.det() != 0) return m;
    }
  }
};

inline BiHomPoly apply_moebius(const BiHomPoly& f, const MoebiusChange& m) {
  require(m.det() != 0, ErrorKind::Input, "polycore", "singular change of coordinates");
  const int d = f.degree();
  const VarPair vp = f.vars();
  const BiHomPoly x = BiHomPoly::linear(m.alpha, m.beta, vp);  // image of the first variable
  const BiHomPoly y = BiHomPoly::linear(m.delta, m.gamma, vp); // image of the second variable
  std::vector<BiHomPoly> xp{BiHomPoly::constant(Rat(1), vp)}, yp{BiHomPoly::constant(Rat(1), vp)};
  for (int i = 1; i <= d; ++i) {
    xp.push_back(xp.back() * x);
    yp.push_back(yp.back() * y);
  }
  BiHomPoly out = BiHomPoly::zero(d, vp);
  for (int i = 0; i <= d; ++i) {
    if (f.coeff(i) == 0) continue;
    out += (xp[i] * yp[d - i]) * f.coeff(i);
  }
  return out;
}

inline std::string to_string(const BiHomPoly& f) {
  const std::string x = first_var(f.vars()), y = second_var(f.vars());
  if (f.is_zero()) return "0";
  std::string out;
  const int d = f.degree();
  for (int i = d; i >= 0; --i) {
    Rat c = f.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    auto term = [](const std::string& var, int e) {
      if (e == 0) return std::string();
      return e == 1 ? var : var + "^" + std::to_string(e);
    };
    std::string ms = term(x, i), mv = term(y, d - i);
    if (!ms.empty() && !mv.empty()) mono = ms + "*" + mv;
    else mono = ms + mv;
    if (mono.empty()) out += to_string(a);
    else if (a == 1) out += mono;
    else out += to_string(a) + "*" + mono;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const BiHomPoly& f) { return os << to_string(f); }

}  // namespace curvesing
