#pragma once

#include <array>
#include <map>
#include <string>

#include "curvesing/bihom.hpp"

namespace curvesing {

/// Sparse polynomial in x1, x2, x3. Keys are exponent triples.
class TernaryForm {
 public:
  using Exponent = std::array<int, 3>;

  TernaryForm() = default;
  static TernaryForm variable(int i, const Rat& c = Rat(1)) {
    TernaryForm f;
    Exponent e{0, 0, 0};
    e[i] = 1;
    f.add_term(e, c);
    return f;
  }
  static TernaryForm constant(const Rat& c) {
    TernaryForm f;
    f.add_term({0, 0, 0}, c);
    return f;
  }
  /// c1 x1 + c2 x2 + c3 x3
  static TernaryForm linear(const Rat& c1, const Rat& c2, const Rat& c3) {
    return variable(0, c1) + variable(1, c2) + variable(2, c3);
  }

  void add_term(const Exponent& e, const Rat& c) {
    if (c == 0) return;
    Rat& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  const std::map<Exponent, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  /// Total degree, -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
  }
  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int k = e[0] + e[1] + e[2];
      if (d >= 0 && k != d) return false;
      d = k;
    }
    return true;
  }

  TernaryForm& operator+=(const TernaryForm& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TernaryForm& operator-=(const TernaryForm& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  TernaryForm& operator*=(const Rat& k) {
    if (k == 0) terms_.clear();
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }
  friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) { return a += b; }
  friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) { return a -= b; }
  friend TernaryForm operator*(TernaryForm a, const Rat& k) { return a *= k; }
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    TernaryForm r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }
  friend bool operator==(const TernaryForm& a, const TernaryForm& b) { return a.terms_ == b.terms_; }

  bool divisible_by_x3() const {
    for (const auto& [e, c] : terms_)
      if (e[2] == 0) return false;
    return true;
  }
  TernaryForm div_x3() const {
    require(divisible_by_x3(), ErrorKind::Invariant, "resmat", "form is not divisible by x3");
    TernaryForm r;
    for (const auto& [e, c] : terms_) r.add_term({e[0], e[1], e[2] - 1}, c);
    return r;
  }

  Rat eval(const Rat& x1, const Rat& x2, const Rat& x3) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_)
      acc += c * pow(x1, static_cast<unsigned>(e[0])) * pow(x2, static_cast<unsigned>(e[1])) * pow(x3, static_cast<unsigned>(e[2]));
    return acc;
  }

  /// Substitute forms of a common degree for x1, x2, x3 (homogeneous input only).
  BiHomPoly substitute(const BiHomPoly& x1, const BiHomPoly& x2, const BiHomPoly& x3) const {
    require(is_homogeneous(), ErrorKind::Invariant, "resmat", "substitution into a non-homogeneous form");
    const int d = std::max(degree(), 0);
    BiHomPoly acc = BiHomPoly::zero(d * x1.degree(), x1.vars());
    for (const auto& [e, c] : terms_) acc += pow(x1, e[0]) * pow(x2, e[1]) * pow(x3, e[2]) * c;
    return acc;
  }

  /// Canonical scalar normalisation: integer coefficients with content 1 and a
  /// positive coefficient on the lexicographically largest exponent.
  TernaryForm normalized() const {
    require(!is_zero(), ErrorKind::Input, "polycore", "normalisation of the zero form");
    Int num(0), den(1);
    for (const auto& [e, c] : terms_) {
      num = gcd(num, c.get_num());
      den = lcm(den, c.get_den());
    }
    Rat k(den, num);
    k.canonicalize();
    if (terms_.rbegin()->second < 0) k = -k;
    return *this * k;
  }

 private:
  std::map<Exponent, Rat> terms_;
};

inline std::string to_string(const TernaryForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += to_string(a);
    else if (a == 1) out += mono;
    else out += to_string(a) + "*" + mono;
  }
  return out;
}

}  // namespace curvesing
