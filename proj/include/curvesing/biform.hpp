#pragma once

#include <vector>

#include "curvesing/bihom.hpp"

namespace curvesing {

/// Form bihomogeneous in (s,v) and (t,u): entry i is the (t,u)-form of degree
/// dt multiplying s^i v^(ds-i).
class BiForm {
 public:
  BiForm() = default;
  BiForm(int ds, int dt) : ds_(ds), dt_(dt), c_(static_cast<std::size_t>(ds) + 1, BiHomPoly::zero(dt, VarPair::TU)) {}
  BiForm(int ds, int dt, std::vector<BiHomPoly> coeffs) : ds_(ds), dt_(dt), c_(std::move(coeffs)) {
    require(static_cast<int>(c_.size()) == ds + 1, ErrorKind::Invariant, "resmat", "bihomogeneous coefficient count mismatch");
    for (const auto& f : c_)
      require(f.degree() == dt && f.vars() == VarPair::TU, ErrorKind::Invariant, "resmat", "bihomogeneous coefficient degree mismatch");
  }

  /// f(s,v) * g(t,u)
  static BiForm outer(const BiHomPoly& f, const BiHomPoly& g) {
    BiForm r(f.degree(), g.degree());
    const BiHomPoly gt = g.with_vars(VarPair::TU);
    for (int i = 0; i <= f.degree(); ++i) r.c_[i] = gt * f.coeff(i);
    return r;
  }

  int s_degree() const { return ds_; }
  int t_degree() const { return dt_; }
  const std::vector<BiHomPoly>& s_coeffs() const { return c_; }
  const BiHomPoly& s_coeff(int i) const { return c_[i]; }
  bool is_zero() const {
    for (const auto& f : c_)
      if (!f.is_zero()) return false;
    return true;
  }

  BiForm& operator+=(const BiForm& o) {
    require(ds_ == o.ds_ && dt_ == o.dt_, ErrorKind::Invariant, "resmat", "bidegree mismatch in sum");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  BiForm& operator-=(const BiForm& o) {
    require(ds_ == o.ds_ && dt_ == o.dt_, ErrorKind::Invariant, "resmat", "bidegree mismatch in difference");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
  friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }
  friend bool operator==(const BiForm& a, const BiForm& b) {
    return a.ds_ == b.ds_ && a.dt_ == b.dt_ && a.c_ == b.c_;
  }

  /// Specialise (t,u) to a point; the result is a form in (s,v).
  BiHomPoly at_tu(const Rat& t, const Rat& u) const {
    std::vector<Rat> c;
    for (const auto& f : c_) c.push_back(f.eval(t, u));
    return BiHomPoly(ds_, std::move(c), VarPair::SV);
  }

  /// Set (s,v) = (t,u): the restriction to the diagonal.
  BiHomPoly on_diagonal() const {
    BiHomPoly acc = BiHomPoly::zero(ds_ + dt_, VarPair::TU);
    for (int i = 0; i <= ds_; ++i) acc += c_[i] * BiHomPoly::monomial(i, ds_ - i, VarPair::TU);
    return acc;
  }

  /// Exact quotient by (s u - t v). Coefficientwise, P_i = u Q_(i-1) - t Q_i,
  /// solved from the top s-power down.
  BiForm div_diagonal() const {
    require(ds_ >= 1 && dt_ >= 1, ErrorKind::Invariant, "resmat", "form too small to contain s*u - t*v");
    BiForm q(ds_ - 1, dt_ - 1);
    const BiHomPoly t = BiHomPoly::monomial(1, 0, VarPair::TU);
    BiHomPoly carry = c_[ds_];
    for (int i = ds_; i >= 1; --i) {
      q.c_[i - 1] = div_by_u(carry);
      if (i >= 2) carry = c_[i - 1] + t * q.c_[i - 1];
    }
    require(c_[0] == -(t * q.c_[0]), ErrorKind::Invariant, "resmat", "form is not divisible by s*u - t*v");
    return q;
  }

 private:
  static BiHomPoly div_by_u(const BiHomPoly& f) {
    const int d = f.degree();
    require(f.coeff(d) == 0, ErrorKind::Invariant, "resmat", "form is not divisible by s*u - t*v");
    std::vector<Rat> c(f.coeffs().begin(), f.coeffs().end() - 1);
    return BiHomPoly(d - 1, std::move(c), VarPair::TU);
  }

  int ds_ = 0, dt_ = 0;
  std::vector<BiHomPoly> c_;
};

/// sum_i x_i(s,v) * y_i(t,u)
inline BiForm contract(const std::vector<BiHomPoly>& x, const std::vector<BiHomPoly>& y) {
  require(!x.empty() && x.size() == y.size(), ErrorKind::Invariant, "resmat", "contraction length mismatch");
  BiForm acc(x[0].degree(), y[0].degree());
  for (std::size_t i = 0; i < x.size(); ++i) acc += BiForm::outer(x[i], y[i]);
  return acc;
}

}  // namespace curvesing
