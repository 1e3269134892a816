#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/check.hpp"
#include "curvesing/mubasis.hpp"
#include "curvesing/resmat.hpp"
#include "curvesing/roots.hpp"
#include "curvesing/smith.hpp"

namespace curvesing {

// ---------------------------------------------------------------------------
// Homogeneous factor helpers

struct HomFactor {
  BiHomPoly factor;
  int exponent;
};

/// Square-free decomposition of a binary form; a root at (1:0) shows up as a
/// power of the second variable and is merged into the group of its exponent.
inline std::vector<HomFactor> squarefree_decomposition(const BiHomPoly& f) {
  require(!f.is_zero(), ErrorKind::Input, "polycore", "square-free decomposition of the zero form");
  const int k = f.second_valuation();
  std::vector<HomFactor> out;
  for (const auto& sf : squarefree_decomposition(f.dehomogenize()))
    out.push_back({BiHomPoly::homogenize(sf.factor, sf.factor.degree(), f.vars()), sf.exponent});
  if (k > 0) {
    const BiHomPoly u = BiHomPoly::monomial(0, 1, f.vars());
    bool merged = false;
    for (auto& x : out)
      if (x.exponent == k) {
        x.factor = normalize_primitive(x.factor * u);
        merged = true;
      }
    if (!merged) out.push_back({u, k});
    std::sort(out.begin(), out.end(), [](const HomFactor& a, const HomFactor& b) { return a.exponent < b.exponent; });
  }
  return out;
}

inline BiHomPoly squarefree_part(const BiHomPoly& f) {
  BiHomPoly r = BiHomPoly::constant(Rat(1), f.vars());
  for (const auto& x : squarefree_decomposition(f)) r = r * x.factor;
  return normalize_primitive(r);
}

/// Largest e with g^e | f (g nonconstant).
inline int multiplicity_in(const BiHomPoly& g, BiHomPoly f) {
  int e = 0;
  while (!f.is_zero() && f.degree() >= g.degree() && divides(g, f)) {
    f = exact_div(f, g);
    ++e;
  }
  return e;
}

/// The part of r supported on the roots of f.
inline BiHomPoly saturate(BiHomPoly r, const BiHomPoly& f) {
  BiHomPoly acc = BiHomPoly::constant(Rat(1), r.vars());
  if (f.degree() == 0) return acc;
  for (;;) {
    BiHomPoly g = bihom_gcd(r, f);
    if (g.degree() == 0) break;
    acc = acc * g;
    r = exact_div(r, g);
  }
  return normalize_primitive(acc);
}

/// Rational root (t0 : u0) of a linear form.
inline std::pair<Rat, Rat> linear_root(const BiHomPoly& l) {
  require(l.degree() == 1, ErrorKind::Invariant, "singularity", "linear_root of a non-linear form");
  // c1 t + c0 u = 0  ->  (t : u) = (-c0 : c1)
  if (l.coeff(1) == 0) return {Rat(1), Rat(0)};
  return {-l.coeff(0) / l.coeff(1), Rat(1)};
}

/// Pairwise coprime square-free forms such that every input's square-free part
/// is a product of them; rational linear factors are split off as their own atoms.
inline std::vector<BiHomPoly> coprime_atoms(const std::vector<BiHomPoly>& inputs) {
  std::vector<BiHomPoly> base;
  for (const auto& in : inputs) {
    if (in.is_zero() || in.degree() == 0) continue;
    BiHomPoly f = squarefree_part(in);
    std::vector<BiHomPoly> next;
    for (const auto& b : base) {
      BiHomPoly g = bihom_gcd(f, b);
      if (g.degree() == 0) {
        next.push_back(b);
        continue;
      }
      next.push_back(g);
      BiHomPoly rest = exact_div(b, g);
      if (rest.degree() > 0) next.push_back(normalize_primitive(rest));
      f = exact_div(f, g);
    }
    if (f.degree() > 0) next.push_back(normalize_primitive(f));
    base = std::move(next);
  }
  std::vector<BiHomPoly> out;
  for (const auto& b : base) {
    BiHomPoly rest = b;
    if (rest.second_valuation() > 0) {
      out.push_back(BiHomPoly::monomial(0, 1, b.vars()));
      rest = exact_div(rest, BiHomPoly::monomial(0, 1, b.vars()));
    }
    if (rest.degree() > 1)
      for (const auto& [r, m] : rational_roots(rest.dehomogenize())) {
        BiHomPoly lin = normalize_primitive(BiHomPoly::linear(Rat(1), -r, b.vars()));
        out.push_back(lin);
        rest = exact_div(rest, lin);
      }
    if (rest.degree() > 0) out.push_back(normalize_primitive(rest));
  }
  std::sort(out.begin(), out.end(), [](const BiHomPoly& x, const BiHomPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return to_string(x) < to_string(y);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Delta and its identities

struct DeltaInvariant {
  BiHomPoly delta;  // degree (n-1)(n-2) in (t,u), normalized primitive
};

/// Delta from the first principal subresultant minor of the Sylvester matrix:
/// the minor equals u^(n-2) * Delta, and the quotient is returned.
inline DeltaInvariant delta_subresultant(const HomMatrix& s, int n, int mu) {
  const BiHomPoly psc = first_principal_subresultant_minor(s, mu);
  require(!psc.is_zero(), ErrorKind::Degenerate, "singularity", "subresultant minor vanishes (non-birational input)");
  const BiHomPoly delta = div_second_power(psc, n - 2);
  require(delta.degree() == (n - 1) * (n - 2), ErrorKind::Invariant, "singularity", "Delta has the wrong degree");
  return {normalize_primitive(delta)};
}

inline DeltaInvariant delta_subresultant(const Parameterization& phi, const MuBasis& b) {
  return delta_subresultant(build_sylvester(build_moving_forms(phi, b)), phi.degree(), b.mu);
}

/// prod_k d_k^(k-1)
inline BiHomPoly weighted_product(const SingularFactorSet& sf) {
  BiHomPoly r = BiHomPoly::constant(Rat(1), VarPair::TU);
  for (int k = 2; k <= sf.n; ++k) r = r * pow(sf.d[k], k - 1);
  return normalize_primitive(r);
}

inline CheckResult check_delta_product(const DeltaInvariant& d, const SingularFactorSet& sf) {
  const BiHomPoly prod = weighted_product(sf);
  CheckResult r = make_check("delta_factorization", equal_up_to_scalar(prod, d.delta));
  if (!r.passed) {
    r.detail = "Delta differs from prod d_k^(k-1)";
    r.witness = {{"delta", to_string(d.delta)}, {"product", to_string(prod)}};
    if (prod.degree() == d.delta.degree()) {
      BiHomPoly g = bihom_gcd(prod, d.delta);
      r.witness.push_back({"delta_only", to_string(exact_div(d.delta, g))});
      r.witness.push_back({"product_only", to_string(exact_div(prod, g))});
    }
  }
  return r;
}

/// Determinant of S vanishes, the gcd of its (n-1)-minors at u = 1 is Delta(t,1),
/// and all minors of size < mu generate the unit ideal.
inline std::vector<CheckResult> fitting_support_check(const HomMatrix& s, int mu, const DeltaInvariant& delta) {
  std::vector<CheckResult> out;
  const std::size_t n = s.rows();
  const bool singular = det_hom(s).is_zero();
  out.push_back(make_check("fitting_ideals.determinant_vanishes", singular));
  const auto d = divisors_from_smith(SmithForm{smith_diagonal(dehomogenize(s)), {}, {}});
  const UniPoly top = d[n - 1];
  const UniPoly expect = delta.delta.dehomogenize();
  CheckResult c = make_check("fitting_ideals.corank_one_divisor_is_delta", !top.is_zero() && equal_up_to_scalar(top, expect));
  if (!c.passed) c.witness = {{"D_n-1", to_string(top)}, {"delta_at_u1", to_string(expect)}};
  out.push_back(c);
  bool units = true;
  for (int i = 0; i <= mu - 1; ++i) units = units && d[i].degree() == 0;
  out.push_back(make_check("fitting_ideals.small_minors_are_units", units));
  return out;
}

// ---------------------------------------------------------------------------
// Reduced factors and the h_k / Psi decomposition

inline SingularFactorSet reduced_singular_factors(SingularFactorSet sf) {
  const int top = sf.n - sf.mu;
  sf.reduced.assign(static_cast<std::size_t>(sf.n) + 1, BiHomPoly::constant(Rat(1), VarPair::TU));
  for (int k = 2; k <= sf.n; ++k) {
    BiHomPoly r = sf.d[k];
    for (int l = top; l >= k + 1; --l) r = exact_div(r, bihom_gcd(r, sf.d[l]));
    sf.reduced[k] = normalize_primitive(r);
  }
  return sf;
}

struct ProperPoint {
  PointP2 point;
  std::pair<Rat, Rat> parameter;  // a rational parameter (t : u) mapping to it
  BiHomPoly H;                    // in (t,u)
  int multiplicity = 0;
  bool in_range = true;           // multiplicity allowed by (n, mu)
};

struct FactorSplit {
  std::vector<BiHomPoly> h;                  // index k
  std::vector<std::map<int, BiHomPoly>> psi;  // psi[k][s], nontrivial entries only
  std::vector<bool> certified;               // per k
  std::vector<ProperPoint> points;           // proper singular points found at rational parameters
  std::vector<std::string> notes;
};

inline PointP2 curve_point_tu(const Parameterization& phi, const std::pair<Rat, Rat>& tu) {
  return curve_point(phi, tu.first, tu.second);
}

/// d_k = h_k * prod_{s >= k} Psi_k^s. h_k collects H_Q over proper points of
/// multiplicity k: rational parameters are resolved through H_Q exactly, and a
/// non-rational factor of the reduced factor is accepted only with exponent 1.
/// Psi_k^s is the part of d_k / h_k supported on the roots of the reduced factor of index s.
inline FactorSplit split_singular_factors(const SingularFactorSet& sf, const Parameterization& phi, const MuBasis& b) {
  require(!sf.reduced.empty(), ErrorKind::Invariant, "singularity", "reduced factors must be computed first");
  const int n = sf.n, top = n - sf.mu;
  const BiHomPoly one = BiHomPoly::constant(Rat(1), VarPair::TU);
  FactorSplit out;
  out.h.assign(static_cast<std::size_t>(n) + 1, one);
  out.psi.resize(static_cast<std::size_t>(n) + 1);
  out.certified.assign(static_cast<std::size_t>(n) + 1, true);
  for (int k = top; k >= 2; --k) {
    const BiHomPoly& red = sf.reduced[k];
    if (red.degree() == 0) continue;
    BiHomPoly hk = one;
    for (const auto& atom : coprime_atoms({red})) {
      const int e = multiplicity_in(atom, red);
      if (divides(atom, hk)) continue;  // already inside some H_Q
      if (atom.degree() == 1) {
        const auto param = linear_root(atom);
        ProperPoint pp;
        pp.parameter = param;
        pp.point = curve_point_tu(phi, param).normalized();
        pp.H = normalize_primitive(h_invariant(b, pp.point).with_vars(VarPair::TU));
        pp.multiplicity = pp.H.degree();
        pp.in_range = multiplicity_range_check(n, sf.mu, pp.multiplicity);
        out.points.push_back(pp);
        if (pp.multiplicity != k || !divides(pp.H, sf.d[k])) {
          out.certified[k] = false;
          out.notes.push_back("k=" + std::to_string(k) + ": H_Q at a rational root has degree " + std::to_string(pp.multiplicity));
          continue;
        }
        hk = hk * pp.H;
      } else if (e == 1) {
        hk = hk * atom;
      } else {
        out.certified[k] = false;
        out.notes.push_back("k=" + std::to_string(k) + ": factor " + to_string(atom) + " has exponent " + std::to_string(e) +
                            " with non-rational roots; proper/infinitely-near split undetermined");
      }
    }
    if (!divides(hk, sf.d[k])) {
      out.certified[k] = false;
      out.notes.push_back("k=" + std::to_string(k) + ": h_k does not divide d_k");
      continue;
    }
    out.h[k] = normalize_primitive(hk);
  }
  for (int k = 2; k <= top; ++k) {
    BiHomPoly rest = exact_div(sf.d[k], out.h[k]);
    for (int s = k; s <= top; ++s) {
      if (sf.reduced[s].degree() == 0) continue;
      BiHomPoly psi = saturate(rest, squarefree_part(sf.reduced[s]));
      if (psi.degree() == 0) continue;
      out.psi[k][s] = psi;
      rest = exact_div(rest, psi);
    }
    if (rest.degree() > 0) {
      out.certified[k] = false;
      out.notes.push_back("k=" + std::to_string(k) + ": part of d_k is not supported on any reduced factor");
    }
  }
  return out;
}

/// H_Q | d_m and gcd(H_Q, d_k) = 1 for k > m, at each proper point found.
inline CheckResult proper_point_divisibility_check(const FactorSplit& split, const SingularFactorSet& sf) {
  CheckResult r = make_check("proper_point_divisibility", true);
  for (const auto& p : split.points) {
    const int m = p.multiplicity;
    bool ok = m >= 2 && m <= sf.n && divides(p.H, sf.d[m]);
    for (int k = m + 1; k <= sf.n && ok; ++k) ok = bihom_gcd(p.H, sf.d[k]).degree() == 0;
    if (!ok) {
      r.passed = false;
      r.witness.push_back({"H_Q", to_string(p.H)});
    }
  }
  if (split.points.empty()) r.detail = "no proper singular point at a rational parameter";
  return r;
}

// ---------------------------------------------------------------------------
// Stratification report

struct Stratum {
  int k = 0;
  BiHomPoly d, reduced;
  std::vector<HomFactor> d_squarefree, reduced_squarefree;
  int point_count = 0;       // deg d_k / k
  bool count_integral = true;
};

struct AtomProfile {
  BiHomPoly factor;
  std::vector<int> exponent_d, exponent_reduced;  // index k
  int proper_multiplicity = 0;                    // k with a positive reduced exponent
  std::optional<std::pair<Rat, Rat>> rational_parameter;
  std::vector<ApproxRoot> roots;
  std::vector<std::array<std::complex<long double>, 3>> images;
  bool best_effort = false;
};

struct StratifiedReport {
  int n = 0, mu = 0;
  std::vector<Stratum> strata;  // k = 2..n-mu
  std::vector<AtomProfile> atoms;
  FactorSplit split;
  int genus_tally = 0, genus_target = 0;
  bool genus_ok = false;
  std::vector<std::string> flags;
};

inline std::array<std::complex<long double>, 3> approx_image(const Parameterization& phi, std::complex<long double> t, bool at_infinity) {
  using C = std::complex<long double>;
  auto ev = [&](const BiHomPoly& f) {
    if (at_infinity) return C(static_cast<long double>(f.coeff(f.degree()).get_d()));
    C acc(0);
    for (int i = f.degree(); i >= 0; --i) acc = acc * t + C(static_cast<long double>(f.coeff(i).get_d()));
    return acc;
  };
  std::array<C, 3> x{ev(phi.a), ev(phi.b), ev(phi.c)};
  long double m = 0;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (std::abs(x[i]) > m) {
      m = std::abs(x[i]);
      idx = i;
    }
  if (m > 0) {
    const C piv = x[idx];
    for (auto& v : x) v /= piv;
  }
  return x;
}

inline StratifiedReport stratification_report(const Parameterization& phi, const MuBasis& b, const SingularFactorSet& sf,
                                              bool approx_roots = false, const Rat& tol = Rat(1, 1000000000)) {
  StratifiedReport rep;
  rep.n = sf.n;
  rep.mu = sf.mu;
  const int top = sf.n - sf.mu;
  rep.genus_target = (sf.n - 1) * (sf.n - 2);
  for (int k = 2; k <= top; ++k) {
    Stratum st;
    st.k = k;
    st.d = sf.d[k];
    st.reduced = sf.reduced[k];
    if (st.d.degree() > 0) st.d_squarefree = squarefree_decomposition(st.d);
    if (st.reduced.degree() > 0) st.reduced_squarefree = squarefree_decomposition(st.reduced);
    st.count_integral = st.d.degree() % k == 0;
    st.point_count = st.d.degree() / k;
    if (!st.count_integral) rep.flags.push_back("deg d_" + std::to_string(k) + " is not a multiple of " + std::to_string(k));
    rep.genus_tally += st.point_count * k * (k - 1);
    rep.strata.push_back(st);
  }
  rep.genus_ok = rep.genus_tally == rep.genus_target;
  if (!rep.genus_ok) rep.flags.push_back("genus budget mismatch");

  std::vector<BiHomPoly> all(sf.d.begin() + 2, sf.d.end());
  for (const auto& atom : coprime_atoms(all)) {
    AtomProfile ap;
    ap.factor = atom;
    ap.exponent_d.assign(static_cast<std::size_t>(sf.n) + 1, 0);
    ap.exponent_reduced.assign(static_cast<std::size_t>(sf.n) + 1, 0);
    for (int k = 2; k <= sf.n; ++k) {
      ap.exponent_d[k] = multiplicity_in(atom, sf.d[k]);
      ap.exponent_reduced[k] = multiplicity_in(atom, sf.reduced[k]);
      if (ap.exponent_reduced[k] > 0) {
        if (ap.proper_multiplicity != 0) ap.best_effort = true;
        ap.proper_multiplicity = k;
      }
    }
    if (ap.proper_multiplicity == 0) ap.best_effort = true;
    if (atom.degree() == 1) ap.rational_parameter = linear_root(atom);
    if (approx_roots) {
      if (atom.degree() == 1 && atom.coeff(1) == 0) {
        ap.roots.push_back({{0, 0}, 1, 0, true});
        ap.images.push_back(approx_image(phi, {0, 0}, true));
      } else {
        for (auto r : complex_roots_approx(atom.dehomogenize(), tol)) {
          ap.images.push_back(approx_image(phi, r.value, false));
          ap.roots.push_back(r);
        }
      }
    }
    rep.atoms.push_back(ap);
  }
  rep.split = split_singular_factors(sf, phi, b);
  for (const auto& note : rep.split.notes) rep.flags.push_back(note);
  return rep;
}

// ---------------------------------------------------------------------------
// Bezout matrix and D-resultants

/// D_i(B_FG) = c^(n-i) prod_{k > i} d_k^(k-i), and D_0 = 0. D_i is the gcd of the
/// (n-i)-minors. For n <= max_enum every i is checked by minor enumeration;
/// otherwise D_0, D_1 and D_(n-1) are checked through Smith forms in both charts.
inline std::vector<CheckResult> bezout_divisor_check(const Parameterization& phi, const SingularFactorSet& sf, std::size_t max_enum = 8) {
  const int n = phi.degree();
  const HomMatrix bfg = build_bezout_FG(phi);
  const BiHomPoly c = phi.c.with_vars(VarPair::TU);
  auto expected = [&](int i) {
    BiHomPoly r = pow(c, n - i);
    for (int k = i + 1; k <= n; ++k) r = r * pow(sf.d[k], k - i);
    return normalize_primitive(r);
  };
  std::vector<CheckResult> out;
  std::vector<BiHomPoly> chain;  // chain[size] = gcd of size x size minors
  const bool full = static_cast<std::size_t>(n) <= max_enum;
  if (full) {
    for (int size = 0; size <= n; ++size) {
      BiHomPoly g = BiHomPoly::zero(0, VarPair::TU);
      if (size == 0) g = BiHomPoly::constant(Rat(1), VarPair::TU);
      for (const auto& rs : combinations(static_cast<std::size_t>(n), static_cast<std::size_t>(size)))
        for (const auto& cs : combinations(static_cast<std::size_t>(n), static_cast<std::size_t>(size))) {
          if (size == 0) break;
          BiHomPoly m = det_hom(bfg.submatrix(rs, cs));
          g = g.is_zero() ? (m.is_zero() ? g : normalize_primitive(m)) : bihom_gcd(g, m);
        }
      chain.push_back(g);
    }
  } else {
    chain = homogeneous_divisor_chain(bfg);
  }
  out.push_back(make_check("bezout_divisor_chain.D0_vanishes", chain[n].is_zero()));
  for (int i = 1; i <= n - 1; ++i) {
    if (!full && i != 1 && i != n - 1) continue;
    const BiHomPoly got = chain[n - i], want = expected(i);
    CheckResult r = make_check("bezout_divisor_chain.D" + std::to_string(i), !got.is_zero() && equal_up_to_scalar(got, want));
    if (!r.passed) r.witness = {{"computed", to_string(got)}, {"expected", to_string(want)}};
    out.push_back(r);
  }
  return out;
}

/// B_FG = c(t,u) * N * S(t,u)^T, with N from the symbolic Bezout matrix.
inline CheckResult bezout_sylvester_check(const Parameterization& phi, const MuBasis& b) {
  const SymbolicBezout sb = build_symbolic_bezout(phi, b);
  const HomMatrix bfg = build_bezout_FG(phi);
  const HomMatrix s = build_sylvester(build_moving_forms(phi, b));
  const int n = phi.degree();
  const BiHomPoly c = phi.c.with_vars(VarPair::TU);
  bool ok = true;
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j) {
      BiHomPoly acc = BiHomPoly::zero(n, VarPair::TU);
      for (int k = 0; k < n; ++k) acc += s(j, k) * sb.N(i, k);
      ok = bfg(i, j) == c * acc;
    }
  CheckResult r = make_check("bezout_sylvester_relation", ok && sb.divisible_by_x3);
  r.detail = "det N = " + to_string(det(sb.N));
  return r;
}

/// Res_(s,v)(F/(su - tv), G/(su - tv)).
inline BiHomPoly d_resultant_same_denominator(const Parameterization& phi) {
  const DiagonalQuotients dq = diagonal_quotients(phi);
  return resultant(dq.P, dq.Q);
}

inline CheckResult check_d_resultant_same_denominator(const Parameterization& phi, const SingularFactorSet& sf) {
  const int n = phi.degree();
  const BiHomPoly lhs = d_resultant_same_denominator(phi);
  const BiHomPoly rhs = pow(phi.c.with_vars(VarPair::TU), n - 1) * weighted_product(sf);
  CheckResult r = make_check("d_resultant_factorization", !lhs.is_zero() && equal_up_to_scalar(lhs, rhs));
  r.detail = "degree " + std::to_string(lhs.degree());
  if (!r.passed) r.witness = {{"d_resultant", to_string(lhs)}, {"expected", to_string(rhs)}};
  return r;
}

/// (A/C, B/D) with gcd(A, C) = gcd(B, D) = 1.
struct RationalFunctionPair {
  UniPoly A, C, B, D;
  int n1 = 0, n2 = 0;
  BiHomPoly At, Ct, Bt, Dt;          // homogenisations in (s,v)
  BiHomPoly delta, h, q, ct, at, bt;  // gcd, cofactors, lcm denominators, numerators

  RationalFunctionPair(UniPoly a, UniPoly c, UniPoly b, UniPoly d)
      : A(std::move(a)), C(std::move(c)), B(std::move(b)), D(std::move(d)) {
    require(!C.is_zero() && !D.is_zero(), ErrorKind::Input, "singularity", "zero denominator");
    require(poly_gcd(A, C).degree() == 0, ErrorKind::Degenerate, "singularity", "gcd(A, C) is not constant");
    require(poly_gcd(B, D).degree() == 0, ErrorKind::Degenerate, "singularity", "gcd(B, D) is not constant");
    n1 = std::max(A.degree(), C.degree());
    n2 = std::max(B.degree(), D.degree());
    require(n1 >= 1 && n2 >= 1, ErrorKind::Input, "singularity", "both coordinates must be nonconstant");
    At = BiHomPoly::homogenize(A, n1);
    Ct = BiHomPoly::homogenize(C, n1);
    Bt = BiHomPoly::homogenize(B, n2);
    Dt = BiHomPoly::homogenize(D, n2);
    delta = bihom_gcd(Ct, Dt);
    h = exact_div(Dt, delta);
    q = exact_div(Ct, delta);
    ct = Ct * h;
    at = At * h;
    bt = Bt * q;
  }

  Parameterization nu() const { return Parameterization(at, bt, ct); }
};

struct DResultantReport {
  BiHomPoly lhs, rhs, d_resultant, delta_nu;
  CheckResult check;
};

/// h^(deg h - 1) q^(deg q - 1) D-resultant = delta^(deg delta - 1) Delta_nu, up to a scalar.
inline DResultantReport d_resultant_general(const RationalFunctionPair& rp) {
  DResultantReport rep;
  const Parameterization nu = rp.nu();
  const MuBasis b = compute_mu_basis(nu);
  rep.delta_nu = delta_subresultant(nu, b).delta;
  auto tu = [](const BiHomPoly& f) { return f.with_vars(VarPair::TU); };
  const BiForm f = BiForm::outer(rp.At, tu(rp.Ct)) - BiForm::outer(rp.Ct, tu(rp.At));
  const BiForm g = BiForm::outer(rp.Bt, tu(rp.Dt)) - BiForm::outer(rp.Dt, tu(rp.Bt));
  const BiForm fq = f.div_diagonal(), gq = g.div_diagonal();
  if (fq.s_degree() == 0 || gq.s_degree() == 0) {
    // Resultant with a form of s-degree 0 is a power of that form.
    const BiForm& c0 = fq.s_degree() == 0 ? fq : gq;
    const BiForm& other = fq.s_degree() == 0 ? gq : fq;
    rep.d_resultant = pow(c0.s_coeff(0), other.s_degree());
  } else {
    rep.d_resultant = resultant(fq, gq);
  }
  auto power = [&](const BiHomPoly& x) { return pow(tu(x), std::max(x.degree() - 1, 0)); };
  rep.lhs = power(rp.h) * power(rp.q) * rep.d_resultant;
  rep.rhs = power(rp.delta) * rep.delta_nu;
  rep.check = make_check("d_resultant_general", !rep.lhs.is_zero() && equal_up_to_scalar(rep.lhs, rep.rhs));
  rep.check.detail = "deg h = " + std::to_string(rp.h.degree()) + ", deg q = " + std::to_string(rp.q.degree()) +
                     ", deg delta = " + std::to_string(rp.delta.degree());
  if (!rep.check.passed) rep.check.witness = {{"lhs", to_string(rep.lhs)}, {"rhs", to_string(rep.rhs)}};
  return rep;
}

}  // namespace curvesing
