#include <gtest/gtest.h>

#include "curvesing/linalg.hpp"
#include "curvesing/resmat.hpp"
#include "support.hpp"

using namespace curvesing;
using namespace testing_support;

namespace {

Parameterization make(const Curve& c) { return Parameterization(c.a, c.b, c.c); }

/// su - tv as a BiForm of bidegree (1, 1).
BiForm su_minus_tv() { return BiForm::outer(s_(), v_(VarPair::TU)) - BiForm::outer(v_(), s_(VarPair::TU)); }

BiForm times(const BiForm& a, const BiForm& b) {
  std::vector<BiHomPoly> c(static_cast<std::size_t>(a.s_degree() + b.s_degree()) + 1,
                           BiHomPoly::zero(a.t_degree() + b.t_degree(), VarPair::TU));
  for (int i = 0; i <= a.s_degree(); ++i)
    for (int j = 0; j <= b.s_degree(); ++j) c[i + j] += a.s_coeff(i) * b.s_coeff(j);
  return BiForm(a.s_degree() + b.s_degree(), a.t_degree() + b.t_degree(), c);
}

RatMatrix at(const HomMatrix& m, const Rat& t) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval(t, Rat(1));
  return r;
}

std::vector<BiHomPoly> constants(std::initializer_list<long> c) {
  std::vector<BiHomPoly> out;
  for (long x : c) out.push_back(BiHomPoly::constant(Rat(x), VarPair::TU));
  return out;
}

}  // namespace

TEST(MovingForms, SextuplePointDegrees) {
  const Parameterization phi = make(sextuple_point());
  const MovingForms m = build_moving_forms(phi, compute_mu_basis(phi));
  EXPECT_EQ(m.p_phi.s_degree(), 4);
  EXPECT_EQ(m.q_phi.s_degree(), 6);
  EXPECT_EQ(m.p_phi.t_degree(), 10);
  EXPECT_EQ(m.q_phi.t_degree(), 10);
}

TEST(MovingForms, CuspIsDirectSubstitution) {
  const Parameterization phi = make(cusp());
  const MovingForms m = build_moving_forms(phi, compute_mu_basis(phi));
  const BiForm expect = BiForm::outer(s_(), phi.a) - BiForm::outer(v_(), phi.b);
  // p is only defined up to scalar.
  const Rat k = m.p_phi.s_coeff(1).coeff(2) / expect.s_coeff(1).coeff(2);
  for (int i = 0; i <= 1; ++i) {
    BiHomPoly c = expect.s_coeff(i) * k;
    EXPECT_EQ(m.p_phi.s_coeff(i), c);
  }
}

TEST(MovingForms, QuotientMultipliesBack) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const Parameterization phi = make(random_curve(rng, 4));
    const MovingForms m = build_moving_forms(phi, compute_mu_basis(phi));
    EXPECT_EQ(times(m.p_phi.div_diagonal(), su_minus_tv()), m.p_phi);
    EXPECT_EQ(times(m.q_phi.div_diagonal(), su_minus_tv()), m.q_phi);
  }
}

TEST(Sylvester, SextuplePointIsSingular) {
  const Parameterization phi = make(sextuple_point());
  const HomMatrix s = build_sylvester(build_moving_forms(phi, compute_mu_basis(phi)));
  EXPECT_EQ(s.rows(), 10u);
  EXPECT_EQ(s.kind(), MatrixKind::Sylvester);
  EXPECT_TRUE(det_hom(s).is_zero());
  // Rank 9 at a generic parameter.
  EXPECT_EQ(rank(at(s, Rat(7))), 9u);
}

TEST(Sylvester, CuspRankProfile) {
  const Parameterization phi = make(cusp());
  const HomMatrix s = build_sylvester(build_moving_forms(phi, compute_mu_basis(phi)));
  EXPECT_EQ(s.rows(), 3u);
  for (long t : {2, -5, 13}) EXPECT_EQ(rank(at(s, Rat(t))), 2u);
  EXPECT_EQ(rank(at(s, Rat(0))), 1u);
}

TEST(Hybrid, SextuplePointSizes) {
  const Parameterization phi = make(sextuple_point());
  const MovingForms m = build_moving_forms(phi, compute_mu_basis(phi));
  for (int j = 0; j <= 4; ++j) {
    const HomMatrix h = build_hybrid(m, j);
    EXPECT_EQ(h.rows(), static_cast<std::size_t>(10 - j));
    EXPECT_EQ(h.kind(), MatrixKind::Hybrid);
  }
  EXPECT_THROW(build_hybrid(m, 5), Error);
  EXPECT_THROW(build_hybrid(m, -1), Error);
}

TEST(Hybrid, ZeroIsSylvesterUpToColumnOrder) {
  const Parameterization phi = make(sextuple_point());
  const MovingForms m = build_moving_forms(phi, compute_mu_basis(phi));
  const HomMatrix h = build_hybrid(m, 0), s = build_sylvester(m);
  // h: mu shifts of q then n - mu shifts of p; s: the other way round.
  const std::size_t mu = 4, n = 10;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t hj = j < n - mu ? mu + j : j - (n - mu);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(h(i, hj), s(i, j));
  }
}

TEST(Hybrid, HandExpandedQuadraticLinear) {
  // f = 3 + 2s + 7s^2, g = 5 + s. p_0 = g_0 f - f_0 g with g_0 = 1, f_0 = 2 + 7s:
  // p_0 = (3 - 10) + (2 - 35 - 2) s + (7 - 7) s^2 = -7 - 35 s.
  const HomMatrix h = build_hybrid(constants({3, 2, 7}), constants({5, 1}), 1);
  ASSERT_EQ(h.rows(), 2u);
  EXPECT_EQ(h(0, 0).coeff(0), -35);
  EXPECT_EQ(h(1, 0).coeff(0), -7);
  EXPECT_EQ(h(0, 1).coeff(0), 1);
  EXPECT_EQ(h(1, 1).coeff(0), 5);
}

TEST(Hybrid, DeterminantIsResultantUpToSign) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const int nf = 2 + trial % 3, m = 1 + trial % nf;
    std::vector<BiHomPoly> f, g;
    const UniPoly fp = random_poly(rng, nf), gp = random_poly(rng, m);
    for (const auto& c : fp.coeffs()) f.push_back(BiHomPoly::constant(c, VarPair::TU));
    for (const auto& c : gp.coeffs()) g.push_back(BiHomPoly::constant(c, VarPair::TU));
    const Rat res = laplace_det(sylvester_matrix(fp.coeffs(), gp.coeffs(), Rat(0)), Rat(0), Rat(1));
    for (int j = 0; j <= m; ++j) {
      const HomMatrix h = build_hybrid(f, g, j);
      const Rat d = laplace_det(h.map([](const BiHomPoly& x) { return x.coeff(0); }), Rat(0), Rat(1));
      ASSERT_TRUE(d == res || d == -res) << "j = " << j;
    }
  }
}

TEST(Hybrid, CorankOneAtGenericParameters) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 3; ++trial) {
    const Parameterization phi = make(random_curve(rng, 5));
    const MovingForms m = build_moving_forms(phi, compute_mu_basis(phi));
    for (int j = 0; j <= m.mu; ++j) {
      const HomMatrix h = build_hybrid(m, j);
      for (long t : {3, -11, 17}) EXPECT_EQ(h.rows() - rank(at(h, make_rat(t, 7))), 1u);
    }
  }
}

TEST(Hybrid, PolynomialColumnsFollowTheirDefinition) {
  // p_(m-j-1) appears in psi_(j+1) as a column; compare with g_k f - f_k g computed by hand.
  std::mt19937_64 rng(2);
  const UniPoly fp = random_poly(rng, 4), gp = random_poly(rng, 3);
  std::vector<BiHomPoly> f, g;
  for (const auto& c : fp.coeffs()) f.push_back(BiHomPoly::constant(c, VarPair::TU));
  for (const auto& c : gp.coeffs()) g.push_back(BiHomPoly::constant(c, VarPair::TU));
  const int m = 3;
  for (int j = 0; j < m; ++j) {
    const int k = m - j - 1, cut = m - k;
    UniPoly fk, gk;
    for (int i = cut; i <= 4; ++i) fk += UniPoly::monomial(fp.coeff(i), i - cut);
    for (int i = cut; i <= m; ++i) gk += UniPoly::monomial(gp.coeff(i), i - cut);
    const UniPoly pk = gk * fp - fk * gp;
    const HomMatrix h = build_hybrid(f, g, j + 1);
    const std::size_t size = h.rows();
    for (std::size_t r = 0; r < size; ++r) ASSERT_EQ(h(r, 0).coeff(0), pk.coeff(static_cast<int>(size - 1 - r)));
  }
}

TEST(BezoutFG, SingularAndSized) {
  const Parameterization phi = make(cusp());
  const HomMatrix b = build_bezout_FG(phi);
  EXPECT_EQ(b.rows(), 3u);
  EXPECT_EQ(b.kind(), MatrixKind::BezoutFG);
  EXPECT_TRUE(det_hom(b).is_zero());
  const Parameterization e = make(sextuple_point());
  const HomMatrix be = build_bezout_FG(e);
  EXPECT_EQ(be.rows(), 10u);
  EXPECT_EQ(rank(at(be, Rat(5))), 9u);
}

TEST(BezoutFG, EqualInputsGiveZero) {
  const std::vector<UniPoly> f{upoly({1, 2}), upoly({0, 1}), upoly({3})};
  const PolyMatrix b = bezout_matrix(f, f, UniPoly{});
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) EXPECT_TRUE(b(i, j).is_zero());
}

TEST(BezoutFG, DeterminantIsResultantUpToSign) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const UniPoly f = random_poly(rng, 3), g = random_poly(rng, 3);
    const Rat res = laplace_det(sylvester_matrix(f.coeffs(), g.coeffs(), Rat(0)), Rat(0), Rat(1));
    const Rat d = laplace_det(bezout_matrix(f.coeffs(), g.coeffs(), Rat(0)), Rat(0), Rat(1));
    ASSERT_TRUE(d == res || d == -res);
  }
}

TEST(SymbolicBezout, CuspDivisibleAndInvertible) {
  const Parameterization phi = make(cusp());
  const SymbolicBezout sb = build_symbolic_bezout(phi, compute_mu_basis(phi));
  EXPECT_TRUE(sb.divisible_by_x3);
  EXPECT_NE(det(sb.N), 0);
  EXPECT_EQ(sb.B.kind(), MatrixKind::SymbolicBezout);
}

TEST(SymbolicBezout, FactorsThroughSylvester) {
  for (const Curve& c : {cusp(), node(), sextuple_point()}) {
    const Parameterization phi = make(c);
    const MuBasis b = compute_mu_basis(phi);
    const SymbolicBezout sb = build_symbolic_bezout(phi, b);
    ASSERT_NE(det(sb.N), 0);
    const FormMatrix st = symbolic_sylvester(b).transpose();
    const std::size_t n = st.rows();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        TernaryForm acc;
        for (std::size_t k = 0; k < n; ++k) acc += st(k, j) * sb.N(i, k);
        ASSERT_EQ(sb.A(i, j), acc);
      }
  }
}

TEST(SymbolicBezout, SpecialisesToBezoutFG) {
  const Parameterization phi = make(sextuple_point());
  const MuBasis b = compute_mu_basis(phi);
  const SymbolicBezout sb = build_symbolic_bezout(phi, b);
  const HomMatrix spec = substitute(sb.B, phi);
  EXPECT_EQ(spec, build_bezout_FG(phi));
}

TEST(DiagonalQuotients, DifferenceOfSquares) {
  const Parameterization phi(pow(s_(), 2), s_() * v_(), pow(v_(), 2), 1);
  const DiagonalQuotients d = diagonal_quotients(phi);
  // F = s^2 u^2 - t^2 v^2, P = su + tv.
  const BiForm p = BiForm::outer(s_(), v_(VarPair::TU)) + BiForm::outer(v_(), s_(VarPair::TU));
  EXPECT_EQ(d.P, p);
}

TEST(DiagonalQuotients, SextuplePointMultiplyBack) {
  const Parameterization phi = make(sextuple_point());
  const DiagonalQuotients d = diagonal_quotients(phi);
  EXPECT_EQ(d.P.s_degree(), 9);
  EXPECT_EQ(d.P.t_degree(), 9);
  EXPECT_EQ(d.Q.s_degree(), 9);
  EXPECT_EQ(times(d.P, su_minus_tv()), d.F);
  EXPECT_EQ(times(d.Q, su_minus_tv()), d.G);
  EXPECT_TRUE(d.F.on_diagonal().is_zero());
  EXPECT_TRUE(d.G.on_diagonal().is_zero());
}
