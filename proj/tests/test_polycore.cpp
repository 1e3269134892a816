#include <gtest/gtest.h>

#include "curvesing/polydet.hpp"
#include "curvesing/resultant.hpp"
#include "curvesing/roots.hpp"
#include "support.hpp"

using namespace curvesing;
using namespace testing_support;

TEST(Rat, CanonicalForm) {
  Rat r = make_rat(6, -4);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(to_string(make_rat(0, 5)), "0");
  EXPECT_EQ(parse_rat(" 10/4 "), make_rat(5, 2));
  EXPECT_THROW(parse_rat("1/0"), Error);
  EXPECT_THROW(parse_rat("abc"), Error);
}

TEST(PolyGcd, CommonRoot) {
  EXPECT_EQ(poly_gcd(upoly({-1, 0, 1}), upoly({-1, 1})), upoly({-1, 1}));
}

TEST(PolyGcd, ZeroConventions) {
  UniPoly f = upoly({2, 0, 4});
  EXPECT_EQ(poly_gcd(f, UniPoly{}), monic(f));
  EXPECT_EQ(poly_gcd(UniPoly{}, f), monic(f));
  EXPECT_TRUE(poly_gcd(UniPoly{}, UniPoly{}).is_zero());
}

TEST(PolyGcd, RandomCommonFactor) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly h = random_poly(rng, 1 + trial % 4);
    UniPoly f = random_poly(rng, 2 + trial % 3), g = random_poly(rng, 1 + trial % 5);
    UniPoly fh = f * h, gh = g * h;
    UniPoly d = poly_gcd(fh, gh);
    ASSERT_TRUE(divides(d, fh) && divides(d, gh));
    ASSERT_TRUE(divides(monic(h), d));
    // The cofactors must be coprime: their resultant (a determinant, no gcd) is nonzero.
    UniPoly cf = exact_div(fh, d), cg = exact_div(gh, d);
    if (cf.degree() > 0 && cg.degree() > 0) {
      Rat r = resultant(BiHomPoly::homogenize(cf, cf.degree()), BiHomPoly::homogenize(cg, cg.degree()));
      ASSERT_NE(r, 0);
    }
    ASSERT_EQ(d, euclid_gcd(fh, gh));
  }
}

TEST(BihomGcd, Valuations) {
  BiHomPoly s = s_(), v = v_();
  EXPECT_EQ(bihom_gcd(pow(s, 2) * v, pow(s, 3)), pow(s, 2));
  EXPECT_EQ(bihom_gcd(pow(v, 3), pow(v, 2) * s), pow(v, 2));
  EXPECT_EQ(bihom_gcd(pow(lin(1, 1), 2), lin(1, 1) * lin(1, -1)), lin(1, 1));
}

TEST(BihomGcd, VarPairMismatch) {
  EXPECT_THROW(bihom_gcd(s_(), s_(VarPair::TU)), Error);
}

TEST(BihomGcd, SextuplePointNumeratorsAgainstTwoCharts) {
  Curve e = sextuple_point();
  BiHomPoly g = bihom_gcd(e.a, e.b);
  // Oracle: gcd in both affine charts, then recombine the two valuations.
  UniPoly g_v = euclid_gcd(e.a.dehomogenize(), e.b.dehomogenize());
  UniPoly g_s = euclid_gcd(e.a.dehomogenize_first(), e.b.dehomogenize_first());
  const int at_infinity = g_s.valuation();
  BiHomPoly oracle = BiHomPoly::homogenize(g_v, g_v.degree() + at_infinity);
  EXPECT_TRUE(equal_up_to_scalar(g, oracle));
  EXPECT_TRUE(equal_up_to_scalar(g, pow(s_(), 2) * pow(lin(2, 1), 2)));
  EXPECT_TRUE(equal_up_to_scalar(bihom_gcd(e.a, e.c), pow(lin(1, 1), 6)));
}

TEST(BihomGcd, DividesAndIsMaximal) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    BiHomPoly h = random_form(rng, 1 + trial % 3);
    BiHomPoly f = random_form(rng, 2) * h, g = random_form(rng, 3) * h * pow(v_(), trial % 2);
    BiHomPoly d = bihom_gcd(f, g);
    ASSERT_TRUE(divides(d, f));
    ASSERT_TRUE(divides(d, g));
    ASSERT_TRUE(divides(h, d));
  }
}

TEST(Resultant, Trivial) {
  Rat r = resultant(lin(1, -1), lin(1, 1));
  EXPECT_EQ(abs(r), 2);
  BiHomPoly f = lin(1, 2) * lin(3, -1);
  EXPECT_EQ(resultant(f, f), 0);
  bool zero = false;
  EXPECT_EQ(resultant(BiHomPoly::zero(2), f, &zero), 0);
  EXPECT_TRUE(zero);
}

TEST(Resultant, AgreesWithProductOfRootDifferences) {
  // Res((s - a v)(s - b v), (s - c v)) = (c - a)(c - b) up to sign.
  BiHomPoly f = lin(1, -2) * lin(1, -5), g = lin(1, -7);
  EXPECT_EQ(abs(resultant(f, g)), Rat(5 * 2));
}

TEST(Resultant, ZeroIffCommonFactor) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    BiHomPoly f = random_form(rng, 2 + trial % 3), g = random_form(rng, 1 + trial % 4);
    if (trial % 2) {
      BiHomPoly h = random_form(rng, 1);
      f = f * h;
      g = g * h;
    }
    const bool common = bihom_gcd(f, g).degree() >= 1;
    ASSERT_EQ(resultant(f, g) == 0, common) << to_string(f) << " / " << to_string(g);
  }
}

TEST(Squarefree, Trivial) {
  auto sf = squarefree_decomposition(upoly({0, 0, 1, 1}));  // t^2 (t+1)
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0].factor, upoly({1, 1}));
  EXPECT_EQ(sf[0].exponent, 1);
  EXPECT_EQ(sf[1].factor, upoly({0, 1}));
  EXPECT_EQ(sf[1].exponent, 2);
  EXPECT_THROW(squarefree_decomposition(UniPoly{}), Error);
}

TEST(Squarefree, SextuplePointFourthFactor) {
  UniPoly t2 = upoly({0, 1});
  UniPoly d4 = pow(upoly({1, 2}), 2) * pow(upoly({1, 1}), 4) * pow(t2, 2) * make_rat(1, 4);
  auto sf = squarefree_decomposition(d4);
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0].exponent, 2);
  EXPECT_EQ(sf[0].factor, upoly({0, 1, 2}));
  EXPECT_EQ(sf[1].exponent, 4);
  EXPECT_EQ(sf[1].factor, upoly({1, 1}));
}

TEST(Squarefree, ReconstructsRandomProducts) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    UniPoly f = random_poly(rng, 1) * pow(random_poly(rng, 2), 2) * pow(random_poly(rng, 1), 3);
    auto sf = squarefree_decomposition(f);
    UniPoly prod = UniPoly::constant(Rat(1));
    for (const auto& x : sf) {
      prod = prod * pow(x.factor, x.exponent);
      ASSERT_TRUE(poly_gcd(x.factor, x.factor.derivative()).degree() == 0);
    }
    ASSERT_TRUE(equal_up_to_scalar(prod, f));
    for (std::size_t i = 0; i < sf.size(); ++i)
      for (std::size_t j = i + 1; j < sf.size(); ++j) ASSERT_EQ(poly_gcd(sf[i].factor, sf[j].factor).degree(), 0);
  }
}

TEST(Squarefree, SquarefreeInputIsOneFactor) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    UniPoly f = random_poly(rng, 4);
    if (poly_gcd(f, f.derivative()).degree() != 0) continue;
    auto sf = squarefree_decomposition(f);
    ASSERT_EQ(sf.size(), 1u);
    EXPECT_EQ(sf[0].exponent, 1);
    EXPECT_TRUE(equal_up_to_scalar(sf[0].factor, f));
  }
}

TEST(Moebius, IdentityAndSwap) {
  BiHomPoly f = sv({3, -1, 4, 1});
  EXPECT_EQ(apply_moebius(f, MoebiusChange::identity()), f);
  BiHomPoly t = BiHomPoly::monomial(1, 0, VarPair::TU);
  EXPECT_TRUE(equal_up_to_scalar(apply_moebius(t, MoebiusChange::swap()), BiHomPoly::monomial(0, 1, VarPair::TU)));
  EXPECT_THROW(apply_moebius(f, MoebiusChange{Rat(1), Rat(2), Rat(2), Rat(4)}), Error);
}

TEST(Moebius, RoundTripAndMultiplicative) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    MoebiusChange m = MoebiusChange::random(rng);
    ASSERT_NE(m.det(), 0);
    BiHomPoly f = random_form(rng, 1 + trial % 6), g = random_form(rng, 2);
    EXPECT_TRUE(equal_up_to_scalar(apply_moebius(apply_moebius(f, m), m.inverse()), f));
    EXPECT_EQ(apply_moebius(f * g, m), apply_moebius(f, m) * apply_moebius(g, m));
  }
}

TEST(Normalize, ScalarInvariance) {
  UniPoly sext = upoly({1, 6, 21, 48, 71, 74, 43});
  EXPECT_EQ(normalize_primitive(sext * make_rat(1, 43)), sext);
  EXPECT_EQ(normalize_primitive(upoly({2, -2})), upoly({-1, 1}));
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    UniPoly f = random_poly(rng, 3);
    Rat c = make_rat(static_cast<long>(rng() % 50) - 25, 1 + static_cast<long>(rng() % 9));
    if (c == 0) continue;
    EXPECT_EQ(normalize_primitive(f * c), normalize_primitive(f));
    EXPECT_EQ(normalize_primitive(normalize_primitive(f)), normalize_primitive(f));
    BiHomPoly h = BiHomPoly::homogenize(f, 5);
    EXPECT_EQ(normalize_primitive(h * c), normalize_primitive(h));
  }
  EXPECT_THROW(normalize_primitive(UniPoly{}), Error);
}

TEST(ComplexRoots, Trivial) {
  auto r = complex_roots_approx(upoly({-1, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  std::vector<long double> re{r[0].value.real(), r[1].value.real()};
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(static_cast<double>(re[0]), -1.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(re[1]), 1.0, 1e-12);
  auto m = complex_roots_approx(pow(upoly({1, 1}), 6));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].multiplicity, 6);
  EXPECT_NEAR(static_cast<double>(m[0].value.real()), -1.0, 1e-12);
}

TEST(ComplexRoots, ResidualOracle) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    UniPoly f = random_poly(rng, 3 + trial % 4);
    for (const auto& r : complex_roots_approx(f)) {
      EXPECT_TRUE(r.converged);
      // Independent residual: evaluate the original polynomial, scaled to be monic.
      auto z = r.value;
      std::complex<long double> acc(0);
      for (int i = f.degree(); i >= 0; --i) acc = acc * z + static_cast<long double>(Rat(f.coeff(i) / f.leading()).get_d());
      EXPECT_LT(static_cast<double>(std::abs(acc)), 1e-8);
    }
  }
}

TEST(RationalRoots, FindsExactRoots) {
  UniPoly f = pow(upoly({1, 2}), 2) * upoly({0, 1}) * upoly({-3, 7}) * upoly({1, 0, 1});
  auto rr = rational_roots(f);
  ASSERT_EQ(rr.size(), 3u);
  EXPECT_EQ(rr[0].first, make_rat(-1, 2));
  EXPECT_EQ(rr[0].second, 2);
  EXPECT_EQ(rr[1].first, 0);
  EXPECT_EQ(rr[2].first, make_rat(3, 7));
}

TEST(Determinant, InterpolationBareissLaplaceAgree) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 4;
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (rng() % 5 == 0) ? UniPoly{} : random_poly(rng, static_cast<int>(rng() % 4));
    UniPoly a = det_interp(m), b = det_bareiss(m), c = laplace_det(m, UniPoly{}, UniPoly::constant(Rat(1)));
    ASSERT_EQ(a, c);
    ASSERT_EQ(b, c);
  }
}

TEST(Determinant, RationalAgainstLaplace) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = make_rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
    ASSERT_EQ(det(m), laplace_det(m, Rat(0), Rat(1)));
  }
}

TEST(Linalg, NullspaceAndInverse) {
  RatMatrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 7;
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0][0], -2);
  EXPECT_EQ(ns[0][1], 1);
  EXPECT_EQ(ns[0][2], 0);
  RatMatrix sq(2, 2);
  sq(0, 0) = 2; sq(0, 1) = 1; sq(1, 0) = 1; sq(1, 1) = 1;
  auto inv = inverse(sq);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(multiply(sq, *inv, Rat(0)), RatMatrix::identity(2, Rat(1), Rat(0)));
  RatMatrix sing(2, 2);
  sing(0, 0) = 1; sing(0, 1) = 2; sing(1, 0) = 2; sing(1, 1) = 4;
  EXPECT_FALSE(inverse(sing).has_value());
}

TEST(Diagonal, QuotientByDiagonalForm) {
  // F = s^2 u^2 - t^2 v^2 = (s u - t v)(s u + t v)
  BiForm f = BiForm::outer(pow(s_(), 2), pow(v_(VarPair::TU), 2)) - BiForm::outer(pow(v_(), 2), pow(s_(VarPair::TU), 2));
  BiForm q = f.div_diagonal();
  BiForm expected = BiForm::outer(s_(), v_(VarPair::TU)) + BiForm::outer(v_(), s_(VarPair::TU));
  EXPECT_EQ(q, expected);
  BiForm bad = BiForm::outer(pow(s_(), 2), pow(v_(VarPair::TU), 2));
  EXPECT_THROW(bad.div_diagonal(), Error);
}

TEST(Resultant, DivSecondPowerStripsOnlyTheSecondVariable) {
  const BiHomPoly t = s_(VarPair::TU), u = v_(VarPair::TU);
  const BiHomPoly f = pow(t, 2) * pow(u, 3) + t * pow(u, 4);
  EXPECT_EQ(div_second_power(f, 3), pow(t, 2) + t * u);
  EXPECT_THROW(div_second_power(f, 5), Error);
  EXPECT_THROW(div_second_power(pow(t, 2), 1), Error);
}

TEST(Resultant, SubresultantMinorOfCommonLinearFactor) {
  // f = (su - tv) s, g = (su - tv) v share one linear factor; the cofactors s, v
  // have resultant 1, so the first principal subresultant is a power of u alone.
  const BiHomPoly t = s_(VarPair::TU), u = v_(VarPair::TU), z = BiHomPoly::zero(1, VarPair::TU);
  const std::vector<BiHomPoly> f{z, -t, u}, g{-t, u, z};
  const HomMatrix s = sylvester_matrix(f, g, z);
  EXPECT_TRUE(det_hom(s).is_zero());
  EXPECT_EQ(first_principal_subresultant_minor(s, 2), pow(u, 2));
}
