#include <gtest/gtest.h>

#include <tia/poly.hpp>
#include <tia/rational.hpp>

using namespace tia;

TEST(Rational, BasicArithmeticAndFormatting) {
  EXPECT_EQ(rat(1, 2) + rat(1, 3), rat(5, 6));
  EXPECT_EQ(rat(-2, 4), rat(-1, 2));  // stored in lowest terms
  EXPECT_EQ(to_string(rat(-1, 6)), "-1/6");
  EXPECT_EQ(to_string(rat(4, 2)), "2");
  EXPECT_EQ(rational_from_string("-1/6"), rat(-1, 6));
  EXPECT_EQ(rational_from_string("7"), rat(7));
  EXPECT_THROW(rational_from_string("1/0"), std::invalid_argument);
  EXPECT_THROW(rational_from_string("one half"), std::invalid_argument);
  EXPECT_THROW(rat(1, 0), std::invalid_argument);
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(binomial(7, 3), 35);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_THROW(factorial(-1), std::invalid_argument);
}

// The workhorse identity behind every density normalization:
//   int_{-1}^{1} (1+z)^m (1-z)^n dz = m! n! 2^{m+n+1} / (m+n+1)!
TEST(Poly1, EndpointWeightIntegrals) {
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const Rational got = integrate_definite(Poly1::binom_pow(m, n), rat(-1), rat(1));
      Int pow2 = 1;
      for (int i = 0; i < m + n + 1; ++i) pow2 *= 2;
      const Rational want{factorial(m) * factorial(n) * pow2, factorial(m + n + 1)};
      EXPECT_EQ(got, want) << "m=" << m << " n=" << n;
    }
  }
}

TEST(Poly1, EvalAndDegree) {
  const Poly1 p = Poly1::binom_pow(2, 1);  // (1+z)^2 (1-z)
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.eval(rat(0)), rat(1));
  EXPECT_EQ(p.eval(rat(1)), rat(0));
  EXPECT_EQ(p.eval(rat(-1)), rat(0));
  EXPECT_EQ(p.eval(rat(1, 2)), rat(9, 8));
  EXPECT_TRUE(Poly1().is_zero());
  EXPECT_EQ(Poly1().degree(), -1);
}

TEST(Poly1, ArithmeticAndAntiderivative) {
  const Poly1 z = Poly1::z();
  const Poly1 sq = z * z;
  const Poly1 anti = sq.antiderivative();  // z^3/3
  EXPECT_EQ(anti.coeff(3), rat(1, 3));
  EXPECT_EQ(anti.coeff(0), rat(0));
  EXPECT_EQ(integrate_definite(z, rat(0), rat(1)), rat(1, 2));
  EXPECT_EQ(Poly1(rat(1)) + Poly1(rat(-1)), Poly1());
  EXPECT_EQ(rat(3) * z - z - z - z, Poly1());
}

TEST(Poly1, RootMultiplicityWithQuotient) {
  const Poly1 p = Poly1::binom_pow(3, 1);  // (1+z)^3 (1-z)
  EXPECT_EQ(p.root_multiplicity(rat(0)), 0);
  EXPECT_EQ(p.root_multiplicity(rat(1)), 1);
  Poly1 q;
  EXPECT_EQ(p.root_multiplicity(rat(-1), &q), 3);
  EXPECT_NE(q.eval(rat(-1)), rat(0));
  // p == (z+1)^3 * q
  const Poly1 zp1 = Poly1::binom_pow(1, 0);
  EXPECT_EQ(zp1 * zp1 * zp1 * q, p);
}

TEST(Poly2, OuterProductAndSeparation) {
  const Poly1 u = Poly1::binom_pow(2, 0);
  const Poly1 v = Poly1::binom_pow(0, 3);
  const Poly2 P = Poly2::outer(u, v);
  Poly1 u2, v2;
  ASSERT_TRUE(P.separate(u2, v2));
  EXPECT_EQ(Poly2::outer(u2, v2), P);

  // A rank-two coefficient matrix must refuse to separate.
  const Poly2 sum = Poly2::outer(Poly1::binom_pow(2, 0), Poly1(rat(1))) +
                    Poly2::outer(Poly1(rat(1)), Poly1::binom_pow(0, 2));
  EXPECT_FALSE(sum.separate(u2, v2));
}

TEST(Poly2, SimplexIntegralOfConstantIsTriangleArea) {
  const Poly2 one = Poly2::outer(Poly1(rat(1)), Poly1(rat(1)));
  EXPECT_EQ(one.integrate_simplex(), rat(2));  // triangle -1 <= z1 < z2 <= 1
}

TEST(Poly2, PartialIntegrationCollapsesToOneVariable) {
  // integral over z2 in [z1, 1] of (1+z1) dz2 = (1+z1)(1-z1)
  const Poly2 P = Poly2::outer(Poly1::binom_pow(1, 0), Poly1(rat(1)));
  const Poly1 got = integrate_partial(P, 1, Bound::other_var(), Bound::constant(rat(1)));
  EXPECT_EQ(got, Poly1::binom_pow(1, 1));
  // integral over z1 in [-1, z2] of (1-z2) dz1 = (1+z2)(1-z2)
  const Poly2 Q = Poly2::outer(Poly1(rat(1)), Poly1::binom_pow(0, 1));
  const Poly1 got2 = integrate_partial(Q, 0, Bound::constant(rat(-1)), Bound::other_var());
  EXPECT_EQ(got2, Poly1::binom_pow(1, 1));
}

TEST(Poly2, EvalVar) {
  const Poly2 P = Poly2::outer(Poly1::binom_pow(1, 0), Poly1::binom_pow(0, 1));
  EXPECT_EQ(P.eval_var(0, rat(0)), Poly1::binom_pow(0, 1));   // (1+0)*(1-z2)
  EXPECT_EQ(P.eval_var(1, rat(-1)), rat(2) * Poly1::binom_pow(1, 0));
}
