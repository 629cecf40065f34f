#include <gtest/gtest.h>

#include "wzlab/combinatorics.hpp"
#include "wzlab/wz.hpp"

using namespace wzlab;

namespace {

using enum WzPairId;
using enum WzSide;

}  // namespace

TEST(Certificate, Examples) {
  EXPECT_EQ(certificate_poly(PairA, 1, 0), 2304);
  for (long n = 0; n <= 50; ++n) {
    EXPECT_EQ(certificate_poly(PairA, n, 0), BigInt(172 * n * n + 75 * n + 9) * (2 * n + 1) * (2 * n + 1));
    EXPECT_EQ(certificate_poly(PairB, n, 0), BigInt(n) * (22 * n * n - 3 * n - 3));
  }
}

TEST(Certificate, AdoptedBetaMonomials) {
  for (long n = -3; n <= 3; ++n) {
    for (long k = -3; k <= 3; ++k) {
      const long expect = 22 * n * n * n + (32 * k - 3) * n * n + (10 * k * k + 2 * k - 3) * n + k * k - k;
      ASSERT_EQ(beta_poly(adopted_beta(), n, k), expect);
      const long printed = 22 * n * n * n + (32 * k - 3) * n * n + (10 * n * n + 2 * n - 3) * n + k * k - k;
      ASSERT_EQ(beta_poly(printed_beta(), n, k), printed);
    }
  }
}

TEST(EvaluateTerm, BoundaryZeros) {
  for (long k = 0; k <= 10; ++k) EXPECT_TRUE(evaluate_term(PairA, F, 0, k).is_zero());
  EXPECT_TRUE(evaluate_term(PairA, G, 2, 3).is_zero());
  for (long n = 0; n <= 8; ++n) {
    for (long k = n + 1; k <= 10; ++k) EXPECT_TRUE(evaluate_term(PairA, G, n, k).is_zero());
  }
}

TEST(EvaluateTerm, FrozenValues) {
  // independent fraction arithmetic: G(0,0) = 9/256, G(1,0) = -9/256
  EXPECT_EQ(evaluate_term(PairA, G, 0, 0), Rational(9, 256));
  EXPECT_EQ(evaluate_term(PairA, G, 1, 0), Rational(-9, 256));
}

TEST(EvaluateTerm, PairBPole) {
  EXPECT_THROW(evaluate_term(PairB, F, 1, 0), PoleAtArgument);
  EXPECT_THROW(evaluate_term(PairB, F, 0, 1), PoleAtArgument);
  EXPECT_FALSE(wz_point_in_domain(PairB, 0, 1));
  EXPECT_FALSE(wz_point_in_domain(PairB, 0, 0));
  EXPECT_TRUE(wz_point_in_domain(PairB, 2, 0));
}

TEST(EvaluateTerm, PairBBalancedLimit) {
  // G'(n,0) = (22n^2-3n-3)/(2^{6n+3} 3n(n-1)(2n-1)) C(2n,n)^2 C(3n,n)
  for (long n = 2; n <= 30; ++n) {
    Rational expect(BigInt(22 * n * n - 3 * n - 3) * binomial(2 * n, n) * binomial(2 * n, n) *
                        binomial(3 * n, n),
                    BigInt(3 * n * (n - 1) * (2 * n - 1)));
    expect /= Rational(2).pow(6 * n + 3);
    ASSERT_EQ(evaluate_term(PairB, G, n, 0), expect) << n;
  }
}

TEST(WzResidual, Examples) {
  EXPECT_TRUE(wz_residual(PairA, 3, 1).is_zero());
  EXPECT_TRUE(wz_residual(PairA, 5, 5).is_zero());
  EXPECT_TRUE(wz_residual(PairB, 4, 2).is_zero());
}

TEST(WzResidual, PrintedBetaFails) {
  long failures = 0;
  for (long n = 2; n <= 8; ++n) {
    for (long k = 0; k <= 8; ++k) failures += !wz_residual(printed_beta(), n, k).is_zero();
  }
  EXPECT_GT(failures, 0);
}

TEST(WzResidual, Grid) {
  for (long n = 0; n <= 40; ++n) {
    for (long k = 0; k <= 40; ++k) {
      ASSERT_TRUE(wz_residual(PairA, n, k).is_zero()) << n << "," << k;
      if (wz_point_in_domain(PairB, n, k)) ASSERT_TRUE(wz_residual(PairB, n, k).is_zero()) << n << "," << k;
    }
  }
}

TEST(BetaRepair, RecoversAdoptedReading) {
  const BetaRepair r = repair_beta(12);
  EXPECT_FALSE(r.printed_satisfies);
  EXPECT_GT(r.printed_failures, 0);
  EXPECT_TRUE(r.unique);
  EXPECT_EQ(r.rank, 10);
  EXPECT_EQ(r.solution, adopted_beta());
}

TEST(Telescope, Examples) {
  EXPECT_TRUE(check_telescope(PairA, 3, 7).is_zero());
  EXPECT_TRUE(check_telescope(PairA, 5, 5).is_zero());
  EXPECT_TRUE(check_telescope(PairB, 4, 9).is_zero());
}

TEST(Telescope, Grid) {
  for (long m = 1; m <= 30; ++m) {
    for (long N = 1; N <= 30; ++N) {
      ASSERT_TRUE(check_telescope(PairA, m, N).is_zero()) << m << "," << N;
      if (m >= 2) ASSERT_TRUE(check_telescope(PairB, m, N).is_zero()) << m << "," << N;
    }
  }
}

TEST(ClosedForms, Examples) {
  for (long n : {0L, 1L, 10L}) EXPECT_TRUE(g_closed_form_residual(n).is_zero());
  for (long n : {2L, 3L, 25L}) EXPECT_TRUE(gb_difference_residual(n).is_zero());
  EXPECT_TRUE(summand_identity_residual(SummandFamily::Quartic, 0).is_zero());
  EXPECT_TRUE(summand_identity_residual(SummandFamily::Cubic, 1).is_zero());
  EXPECT_TRUE(summand_identity_residual(SummandFamily::Quartic, 7).is_zero());
  EXPECT_THROW(gb_difference_residual(1), std::domain_error);
}

TEST(ClosedForms, UpTo100) {
  for (long n = 0; n <= 100; ++n) {
    ASSERT_TRUE(g_closed_form_residual(n).is_zero()) << n;
    ASSERT_TRUE(summand_identity_residual(SummandFamily::Quartic, n).is_zero()) << n;
    ASSERT_TRUE(summand_identity_residual(SummandFamily::Cubic, n).is_zero()) << n;
    if (n >= 2) ASSERT_TRUE(gb_difference_residual(n).is_zero()) << n;
  }
}
