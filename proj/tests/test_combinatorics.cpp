#include <gtest/gtest.h>

#include "wzlab/combinatorics.hpp"
#include "wzlab/prime_context.hpp"

using namespace wzlab;

TEST(Factorial, Examples) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(12), 479001600);
  EXPECT_THROW(factorial(-1), NegativeArgument);
}

TEST(Factorial, IteratedProduct) {
  BigInt acc = 1;
  for (long n = 1; n <= 300; ++n) {
    acc *= n;
    ASSERT_EQ(factorial(n), acc);
  }
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  // negative upper index: (-1)^k C(k-n-1, k)
  EXPECT_EQ(binomial(-1, 3), -1);
  EXPECT_EQ(binomial(-3, 2), 6);
  EXPECT_EQ(binomial(-3, -1), 0);
}

TEST(Binomial, Pascal) {
  for (long n = 1; n <= 100; ++n) {
    for (long k = 0; k <= n; ++k) {
      ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << "," << k;
    }
  }
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(Rational(1, 2), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(1, 2), 3), Rational(15, 8));
  EXPECT_EQ(pochhammer(Rational(1), 6), Rational(720));
}

TEST(Pochhammer, FactorialForms) {
  for (long n = 0; n <= 200; ++n) {
    ASSERT_EQ(pochhammer(Rational(1), n), Rational(factorial(n)));
    ASSERT_EQ(pochhammer(Rational(1, 2), n),
              Rational(factorial(2 * n), factorial(n)) / Rational(4).pow(n));
  }
}

TEST(Harmonic, Examples) {
  EXPECT_EQ(harmonic(4, HarmonicKind::plain(1)), Rational(25, 12));
  EXPECT_EQ(harmonic(3, HarmonicKind::alternating(1)), Rational(-5, 6));
  EXPECT_EQ(harmonic(3, HarmonicKind::double_sum()), Rational(1));
  EXPECT_EQ(harmonic(0, HarmonicKind::plain(2)), Rational(0));
  EXPECT_EQ(harmonic(2, HarmonicKind::plain(2)), Rational(5, 4));
  EXPECT_EQ(harmonic(2, HarmonicKind::alternating(2)), Rational(-3, 4));
}

TEST(Harmonic, DoubleSumIdentity) {
  for (long n = 0; n <= 200; ++n) {
    const Rational h = harmonic(n, HarmonicKind::plain(1));
    const Rational h2 = harmonic(n, HarmonicKind::plain(2));
    ASSERT_EQ(harmonic(n, HarmonicKind::double_sum()), (h * h - h2) / Rational(2)) << n;
  }
}

TEST(Harmonic, AlternatingReverseOrder) {
  for (long n = 0; n <= 500; n += 7) {
    for (int r : {1, 2}) {
      Rational back;
      for (long k = n; k >= 1; --k) {
        const Rational t = Rational(1) / Rational(k).pow(r);
        back += (k % 2) ? -t : t;
      }
      ASSERT_EQ(harmonic(n, HarmonicKind::alternating(r)), back) << n << "," << r;
    }
  }
}

TEST(FermatQuotient, Examples) {
  EXPECT_EQ(fermat_quotient(2, 3), 1);
  EXPECT_EQ(fermat_quotient(2, 7), 9);
  EXPECT_EQ(fermat_quotient(2, 5), 3);
  EXPECT_THROW(fermat_quotient(10, 5), NotCoprime);
}

TEST(FermatQuotient, LogarithmModP) {
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L, 53L, 59L, 61L, 67L, 71L,
                 73L, 79L, 83L, 89L, 97L}) {
    for (long a = 1; a <= 50; ++a) {
      if (a % p == 0) continue;
      for (long b = 1; b <= 50; ++b) {
        if (b % p == 0) continue;
        const BigInt d = fermat_quotient(a * b, p) - fermat_quotient(a, p) - fermat_quotient(b, p);
        ASSERT_EQ(d % p, 0) << p << " " << a << " " << b;
      }
    }
  }
}

TEST(CombinatoricsCache, MatchesDirectEvaluation) {
  const CombinatoricsCache cache(60, 30);
  EXPECT_EQ(cache.factorial_bound(), 60);
  EXPECT_EQ(cache.harmonic_bound(), 30);
  for (long n = 0; n <= 60; ++n) ASSERT_EQ(cache.fact(n), factorial(n));
  for (long n = 0; n <= 60; ++n) {
    for (long k = -2; k <= n + 2; ++k) ASSERT_EQ(cache.binom(n, k), binomial(n, k));
  }
  for (long n = 0; n <= 30; ++n) {
    ASSERT_EQ(cache.H(n), harmonic(n, HarmonicKind::plain(1)));
    ASSERT_EQ(cache.H2(n), harmonic(n, HarmonicKind::plain(2)));
    ASSERT_EQ(cache.Hs(n), harmonic(n, HarmonicKind::alternating(1)));
    ASSERT_EQ(cache.Hs2(n), harmonic(n, HarmonicKind::alternating(2)));
    ASSERT_EQ(cache.H11(n), harmonic(n, HarmonicKind::double_sum()));
    Rational odd;
    for (long j = 1; j <= n; ++j) odd += Rational(1, 2 * j - 1);
    ASSERT_EQ(cache.Odd(n), odd);
  }
  EXPECT_THROW(cache.fact(61), std::out_of_range);
  EXPECT_THROW(cache.H(31), std::out_of_range);
}

TEST(PrimeContext, Basics) {
  const PrimeContext c(7);
  EXPECT_EQ(c.p(), 7);
  EXPECT_EQ(c.h(), 3);
  EXPECT_EQ(c.q(), Rational(9));
  EXPECT_EQ(c.P(), Rational(7));
  EXPECT_EQ(c.C(28, 14), binomial(28, 14));
  EXPECT_EQ(terms::central(c, -2), 0);
  EXPECT_EQ(terms::central(c, 6), 20);
}
