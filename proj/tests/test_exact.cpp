#include <random>

#include <gtest/gtest.h>

#include "wzlab/exact.hpp"
#include "wzlab/modular64.hpp"

using namespace wzlab;

namespace {

// trial-division valuation, independent of the library
long naive_val(long x, long p) {
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

const long kPrimes[] = {3, 5, 7, 11, 13};

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  Rational z(BigInt(0), BigInt(-7));
  EXPECT_EQ(z.numerator(), 0);
  EXPECT_EQ(z.denominator(), 1);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(Rational, ArithmeticStaysReduced) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 300);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    for (const Rational& c : {a + b, a - b, a * b}) {
      EXPECT_GE(c.denominator(), 1);
      EXPECT_EQ(gcd(c.numerator(), c.denominator()), 1);
    }
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(padic_valuation(Rational(25, 12), 5), 2);
  EXPECT_EQ(padic_valuation(Rational(0), 7), kInfiniteValuation);
  EXPECT_EQ(padic_valuation(Rational(9135, 1024), 3), 2);
  EXPECT_EQ(padic_valuation(Rational(1, 3), 3), -1);
}

TEST(Valuation, AgreesWithTrialDivision) {
  for (long p : kPrimes) {
    for (long n = 1; n <= 2000; n += 7) {
      for (long d = 1; d <= 60; d += 11) {
        const Rational x(n, d);
        const long g = std::gcd(n, d);
        EXPECT_EQ(padic_valuation(x, p), naive_val(n / g, p) - naive_val(d / g, p));
      }
    }
  }
}

TEST(Valuation, Multiplicative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(1, 5000), den(1, 5000);
  for (long p : kPrimes) {
    for (int i = 0; i < 200; ++i) {
      const Rational x(num(rng), den(rng));
      const Rational y(-num(rng), den(rng));
      EXPECT_EQ(padic_valuation(x * y, p), padic_valuation(x, p) + padic_valuation(y, p));
    }
  }
}

TEST(PrimePowerModulus, Validation) {
  EXPECT_NO_THROW(PrimePowerModulus(3, 1));
  EXPECT_THROW(PrimePowerModulus(2, 1), InvalidModulus);
  EXPECT_THROW(PrimePowerModulus(9, 1), InvalidModulus);
  EXPECT_THROW(PrimePowerModulus(7, 0), InvalidModulus);
  EXPECT_EQ(PrimePowerModulus(7, 3).to_string(), "7^3");
  EXPECT_EQ(PrimePowerModulus(7, 3).value(), 343);
}

TEST(ReduceMod, Examples) {
  EXPECT_EQ(reduce_mod(Rational(9135, 1024), PrimePowerModulus(3, 3)).value(), 9);
  EXPECT_EQ(reduce_mod(Rational(0), PrimePowerModulus(5, 2)).value(), 0);
  EXPECT_THROW(reduce_mod(Rational(1, 3), PrimePowerModulus(3, 1)), NotPIntegral);
  EXPECT_EQ(reduce_mod(Rational(-1), PrimePowerModulus(5, 2)).value(), 24);
}

TEST(ReduceMod, MatchesBruteForceInverse) {
  // the residue is the unique v in [0, p^r) with d*v = n mod p^r
  for (long p : {3L, 5L, 7L}) {
    for (int r = 1; r <= 3; ++r) {
      const long m = ipow(p, r);
      for (long n = -40; n <= 40; n += 3) {
        for (long d = 1; d <= 30; ++d) {
          if (d % p == 0) continue;
          const Residue res = reduce_mod(Rational(n, d), PrimePowerModulus(p, r));
          const Rational x(n, d);
          long v = 0;
          const long nn = x.numerator().get_si(), dd = x.denominator().get_si();
          while (((dd * v - nn) % m + m) % m != 0) ++v;
          EXPECT_EQ(res.value(), v);
        }
      }
    }
  }
}

TEST(ReduceMod, RingHomomorphism) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-10000, 10000), den(1, 10000);
  for (long p : kPrimes) {
    for (int r = 1; r <= 5; ++r) {
      const PrimePowerModulus m(p, r);
      int tried = 0;
      while (tried < 60) {
        const Rational x(num(rng), den(rng));
        const Rational y(num(rng), den(rng));
        if (!is_p_integral(x, p) || !is_p_integral(y, p)) continue;
        ++tried;
        EXPECT_EQ(reduce_mod(x + y, m), reduce_mod(x, m) + reduce_mod(y, m));
        EXPECT_EQ(reduce_mod(x * y, m), reduce_mod(x, m) * reduce_mod(y, m));
        EXPECT_EQ(reduce_mod(x - y, m), reduce_mod(x, m) - reduce_mod(y, m));
        for (int s = 1; s <= r; ++s) {
          EXPECT_EQ(reduce_mod(x, m).truncate(s), reduce_mod(x, m.with_exponent(s)));
        }
      }
    }
  }
}

TEST(Residue, ModulusMismatch) {
  const Residue a(BigInt(1), PrimePowerModulus(5, 2));
  const Residue b(BigInt(1), PrimePowerModulus(5, 3));
  EXPECT_THROW(a + b, ModulusMismatch);
  EXPECT_THROW(a * b, ModulusMismatch);
  EXPECT_EQ(Residue(BigInt(-24), PrimePowerModulus(5, 2)).value(), 1);
}

TEST(Congruent, Examples) {
  EXPECT_TRUE(congruent(Rational(45, 8), Rational(45, 8) + Rational(3 * 125), PrimePowerModulus(5, 3)));
  EXPECT_TRUE(congruent(Rational(25, 12), Rational(0), PrimePowerModulus(5, 2)));
  EXPECT_FALSE(congruent(Rational(1, 2), Rational(1), PrimePowerModulus(3, 1)));
  // non-p-integral sides whose difference is p-adically small
  EXPECT_TRUE(congruent(Rational(1, 5) + Rational(25), Rational(1, 5), PrimePowerModulus(5, 2)));
  EXPECT_FALSE(congruent(Rational(1, 5), Rational(0), PrimePowerModulus(5, 1)));
}

TEST(Congruent, LadderAndRouteAgreement) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-3000, 3000), den(1, 3000);
  for (long p : kPrimes) {
    for (int i = 0; i < 200; ++i) {
      const Rational x(num(rng), den(rng));
      const Rational y = x + Rational(ipow(p, 1 + i % 4) * (i % 5 + 1), 1 + (i % 7) * p + 1);
      for (int r = 1; r <= 5; ++r) {
        const PrimePowerModulus m(p, r);
        const bool c = congruent(x, y, m);
        if (c) {
          for (int s = 1; s < r; ++s) EXPECT_TRUE(congruent(x, y, m.with_exponent(s)));
        }
        if (is_p_integral(x, p) && is_p_integral(y, p)) {
          EXPECT_EQ(c, reduce_mod(x, m) == reduce_mod(y, m));
        }
      }
    }
  }
}

TEST(Primality, SmallAndLarge) {
  long count = 0;
  for (std::uint64_t n = 0; n < 1000; ++n) count += is_prime(n);
  EXPECT_EQ(count, 168);
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(ModRing64, InverseAndPow) {
  const ModRing64 ring(499, 5);
  EXPECT_EQ(ring.modulus(), 30938747502499ULL);
  for (std::uint64_t a : {2ULL, 3ULL, 1024ULL, 123456789ULL}) {
    EXPECT_EQ(ring.mul(a, ring.inv(a)), 1u);
  }
  EXPECT_EQ(ring.pow(2, 10), 1024u);
  EXPECT_EQ(ring.reduce(-1), ring.modulus() - 1);
  EXPECT_THROW(inverse_mod(499, ring.modulus()), std::domain_error);
}

TEST(ModRing64, AgreesWithReduceMod) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  for (std::uint64_t p : {3ULL, 101ULL, 499ULL}) {
    const ModRing64 ring(p, 5);
    const PrimePowerModulus m(p, 5);
    for (int i = 0; i < 100; ++i) {
      const long n = num(rng), d = den(rng);
      if (d % static_cast<long>(p) == 0) continue;
      const std::uint64_t fast = ring.mul(ring.reduce(n), ring.inv(ring.reduce(d)));
      EXPECT_EQ(BigInt(static_cast<unsigned long>(fast)), reduce_mod(Rational(n, d), m).value());
    }
  }
}
