#include "wzlab/combinatorics.hpp"

#include <string>

namespace wzlab {

BigInt factorial(long n) {
  if (n < 0) throw NegativeArgument("factorial of " + std::to_string(n));
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  BigInt r = binomial(k - n - 1, k);
  return (k % 2) ? BigInt(-r) : r;
}

Rational pochhammer(const Rational& a, long n) {
  if (n < 0) throw NegativeArgument("pochhammer length " + std::to_string(n));
  Rational r(1);
  Rational t = a;
  for (long i = 0; i < n; ++i) {
    r *= t;
    t += Rational(1);
  }
  return r;
}

namespace {

Rational inverse_power(long k, int r) {
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(r));
  return Rational(BigInt(1), d);
}

}  // namespace

Rational harmonic(long n, HarmonicKind kind) {
  if (n < 0) throw NegativeArgument("harmonic index " + std::to_string(n));
  Rational s;
  switch (kind.shape) {
    case HarmonicKind::Shape::Plain:
      for (long k = 1; k <= n; ++k) s += inverse_power(k, kind.order);
      break;
    case HarmonicKind::Shape::Signed:
      for (long k = 1; k <= n; ++k) {
        if (k % 2) s -= inverse_power(k, kind.order);
        else s += inverse_power(k, kind.order);
      }
      break;
    case HarmonicKind::Shape::Double: {
      Rational prefix;  // H_{j-1}
      for (long j = 1; j <= n; ++j) {
        s += prefix * Rational(1, j);
        prefix += Rational(1, j);
      }
      break;
    }
  }
  return s;
}

BigInt fermat_quotient(long a, std::uint64_t p) {
  if (a % static_cast<long>(p) == 0) {
    throw NotCoprime(std::to_string(p) + " divides " + std::to_string(a));
  }
  BigInt base(a), r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(p - 1));
  r -= 1;
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(p));
  return r;
}

CombinatoricsCache::CombinatoricsCache(long factorial_bound, long harmonic_bound) {
  fact_.resize(static_cast<std::size_t>(factorial_bound) + 1);
  fact_[0] = 1;
  for (long n = 1; n <= factorial_bound; ++n) fact_[n] = fact_[n - 1] * static_cast<unsigned long>(n);

  const auto m = static_cast<std::size_t>(harmonic_bound) + 1;
  h1_.resize(m);
  h2_.resize(m);
  hs1_.resize(m);
  hs2_.resize(m);
  h11_.resize(m);
  odd_.resize(m);
  for (long j = 1; j <= harmonic_bound; ++j) {
    const Rational inv(1, j);
    const Rational inv2 = inv * inv;
    h11_[j] = h11_[j - 1] + h1_[j - 1] * inv;
    h1_[j] = h1_[j - 1] + inv;
    h2_[j] = h2_[j - 1] + inv2;
    hs1_[j] = (j % 2) ? hs1_[j - 1] - inv : hs1_[j - 1] + inv;
    hs2_[j] = (j % 2) ? hs2_[j - 1] - inv2 : hs2_[j - 1] + inv2;
    odd_[j] = odd_[j - 1] + Rational(1, 2 * j - 1);
  }
}

const BigInt& CombinatoricsCache::fact(long n) const {
  if (n < 0) throw NegativeArgument("factorial of " + std::to_string(n));
  if (n > factorial_bound()) throw std::out_of_range("factorial cache bound exceeded");
  return fact_[static_cast<std::size_t>(n)];
}

BigInt CombinatoricsCache::binom(long n, long k) const {
  if (n < 0) return binomial(n, k);
  if (k < 0 || k > n) return 0;
  BigInt r = fact(n);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), fact(k).get_mpz_t());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), fact(n - k).get_mpz_t());
  return r;
}

const Rational& CombinatoricsCache::at(const std::vector<Rational>& v, long n) const {
  if (n < 0) throw NegativeArgument("harmonic index " + std::to_string(n));
  if (n >= static_cast<long>(v.size())) throw std::out_of_range("harmonic cache bound exceeded");
  return v[static_cast<std::size_t>(n)];
}

}  // namespace wzlab
