#pragma once

// Everything a check needs at one prime: p, (p-1)/2, q_p(2), and memoized
// factorials and harmonic prefixes. Built once per prime, then read-only.

#include <cstdint>
#include <functional>

#include "wzlab/combinatorics.hpp"
#include "wzlab/exact.hpp"

namespace wzlab {

class PrimeContext {
public:
  explicit PrimeContext(std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  long p() const { return static_cast<long>(p_); }
  long h() const { return h_; }
  /// q_p(2) as a rational
  const Rational& q() const { return q_; }
  const Rational& P() const { return P_; }

  const CombinatoricsCache& cache() const { return cache_; }
  BigInt C(long n, long k) const { return cache_.binom(n, k); }
  Rational Cq(long n, long k) const { return Rational(cache_.binom(n, k)); }
  const Rational& H(long n) const { return cache_.H(n); }
  const Rational& H2(long n) const { return cache_.H2(n); }
  const Rational& Hs(long n) const { return cache_.Hs(n); }
  const Rational& Hs2(long n) const { return cache_.Hs2(n); }
  const Rational& H11(long n) const { return cache_.H11(n); }
  const Rational& Odd(long n) const { return cache_.Odd(n); }

private:
  std::uint64_t p_;
  long h_;
  Rational q_;
  Rational P_;
  CombinatoricsCache cache_;
};

/// (-1)^e for any integer e.
inline int sign_pow(long e) { return (e & 1) ? -1 : 1; }

/// 2^e, e of either sign.
Rational pow2(long e);
Rational pow4(long e);

/// sum_{k=a}^{b} f(k); zero when a > b.
Rational sum_range(long a, long b, const std::function<Rational(long)>& f);

// Summands and auxiliary terms shared by the theorem verifier and the check
// manifest.
namespace terms {

/// (-1)^k (172k^2+75k+9)/2^{12k} C(2k,k)^3 C(3k,k) C(4k,2k)
Rational quartic(const PrimeContext& c, long k);
/// (11k+3)/64^k C(2k,k)^2 C(3k,k)
Rational cubic(const PrimeContext& c, long k);
/// (22k^2-3k-3) C(2k,k)^2 C(3k,k)
Rational cubic_weight(const PrimeContext& c, long k);

/// C(m, m/2) for even m, zero for m < 0
BigInt central(const PrimeContext& c, long m);

/// The inner sum over 1 <= k <= (p-3)/2 in the half-range quartic reduction.
Rational half_inner(const PrimeContext& c);

/// Summand of the full-range quartic split, 0 <= k <= p-1.
Rational g_star(const PrimeContext& c, long k);
/// sum_{k<p} (-1)^k (2p-k) C(2p+2k,p+k) C(2p-2k-2,p-k-1) C(4p,2p+k)
Rational full_inner(const PrimeContext& c);

/// Summand of the cubic full-range reduction, 0 <= k <= p-1.
Rational cubic_full_summand(const PrimeContext& c, long k);
/// Reindexed form of the same summand, 1 <= k <= p-1.
Rational f_star(const PrimeContext& c, long k);

/// Summand of the cubic half-range reduction, 0 <= k <= (p-1)/2.
Rational cubic_half_summand(const PrimeContext& c, long k);
/// Reindexed form of the same summand, 1 <= k <= (p-1)/2.
Rational s_half(const PrimeContext& c, long k);

}  // namespace terms

}  // namespace wzlab
