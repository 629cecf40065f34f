#pragma once

// Factorials, binomials, rising factorials, harmonic numbers and Fermat
// quotients, plus a per-prime memo of the same.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wzlab/exact.hpp"

namespace wzlab {

class NegativeArgument : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class NotCoprime : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Selects H_n(r), the alternating H_n(-r) or the double sum H(1,1;n).
struct HarmonicKind {
  enum class Shape { Plain, Signed, Double };
  Shape shape = Shape::Plain;
  int order = 1;

  static HarmonicKind plain(int r) { return {Shape::Plain, r}; }
  static HarmonicKind alternating(int r) { return {Shape::Signed, r}; }
  static HarmonicKind double_sum() { return {Shape::Double, 1}; }
};

BigInt factorial(long n);

/// C(n,k) with the usual extension to negative n.
BigInt binomial(long n, long k);

/// (a)_n = a(a+1)...(a+n-1).
Rational pochhammer(const Rational& a, long n);

Rational harmonic(long n, HarmonicKind kind);

/// (a^(p-1) - 1)/p.
BigInt fermat_quotient(long a, std::uint64_t p);

/// Factorials and harmonic prefix sums up to a fixed bound.
///
/// Built once and then read-only, so one instance can be shared by readers
/// on several threads.
class CombinatoricsCache {
public:
  /// Factorials up to factorial_bound, harmonic prefixes up to harmonic_bound.
  CombinatoricsCache(long factorial_bound, long harmonic_bound);

  long factorial_bound() const { return static_cast<long>(fact_.size()) - 1; }
  long harmonic_bound() const { return static_cast<long>(h1_.size()) - 1; }

  const BigInt& fact(long n) const;
  BigInt binom(long n, long k) const;

  const Rational& H(long n) const { return at(h1_, n); }
  const Rational& H2(long n) const { return at(h2_, n); }
  /// sum (-1)^j / j
  const Rational& Hs(long n) const { return at(hs1_, n); }
  /// sum (-1)^j / j^2
  const Rational& Hs2(long n) const { return at(hs2_, n); }
  /// sum_{i<j<=n} 1/(ij)
  const Rational& H11(long n) const { return at(h11_, n); }
  /// sum_{j<=n} 1/(2j-1)
  const Rational& Odd(long n) const { return at(odd_, n); }

private:
  const Rational& at(const std::vector<Rational>& v, long n) const;

  std::vector<BigInt> fact_;
  std::vector<Rational> h1_, h2_, hs1_, hs2_, h11_, odd_;
};

}  // namespace wzlab
