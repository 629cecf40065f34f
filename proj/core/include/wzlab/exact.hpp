#pragma once

// Exact arithmetic substrate: big integers, canonical rationals, p-adic
// valuation and reduction of p-integral rationals into Z/p^r.

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace wzlab {

using BigInt = mpz_class;

/// v_p of an exact quantity. Zero has infinite valuation.
using Valuation = std::int64_t;
inline constexpr Valuation kInfiniteValuation = std::numeric_limits<Valuation>::max();

class NotPIntegral : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class ModulusMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class InvalidModulus : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Reduced fraction num/den with den >= 1. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  static Rational from_mpq(mpq_class q);

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational pow(long exponent) const;
  Rational inverse() const;

  std::string to_string() const { return q_.get_str(); }

  Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
  Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
  Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return from_mpq(-a.q_); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_;
};

/// Deterministic primality for n < 2^64 (Miller-Rabin with a fixed witness set).
bool is_prime(std::uint64_t n);

/// Odd prime p with exponent r >= 1; the context of "mod p^r".
class PrimePowerModulus {
public:
  PrimePowerModulus(std::uint64_t p, int r);

  std::uint64_t prime() const { return p_; }
  int exponent() const { return r_; }
  const BigInt& value() const { return modulus_; }

  /// Same prime, smaller exponent.
  PrimePowerModulus with_exponent(int r) const { return {p_, r}; }

  std::string to_string() const;  // "p^r", e.g. "7^3"

  friend bool operator==(const PrimePowerModulus& a, const PrimePowerModulus& b) {
    return a.p_ == b.p_ && a.r_ == b.r_;
  }

private:
  std::uint64_t p_;
  int r_;
  BigInt modulus_;
};

/// Element of Z/p^r, value in [0, p^r).
class Residue {
public:
  Residue(BigInt value, PrimePowerModulus modulus);

  const BigInt& value() const { return value_; }
  const PrimePowerModulus& modulus() const { return modulus_; }

  /// Image under Z/p^r -> Z/p^s for s <= r.
  Residue truncate(int s) const;

  std::string to_string() const { return value_.get_str(); }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

private:
  BigInt value_;
  PrimePowerModulus modulus_;
};

Valuation padic_valuation(const BigInt& x, std::uint64_t p);
Valuation padic_valuation(const Rational& x, std::uint64_t p);

bool is_p_integral(const Rational& x, std::uint64_t p);

/// (num * den^-1) mod p^r. Throws NotPIntegral when p divides the reduced denominator.
Residue reduce_mod(const Rational& x, const PrimePowerModulus& m);

/// x == y (mod p^r) in the valuation sense: v_p(x - y) >= r. Accepts non-p-integral inputs.
bool congruent(const Rational& x, const Rational& y, const PrimePowerModulus& m);

}  // namespace wzlab
