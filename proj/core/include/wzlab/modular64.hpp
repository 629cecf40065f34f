#pragma once

// Word-sized arithmetic in Z/p^r for the fast summation route. Products are
// taken in 128 bits, so any p^r < 2^63 is supported.

#include <cstdint>

namespace wzlab {

/// Inverse of a modulo m via extended Euclid; a must be a unit.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

class ModRing64 {
public:
  ModRing64(std::uint64_t p, int r);

  std::uint64_t prime() const { return p_; }
  int exponent() const { return r_; }
  std::uint64_t modulus() const { return m_; }

  std::uint64_t reduce(std::int64_t x) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return inverse_mod(a, m_); }

private:
  std::uint64_t p_;
  int r_;
  std::uint64_t m_;
};

/// A nonzero p-adic number known as p^e * u with u a unit mod p^r.
///
/// Multiplying and dividing by integers keeps the unit part exact to r
/// digits, so a product of binomial ratios can be carried through factors
/// divisible by p without losing precision.
class PAdicAccumulator {
public:
  explicit PAdicAccumulator(const ModRing64& ring) : ring_(&ring) {}

  void mul(std::int64_t x);
  void div(std::int64_t x);
  /// Multiply by a residue that is already known to be a unit.
  void mul_unit(std::uint64_t u);

  bool is_zero() const { return zero_; }
  std::int64_t valuation() const { return e_; }

  /// Value mod p^r. Throws NotPIntegral when the valuation is negative.
  std::uint64_t residue() const;

private:
  const ModRing64* ring_;
  std::int64_t e_ = 0;
  std::uint64_t u_ = 1;
  bool zero_ = false;
};

}  // namespace wzlab
