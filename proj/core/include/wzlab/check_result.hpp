#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "wzlab/exact.hpp"

namespace wzlab {

/// Outcome of one check at one prime (and one k for family members).
struct CheckResult {
  std::string check_id;
  std::uint64_t prime = 0;
  std::optional<long> k;
  /// Modulus exponent; empty for exact identities.
  std::optional<int> exponent;
  /// Decimal residue, or "val=v" when a side is not p-integral or the check is exact.
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::chrono::microseconds elapsed{0};

  /// "p^r", or "exact" for identities.
  std::string modulus() const;
};

/// Valuation evidence string, "val=inf" for zero.
std::string valuation_evidence(const Rational& x, std::uint64_t p);

/// Fills lhs, rhs and pass for a congruence mod p^r (or equality when r is empty).
void compare_sides(CheckResult& out, const Rational& lhs, const Rational& rhs);

}  // namespace wzlab
