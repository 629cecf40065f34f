#pragma once

// Truncated Ramanujan-type sums and their supercongruences, computed either
// exactly over Q or term by term in Z/p^r.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wzlab/check_result.hpp"
#include "wzlab/exact.hpp"

namespace wzlab {

enum class TheoremId { T1_1, T1_2, T1_3, T1_4, GZ10, GZ12 };

enum class SummandShape { Quartic, Cubic, HalfPower4, HalfMinus8 };

struct TheoremSpec {
  TheoremId id;
  std::string name;    // "T1.1", ..., "GZ.12"
  std::string anchor;  // formula fragment of the stated congruence
  SummandShape shape;
  bool half_range;     // upper limit (p-1)/2 instead of p-1
  int exponent;
};

const std::vector<TheoremSpec>& theorem_specs();
const TheoremSpec& theorem_spec(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

long upper_limit(TheoremId id, std::uint64_t p);

/// k-th summand as an exact rational.
Rational summand(TheoremId id, long k);

Rational truncated_sum(TheoremId id, std::uint64_t p);

/// Right-hand side, built from the exact integer q_p(2).
Rational theorem_rhs(TheoremId id, std::uint64_t p);

/// Largest exponent r for which p^r fits the word-sized fast route.
int fast_route_max_exponent(std::uint64_t p);

/// truncated_sum mod p^r accumulated in Z/p^r without forming big rationals.
std::uint64_t fast_residue(TheoremId id, std::uint64_t p, int r);

enum class Route { Fast, Oracle };

struct VerifyOptions {
  Route route = Route::Fast;
  /// Also run the other route and fail on any residue mismatch.
  bool cross_check = false;
  /// Verify at a different exponent. Results are tagged as exploratory.
  std::optional<int> exponent_override;
};

CheckResult verify(TheoremId id, std::uint64_t p, const VerifyOptions& options = {});

enum class Section { S3, S4, S5, S6 };

/// LHS minus RHS of the exact identity each congruence proof starts from.
Rational section_reduction_residual(Section section, std::uint64_t p);

}  // namespace wzlab
