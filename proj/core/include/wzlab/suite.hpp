#pragma once

// Registry of named congruences and identities, each with exact evaluators
// for both sides, a modulus exponent and a prime domain.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wzlab/check_result.hpp"
#include "wzlab/prime_context.hpp"

namespace wzlab {

class UnknownCheck : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

using SideFn = std::function<Rational(const PrimeContext&, long)>;

/// Inclusive parameter range of a family check, as a function of p.
struct FamilyRange {
  std::string variable;  // usually "k"
  std::string label;     // e.g. "1..(p-3)/2"
  std::function<long(const PrimeContext&)> first;
  std::function<long(const PrimeContext&)> last;
};

struct CheckDescriptor {
  std::string id;
  /// Formula fragment identifying the statement.
  std::string anchor;
  std::vector<std::string> tags;
  std::uint64_t min_prime = 5;
  /// Empty for exact identities, compared by equality.
  std::optional<int> exponent;
  std::optional<FamilyRange> family;
  /// False when the statement only holds after a correction; see note.
  bool printed_form_holds = true;
  std::string note;
  SideFn lhs;
  SideFn rhs;

  bool has_tag(std::string_view tag) const;
};

const std::vector<CheckDescriptor>& manifest();

/// Throws UnknownCheck.
const CheckDescriptor& find_check(std::string_view id);

struct FamilyRun {
  /// k is empty; lhs/rhs hold "pass=a/b" style counts for families.
  CheckResult summary;
  /// One record per failing member.
  std::vector<CheckResult> failures;
};

/// Runs one member (k given) or the whole family. Throws DomainError below min_prime.
FamilyRun run_check_detailed(const CheckDescriptor& check, const PrimeContext& ctx);

/// Scalar checks ignore k. A family run without k reports the conjunction,
/// with k and both sides taken from the first failing member.
CheckResult run_check(const CheckDescriptor& check, const PrimeContext& ctx,
                      std::optional<long> k = std::nullopt);
CheckResult run_check(std::string_view id, std::uint64_t p, std::optional<long> k = std::nullopt);

/// Tab-separated table: id, modulus, min_prime, family, tags, status, anchor.
std::string manifest_table();

/// One row per displayed statement of the source derivation.
struct CoverageRow {
  std::string display;  // short description of the display
  std::string anchor;   // formula fragment
  /// "checked", "corrected", "out-of-scope" or "UNMAPPED".
  std::string status;
  std::vector<std::string> check_ids;
  std::string reason;
};

std::vector<CoverageRow> coverage_table();
std::string coverage_text();

}  // namespace wzlab
