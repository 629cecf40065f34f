#pragma once

// Batch runs of theorems and manifest checks over a prime range.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wzlab/check_result.hpp"
#include "wzlab/suite.hpp"
#include "wzlab/theorems.hpp"

namespace wzlab {

class InvalidRange : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class SelectorError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Primes in [lo, hi] ascending (sieve). Throws InvalidRange unless 2 <= lo <= hi.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

enum class OutputFormat { JsonLines, Csv };

struct ScanConfig {
  std::uint64_t lo = 3;
  std::uint64_t hi = 499;
  /// Ids, globs ("lemma2.1.*"), "all", "theorems", "lemmas", "wz" or a tag.
  std::vector<std::string> selectors{"theorems"};
  unsigned jobs = 1;
  /// Empty: records are only returned, not written.
  std::optional<std::filesystem::path> output_path;
  OutputFormat format = OutputFormat::JsonLines;
  bool fail_fast = false;
  /// Cross-check the fast theorem route against the exact oracle.
  bool oracle = false;
  /// Record wall-clock times; off keeps output byte-identical across runs.
  bool timing = false;
};

/// Worker count from WZLAB_JOBS, falling back to the hardware concurrency.
unsigned default_jobs();

/// One selected unit of work: a theorem or a manifest check.
struct Selected {
  std::string id;
  std::optional<TheoremId> theorem;
  const CheckDescriptor* check = nullptr;
  std::uint64_t min_prime() const { return check ? check->min_prime : 3; }
};

/// Resolves selectors in manifest order without duplicates. Throws SelectorError.
std::vector<Selected> resolve_selectors(const std::vector<std::string>& selectors);

struct CheckSummary {
  std::string check_id;
  std::uint64_t runs = 0;
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> min_prime_verified;
  std::optional<std::uint64_t> max_prime_verified;
  std::chrono::microseconds elapsed{0};
};

struct ScanReport {
  std::vector<CheckSummary> checks;
  /// Failing records, sorted.
  std::vector<CheckResult> failures;
  std::vector<std::string> warnings;
  std::uint64_t records = 0;
  bool stopped_early = false;

  bool all_passed() const { return failures.empty(); }
  std::string to_text() const;
};

struct ScanOutput {
  ScanReport report;
  /// All records, sorted by (check_id, prime, k).
  std::vector<CheckResult> records;
};

/// Throws ConfigError, SelectorError or IoError before any work starts.
ScanOutput scan(const ScanConfig& config);

bool record_less(const CheckResult& a, const CheckResult& b);
std::string to_json_line(const CheckResult& r);
std::string csv_header();
std::string to_csv_line(const CheckResult& r);
void write_records(std::ostream& os, const std::vector<CheckResult>& records, OutputFormat format);

}  // namespace wzlab
