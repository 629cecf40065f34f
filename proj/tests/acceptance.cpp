// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "wzlab/scan.hpp"
#include "wzlab/suite.hpp"
#include "wzlab/theorems.hpp"
#include "wzlab/wz.hpp"

using namespace wzlab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_failure(const ScanReport& r) {
  if (r.failures.empty()) return "";
  const CheckResult& f = r.failures.front();
  return "; first failure " + f.check_id + " p=" + std::to_string(f.prime) +
         (f.k ? " k=" + std::to_string(*f.k) : std::string()) + " lhs=" + f.lhs + " rhs=" + f.rhs;
}

ScanConfig criterion1_config(unsigned jobs) {
  ScanConfig cfg;
  cfg.lo = 3;
  cfg.hi = 499;
  cfg.selectors = {"T1.1", "T1.2", "T1.3", "T1.4"};
  cfg.jobs = jobs;
  return cfg;
}

bool exponents_match(const std::vector<CheckResult>& records) {
  for (const auto& r : records) {
    const auto id = parse_theorem_id(r.check_id);
    if (!id || r.exponent != theorem_spec(*id).exponent) return false;
  }
  return true;
}

Outcome theorems_full_moduli() {
  const ScanOutput out = scan(criterion1_config(1));
  const std::size_t expect = 4 * primes_in(3, 499).size();
  const bool ok = out.report.all_passed() && out.records.size() == expect && exponents_match(out.records);
  return {ok, std::to_string(out.records.size()) + " records (T1.1/T1.2 mod p^5, T1.3/T1.4 mod p^3, 3<=p<=499)" +
                  first_failure(out.report)};
}

Outcome proven_congruences() {
  long runs = 0, fails = 0;
  for (std::uint64_t p : primes_in(3, 499)) {
    for (TheoremId id : {TheoremId::GZ10, TheoremId::GZ12}) {
      const CheckResult r = verify(id, p);
      ++runs;
      fails += !(r.pass && r.exponent == 3);
    }
  }
  return {fails == 0, std::to_string(runs) + " runs mod p^3, " + std::to_string(fails) + " failures"};
}

Outcome wz_certificates() {
  long bad = 0, points = 0;
  for (long n = 0; n <= 40; ++n) {
    for (long k = 0; k <= 40; ++k) {
      ++points;
      bad += !wz_residual(WzPairId::PairA, n, k).is_zero();
      if (wz_point_in_domain(WzPairId::PairB, n, k)) {
        ++points;
        bad += !wz_residual(WzPairId::PairB, n, k).is_zero();
      }
    }
  }
  long tel = 0, tel_bad = 0;
  for (long m = 1; m <= 30; ++m) {
    for (long N = 1; N <= 30; ++N) {
      ++tel;
      tel_bad += !check_telescope(WzPairId::PairA, m, N).is_zero();
      if (m >= 2) {
        ++tel;
        tel_bad += !check_telescope(WzPairId::PairB, m, N).is_zero();
      }
    }
  }
  return {bad == 0 && tel_bad == 0, std::to_string(points) + " residual points (" + std::to_string(bad) +
                                        " nonzero), " + std::to_string(tel) + " telescopes (" +
                                        std::to_string(tel_bad) + " nonzero)"};
}

Outcome exact_identities() {
  long bad = 0, count = 0;
  for (long n = 0; n <= 100; ++n) {
    bad += !summand_identity_residual(SummandFamily::Quartic, n).is_zero();
    bad += !summand_identity_residual(SummandFamily::Cubic, n).is_zero();
    bad += !g_closed_form_residual(n).is_zero();
    count += 3;
    if (n >= 2) {
      bad += !gb_difference_residual(n).is_zero();
      ++count;
    }
  }
  for (std::uint64_t p : primes_in(5, 101)) {
    for (Section s : {Section::S3, Section::S4, Section::S5, Section::S6}) {
      bad += !section_reduction_residual(s, p).is_zero();
      ++count;
    }
  }
  return {bad == 0, std::to_string(count) + " residuals, " + std::to_string(bad) + " nonzero"};
}

Outcome lemma_suite() {
  ScanConfig cfg;
  cfg.lo = 3;
  cfg.hi = 499;
  cfg.selectors = {"all"};
  cfg.jobs = default_jobs();
  const ScanOutput out = scan(cfg);
  long unmapped = 0;
  for (const auto& row : coverage_table()) unmapped += row.status == "UNMAPPED";
  return {out.report.all_passed() && unmapped == 0,
          std::to_string(manifest().size()) + " checks, " + std::to_string(out.records.size()) + " records, " +
              std::to_string(out.report.failures.size()) + " failures, " + std::to_string(unmapped) +
              " unmapped displays" + first_failure(out.report)};
}

Outcome oracle_equivalence() {
  long runs = 0, mismatches = 0;
  for (std::uint64_t p : primes_in(3, 199)) {
    for (const auto& spec : theorem_specs()) {
      const PrimePowerModulus m(p, spec.exponent);
      const BigInt oracle = reduce_mod(truncated_sum(spec.id, p), m).value();
      const BigInt fast(static_cast<unsigned long>(fast_residue(spec.id, p, spec.exponent)));
      ++runs;
      mismatches += oracle != fast;
    }
  }
  return {mismatches == 0, std::to_string(runs) + " comparisons, " + std::to_string(mismatches) + " mismatches"};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  ScanConfig one = criterion1_config(1);
  one.output_path = dir / "wzlab_acceptance_jobs1.jsonl";
  ScanConfig eight = criterion1_config(8);
  eight.output_path = dir / "wzlab_acceptance_jobs8.jsonl";
  const ScanOutput a = scan(one);
  const ScanOutput b = scan(eight);
  const std::string fa = slurp(*one.output_path);
  const std::string fb = slurp(*eight.output_path);
  const bool ok = !fa.empty() && fa == fb && a.report.to_text() == b.report.to_text();
  return {ok, std::to_string(fa.size()) + " bytes at jobs 1, " + std::to_string(fb.size()) + " bytes at jobs 8"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"theorems at full moduli", theorems_full_moduli},
      {"GZ.10 and GZ.12 mod p^3", proven_congruences},
      {"WZ equations and telescoping", wz_certificates},
      {"exact identities", exact_identities},
      {"manifest and coverage", lemma_suite},
      {"fast route equals oracle", oracle_equivalence},
      {"scan determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %s: %s (%s; %.1fs)\n", index, o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
