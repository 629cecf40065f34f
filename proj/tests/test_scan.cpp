#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "wzlab/scan.hpp"

using namespace wzlab;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wzlab_test_" + name);
}

}  // namespace

TEST(PrimesIn, Examples) {
  EXPECT_EQ(primes_in(3, 20), (std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19}));
  EXPECT_TRUE(primes_in(14, 16).empty());
  EXPECT_EQ(primes_in(2, 2), (std::vector<std::uint64_t>{2}));
  EXPECT_THROW(primes_in(10, 5), InvalidRange);
  EXPECT_THROW(primes_in(1, 5), InvalidRange);
  EXPECT_EQ(primes_in(2, 1000).size(), 168u);
}

TEST(Selectors, Resolution) {
  EXPECT_EQ(resolve_selectors({"theorems"}).size(), 6u);
  EXPECT_EQ(resolve_selectors({"lemma2.1.*"}).size(), 3u);
  EXPECT_EQ(resolve_selectors({"T1.1", "T1.1", "sec3.morley"}).size(), 2u);
  const auto wz = resolve_selectors({"wz"});
  ASSERT_FALSE(wz.empty());
  for (const auto& s : wz) EXPECT_TRUE(s.check && s.check->has_tag("wz"));
  for (const auto& s : resolve_selectors({"lemmas"})) EXPECT_TRUE(s.check && s.check->has_tag("lemmas"));
  EXPECT_EQ(resolve_selectors({"all"}).size(), 6u + manifest().size());
  EXPECT_THROW(resolve_selectors({"bogus"}), SelectorError);
  EXPECT_THROW(resolve_selectors({}), SelectorError);
}

TEST(Scan, LemmaGlobAtFive) {
  ScanConfig cfg;
  cfg.lo = cfg.hi = 5;
  cfg.selectors = {"lemma2.1.*"};
  const ScanOutput out = scan(cfg);
  EXPECT_EQ(out.records.size(), 3u);
  EXPECT_TRUE(out.report.all_passed());
  for (const auto& r : out.records) EXPECT_TRUE(r.pass);
}

TEST(Scan, TheoremsUpTo199) {
  ScanConfig cfg;
  cfg.lo = 3;
  cfg.hi = 199;
  cfg.selectors = {"T1.1", "T1.2", "T1.3", "T1.4"};
  cfg.jobs = 4;
  const ScanOutput out = scan(cfg);
  ASSERT_EQ(out.report.checks.size(), 4u);
  EXPECT_TRUE(out.report.all_passed());
  EXPECT_EQ(out.records.size(), 4u * primes_in(3, 199).size());
  for (const auto& c : out.report.checks) {
    EXPECT_EQ(c.passes + c.failures, c.runs);
    EXPECT_EQ(c.min_prime_verified, 3u);
    EXPECT_EQ(c.max_prime_verified, 199u);
  }
}

TEST(Scan, EmptyAdmissibleSet) {
  ScanConfig cfg;
  cfg.lo = cfg.hi = 3;
  cfg.selectors = {"lemma2.1.a"};
  const ScanOutput out = scan(cfg);
  EXPECT_TRUE(out.records.empty());
  EXPECT_TRUE(out.report.all_passed());
  ASSERT_EQ(out.report.checks.size(), 1u);
  EXPECT_EQ(out.report.checks[0].runs, 0u);
  EXPECT_EQ(out.report.warnings.size(), 1u);
}

TEST(Scan, RecordCountIsAdmissiblePrimesPerCheck) {
  ScanConfig cfg;
  cfg.lo = 3;
  cfg.hi = 41;
  cfg.selectors = {"lemmas", "sec5.granville", "theorems"};
  const ScanOutput out = scan(cfg);
  ASSERT_TRUE(out.report.all_passed());
  std::size_t expect = 0;
  for (const auto& s : resolve_selectors(cfg.selectors)) {
    for (auto p : primes_in(3, 41)) expect += p >= s.min_prime();
  }
  EXPECT_EQ(out.records.size(), expect);
  EXPECT_TRUE(std::is_sorted(out.records.begin(), out.records.end(), record_less));
}

TEST(Scan, DeterministicAcrossJobs) {
  ScanConfig cfg;
  cfg.lo = 3;
  cfg.hi = 97;
  cfg.selectors = {"all"};
  cfg.jobs = 1;
  cfg.output_path = tmp("det1.jsonl");
  const ScanOutput a = scan(cfg);
  cfg.jobs = 8;
  cfg.output_path = tmp("det8.jsonl");
  const ScanOutput b = scan(cfg);
  EXPECT_EQ(slurp(tmp("det1.jsonl")), slurp(tmp("det8.jsonl")));
  EXPECT_EQ(a.report.to_text(), b.report.to_text());
  EXPECT_FALSE(std::filesystem::exists(tmp("det8.jsonl.partial")));
}

TEST(Scan, ConfigErrors) {
  ScanConfig cfg;
  cfg.lo = 2;
  EXPECT_THROW(scan(cfg), ConfigError);
  cfg.lo = 11;
  cfg.hi = 7;
  EXPECT_THROW(scan(cfg), ConfigError);
  cfg.lo = 3;
  cfg.hi = 7;
  cfg.jobs = 0;
  EXPECT_THROW(scan(cfg), ConfigError);
  cfg.jobs = 1;
  cfg.selectors = {"nothing-matches"};
  EXPECT_THROW(scan(cfg), SelectorError);
  cfg.selectors = {"theorems"};
  cfg.output_path = "/nonexistent-dir/out.jsonl";
  EXPECT_THROW(scan(cfg), IoError);
}

TEST(Records, JsonFieldOrder) {
  CheckResult r;
  r.check_id = "T1.1";
  r.prime = 7;
  r.exponent = 5;
  r.lhs = "441";
  r.rhs = "441";
  r.pass = true;
  EXPECT_EQ(to_json_line(r),
            R"({"check_id":"T1.1","prime":7,"k":null,"modulus":"7^5","lhs":"441","rhs":"441","pass":true,"elapsed_us":0})");
  r.k = 3;
  r.exponent.reset();
  EXPECT_EQ(to_json_line(r),
            R"({"check_id":"T1.1","prime":7,"k":3,"modulus":"exact","lhs":"441","rhs":"441","pass":true,"elapsed_us":0})");
}

TEST(Records, Csv) {
  CheckResult r;
  r.check_id = "T1.2";
  r.prime = 5;
  r.exponent = 5;
  r.lhs = "route-mismatch:fast=1,oracle=2";
  r.rhs = "1";
  EXPECT_EQ(csv_header(), "check_id,prime,k,modulus,lhs,rhs,pass,elapsed_us");
  EXPECT_EQ(to_csv_line(r), "T1.2,5,,5^5,\"route-mismatch:fast=1,oracle=2\",1,false,0");
  std::ostringstream os;
  write_records(os, {r, r}, OutputFormat::Csv);
  const std::string text = os.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

TEST(Records, SortOrder) {
  CheckResult a, b, c;
  a.check_id = b.check_id = c.check_id = "x";
  a.prime = b.prime = c.prime = 5;
  b.k = 0;
  c.k = 2;
  EXPECT_TRUE(record_less(a, b));
  EXPECT_TRUE(record_less(b, c));
  c.prime = 3;
  EXPECT_TRUE(record_less(c, a));
}

TEST(DefaultJobs, Environment) {
  setenv("WZLAB_JOBS", "3", 1);
  EXPECT_EQ(default_jobs(), 3u);
  setenv("WZLAB_JOBS", "zero", 1);
  EXPECT_GE(default_jobs(), 1u);
  unsetenv("WZLAB_JOBS");
}

TEST(Scan, FailFastOnPassingRunChangesNothing) {
  ScanConfig cfg;
  cfg.lo = 3;
  cfg.hi = 61;
  cfg.selectors = {"theorems", "lemmas"};
  const ScanOutput a = scan(cfg);
  cfg.fail_fast = true;
  cfg.jobs = 3;
  const ScanOutput b = scan(cfg);
  EXPECT_FALSE(b.report.stopped_early);
  EXPECT_EQ(a.report.to_text(), b.report.to_text());
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) EXPECT_EQ(to_json_line(a.records[i]), to_json_line(b.records[i]));
}

TEST(Scan, OracleModeCrossChecks) {
  ScanConfig cfg;
  cfg.lo = 3;
  cfg.hi = 101;
  cfg.oracle = true;
  const ScanOutput out = scan(cfg);
  EXPECT_TRUE(out.report.all_passed());
  EXPECT_EQ(out.records.size(), 6u * primes_in(3, 101).size());
}
