#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wzlab/scan.hpp"
#include "wzlab/suite.hpp"
#include "wzlab/theorems.hpp"
#include "wzlab/wz.hpp"

namespace {

constexpr int kUsage = 2;

std::pair<std::uint64_t, std::uint64_t> parse_primes(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(s);
      return {v, v};
    }
    return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw wzlab::ConfigError("--primes expects LO..HI, got " + s);
  }
}

int run_scan(const std::string& primes, const std::vector<std::string>& checks, unsigned jobs,
             const std::string& out, const std::string& format, bool fail_fast, bool oracle, bool timing) {
  wzlab::ScanConfig cfg;
  std::tie(cfg.lo, cfg.hi) = parse_primes(primes);
  cfg.selectors = checks;
  cfg.jobs = jobs;
  if (!out.empty()) cfg.output_path = out;
  cfg.format = format == "csv" ? wzlab::OutputFormat::Csv : wzlab::OutputFormat::JsonLines;
  cfg.fail_fast = fail_fast;
  cfg.oracle = oracle;
  cfg.timing = timing;
  const wzlab::ScanOutput result = wzlab::scan(cfg);
  if (!cfg.output_path) wzlab::write_records(std::cout, result.records, cfg.format);
  std::cerr << result.report.to_text();
  return result.report.all_passed() ? 0 : 1;
}

int run_wz_verify(const std::string& pair_name, long nmax) {
  const auto pair = pair_name == "A" ? wzlab::WzPairId::PairA : wzlab::WzPairId::PairB;
  long points = 0;
  long skipped = 0;
  long bad = 0;
  for (long n = 0; n <= nmax; ++n) {
    for (long k = 0; k <= nmax; ++k) {
      if (!wzlab::wz_point_in_domain(pair, n, k)) {
        ++skipped;
        continue;
      }
      ++points;
      const wzlab::Rational r = wzlab::wz_residual(pair, n, k);
      if (!r.is_zero()) {
        ++bad;
        std::cout << "residual n=" << n << " k=" << k << ": " << r.to_string() << '\n';
      }
    }
  }
  std::cout << "pair " << pair_name << ": " << points << " points, " << bad << " nonzero, " << skipped
            << " outside domain\n";
  return bad == 0 ? 0 : 1;
}

int run_check(const std::string& id, std::uint64_t p, std::optional<long> k) {
  wzlab::CheckResult r;
  if (const auto t = wzlab::parse_theorem_id(id)) {
    if (k) throw wzlab::DomainError(id + " takes no --k");
    if (p < 3 || !wzlab::is_prime(p)) throw wzlab::DomainError(id + " needs an odd prime");
    r = wzlab::verify(*t, p);
  } else {
    r = wzlab::run_check(id, p, k);
  }
  std::cout << wzlab::to_json_line(r) << '\n';
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"WZ-pair supercongruence laboratory"};
  app.require_subcommand(1);

  auto* scan = app.add_subcommand("scan", "run checks over a prime range");
  std::string primes = "3..499";
  std::vector<std::string> checks{"theorems"};
  unsigned jobs = wzlab::default_jobs();
  std::string out;
  std::string format = "json-lines";
  bool fail_fast = false;
  bool oracle = false;
  bool timing = false;
  scan->add_option("--primes", primes, "LO..HI")->capture_default_str();
  scan->add_option("--checks", checks, "ids, globs, all, theorems, lemmas, wz or a tag")->delimiter(',');
  scan->add_option("--jobs", jobs, "worker threads (default WZLAB_JOBS)")->check(CLI::PositiveNumber);
  scan->add_option("--out", out, "output file (default stdout)");
  scan->add_option("--format", format)->check(CLI::IsMember({"json-lines", "csv"}))->capture_default_str();
  scan->add_flag("--fail-fast", fail_fast);
  scan->add_flag("--oracle", oracle, "cross-check theorems against the exact route");
  scan->add_flag("--timing", timing, "record elapsed_us");

  auto* wz = app.add_subcommand("wz", "WZ pair tools");
  wz->require_subcommand(1);
  auto* wz_verify = wz->add_subcommand("verify", "check the WZ equation on a grid");
  std::string pair = "A";
  long nmax = 40;
  wz_verify->add_option("--pair", pair)->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  wz_verify->add_option("--nmax", nmax)->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* check = app.add_subcommand("check", "run one check at one prime");
  std::string id;
  std::uint64_t prime = 0;
  std::optional<long> k;
  check->add_option("--id", id)->required();
  check->add_option("--prime", prime)->required();
  check->add_option("--k", k, "family member");

  auto* man = app.add_subcommand("manifest", "print the check table");
  auto* cov = app.add_subcommand("coverage", "print the display coverage table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (scan->parsed()) return run_scan(primes, checks, jobs, out, format, fail_fast, oracle, timing);
    if (wz_verify->parsed()) return run_wz_verify(pair, nmax);
    if (check->parsed()) return run_check(id, prime, k);
    if (man->parsed()) {
      std::cout << wzlab::manifest_table();
      return 0;
    }
    if (cov->parsed()) {
      std::cout << wzlab::coverage_text();
      bool unmapped = false;
      for (const auto& row : wzlab::coverage_table()) unmapped = unmapped || row.status == "UNMAPPED";
      return unmapped ? 1 : 0;
    }
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
