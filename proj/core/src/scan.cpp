#include "wzlab/scan.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace wzlab {

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2 || lo > hi) throw InvalidRange("prime range needs 2 <= lo <= hi");
  std::vector<bool> composite(hi + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("WZLAB_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Selected> resolve_selectors(const std::vector<std::string>& selectors) {
  if (selectors.empty()) throw SelectorError("no checks selected");
  std::vector<Selected> all;
  for (const auto& t : theorem_specs()) all.push_back({t.name, t.id, nullptr});
  for (const auto& d : manifest()) all.push_back({d.id, std::nullopt, &d});

  std::vector<bool> picked(all.size(), false);
  for (const auto& sel : selectors) {
    bool hit = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Selected& s = all[i];
      bool match = false;
      if (sel == "all") {
        match = true;
      } else if (sel == "theorems") {
        match = s.theorem.has_value();
      } else if (s.check && s.check->has_tag(sel)) {
        match = true;
      } else {
        match = s.id == sel || fnmatch(sel.c_str(), s.id.c_str(), 0) == 0;
      }
      if (match) {
        picked[i] = true;
        hit = true;
      }
    }
    if (!hit) throw SelectorError("selector matches nothing: " + sel);
  }
  std::vector<Selected> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (picked[i]) out.push_back(all[i]);
  }
  return out;
}

bool record_less(const CheckResult& a, const CheckResult& b) {
  if (a.check_id != b.check_id) return a.check_id < b.check_id;
  if (a.prime != b.prime) return a.prime < b.prime;
  return a.k < b.k;  // nullopt first
}

std::string to_json_line(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["prime"] = r.prime;
  j["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
  j["modulus"] = r.modulus();
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["pass"] = r.pass;
  j["elapsed_us"] = r.elapsed.count();
  return j.dump();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_header() { return "check_id,prime,k,modulus,lhs,rhs,pass,elapsed_us"; }

std::string to_csv_line(const CheckResult& r) {
  std::ostringstream os;
  os << csv_field(r.check_id) << ',' << r.prime << ',' << (r.k ? std::to_string(*r.k) : "") << ','
     << r.modulus() << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ','
     << (r.pass ? "true" : "false") << ',' << r.elapsed.count();
  return os.str();
}

void write_records(std::ostream& os, const std::vector<CheckResult>& records, OutputFormat format) {
  if (format == OutputFormat::Csv) os << csv_header() << '\n';
  for (const auto& r : records) {
    os << (format == OutputFormat::Csv ? to_csv_line(r) : to_json_line(r)) << '\n';
  }
}

std::string ScanReport::to_text() const {
  std::ostringstream os;
  os << "check\truns\tpasses\tfailures\tmin_p\tmax_p\telapsed_us\n";
  for (const auto& c : checks) {
    os << c.check_id << '\t' << c.runs << '\t' << c.passes << '\t' << c.failures << '\t'
       << (c.min_prime_verified ? std::to_string(*c.min_prime_verified) : "-") << '\t'
       << (c.max_prime_verified ? std::to_string(*c.max_prime_verified) : "-") << '\t' << c.elapsed.count()
       << '\n';
  }
  os << "records: " << records << '\n';
  if (stopped_early) os << "stopped early after a failure\n";
  for (const auto& w : warnings) os << "warning: " << w << '\n';
  for (const auto& f : failures) {
    os << "FAIL " << f.check_id << " p=" << f.prime;
    if (f.k) os << " k=" << *f.k;
    os << " mod " << f.modulus() << " lhs=" << f.lhs << " rhs=" << f.rhs << '\n';
  }
  return os.str();
}

namespace {

struct Outcome {
  std::size_t check_index;
  CheckResult summary;
  std::vector<CheckResult> extra;
};

std::vector<Outcome> run_prime(const std::vector<Selected>& selected, std::uint64_t p, const ScanConfig& config) {
  std::vector<Outcome> out;
  std::optional<PrimeContext> ctx;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const Selected& s = selected[i];
    if (p < s.min_prime()) continue;
    Outcome o{i, {}, {}};
    if (s.theorem) {
      VerifyOptions opt;
      opt.cross_check = config.oracle;
      o.summary = verify(*s.theorem, p, opt);
    } else {
      if (!ctx) ctx.emplace(p);
      FamilyRun run = run_check_detailed(*s.check, *ctx);
      o.summary = std::move(run.summary);
      o.extra = std::move(run.failures);
    }
    if (!config.timing) {
      o.summary.elapsed = std::chrono::microseconds{0};
      for (auto& r : o.extra) r.elapsed = std::chrono::microseconds{0};
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

ScanOutput scan(const ScanConfig& config) {
  if (config.lo < 3 || config.lo > config.hi) throw ConfigError("prime range needs 3 <= lo <= hi");
  if (config.jobs < 1) throw ConfigError("jobs must be at least 1");
  const std::vector<Selected> selected = resolve_selectors(config.selectors);
  std::vector<std::uint64_t> primes = primes_in(config.lo, config.hi);

  ScanOutput result;
  ScanReport& report = result.report;
  for (const auto& s : selected) {
    report.checks.push_back(CheckSummary{s.id});
    const bool any = std::any_of(primes.begin(), primes.end(), [&](std::uint64_t p) { return p >= s.min_prime(); });
    if (!any) {
      report.warnings.push_back("no admissible primes for " + s.id + " in " + std::to_string(config.lo) + ".." +
                                std::to_string(config.hi) + " (min_prime " + std::to_string(s.min_prime()) + ")");
    }
  }

  std::ofstream partial;
  std::filesystem::path partial_path;
  if (config.output_path) {
    partial_path = config.output_path->string() + ".partial";
    partial.open(partial_path, std::ios::trunc);
    if (!partial) throw IoError("cannot write " + partial_path.string());
  }

  // Largest primes first: they dominate the cost.
  std::sort(primes.begin(), primes.end(), std::greater<>());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex sink;
  std::vector<Outcome> outcomes;

  auto worker = [&] {
    for (;;) {
      if (config.fail_fast && stop.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= primes.size()) return;
      std::vector<Outcome> got = run_prime(selected, primes[i], config);
      const std::lock_guard lock(sink);
      for (auto& o : got) {
        if (!o.summary.pass) stop = true;
        if (partial.is_open()) {
          partial << (config.format == OutputFormat::Csv ? to_csv_line(o.summary) : to_json_line(o.summary)) << '\n';
          for (const auto& r : o.extra) {
            partial << (config.format == OutputFormat::Csv ? to_csv_line(r) : to_json_line(r)) << '\n';
          }
        }
        outcomes.push_back(std::move(o));
      }
      if (partial.is_open()) partial.flush();
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::min<std::size_t>(config.jobs, std::max<std::size_t>(1, primes.size()));
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }
  report.stopped_early = config.fail_fast && stop.load() && next.load() < primes.size();

  for (auto& o : outcomes) {
    CheckSummary& cs = report.checks[o.check_index];
    ++cs.runs;
    cs.elapsed += o.summary.elapsed;
    if (o.summary.pass) {
      ++cs.passes;
      const std::uint64_t p = o.summary.prime;
      cs.min_prime_verified = cs.min_prime_verified ? std::min(*cs.min_prime_verified, p) : p;
      cs.max_prime_verified = cs.max_prime_verified ? std::max(*cs.max_prime_verified, p) : p;
    } else {
      ++cs.failures;
    }
    result.records.push_back(std::move(o.summary));
    for (auto& r : o.extra) result.records.push_back(std::move(r));
  }
  std::sort(result.records.begin(), result.records.end(), record_less);
  report.records = result.records.size();
  for (const auto& r : result.records) {
    if (!r.pass) report.failures.push_back(r);
  }

  if (config.output_path) {
    partial.close();
    std::ofstream out(*config.output_path, std::ios::trunc);
    if (!out) throw IoError("cannot write " + config.output_path->string());
    write_records(out, result.records, config.format);
    out.close();
    if (!out) throw IoError("write failed: " + config.output_path->string());
    std::error_code ec;
    std::filesystem::remove(partial_path, ec);
  }
  return result;
}

}  // namespace wzlab
