#include "wzlab/suite.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "suite_internal.hpp"

namespace wzlab {

bool CheckDescriptor::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

const std::vector<CheckDescriptor>& manifest() {
  static const std::vector<CheckDescriptor> all = [] {
    std::vector<CheckDescriptor> v;
    suite_detail::Registry reg(v);
    suite_detail::add_lemma_checks(reg);
    suite_detail::add_half_checks(reg);
    suite_detail::add_full_checks(reg);
    suite_detail::add_cubic_checks(reg);
    return v;
  }();
  return all;
}

const CheckDescriptor& find_check(std::string_view id) {
  for (const auto& d : manifest()) {
    if (d.id == id) return d;
  }
  throw UnknownCheck("unknown check id: " + std::string(id));
}

namespace {

using Clock = std::chrono::steady_clock;

CheckResult evaluate(const CheckDescriptor& d, const PrimeContext& ctx, long k, bool family) {
  CheckResult out;
  out.check_id = d.id;
  out.prime = ctx.prime();
  out.exponent = d.exponent;
  if (family) out.k = k;
  try {
    const Rational lhs = d.lhs(ctx, k);
    const Rational rhs = d.rhs(ctx, k);
    compare_sides(out, lhs, rhs);
  } catch (const std::exception& e) {
    out.pass = false;
    out.lhs = std::string("error:") + e.what();
    out.rhs = "";
  }
  return out;
}

void require_domain(const CheckDescriptor& d, const PrimeContext& ctx) {
  if (ctx.prime() < d.min_prime) {
    throw DomainError(d.id + " needs p >= " + std::to_string(d.min_prime));
  }
}

std::chrono::microseconds since(Clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t);
}

}  // namespace

FamilyRun run_check_detailed(const CheckDescriptor& d, const PrimeContext& ctx) {
  require_domain(d, ctx);
  const auto start = Clock::now();
  FamilyRun run;
  if (!d.family) {
    run.summary = evaluate(d, ctx, 0, false);
    run.summary.elapsed = since(start);
    return run;
  }
  const long first = d.family->first(ctx);
  const long last = d.family->last(ctx);
  long passed = 0;
  for (long k = first; k <= last; ++k) {
    CheckResult r = evaluate(d, ctx, k, true);
    if (r.pass) {
      ++passed;
    } else {
      run.failures.push_back(std::move(r));
    }
  }
  const long total = std::max(0L, last - first + 1);
  CheckResult& s = run.summary;
  s.check_id = d.id;
  s.prime = ctx.prime();
  s.exponent = d.exponent;
  s.pass = passed == total;
  s.lhs = "pass=" + std::to_string(passed) + "/" + std::to_string(total);
  s.rhs = d.family->variable + "=" + d.family->label;
  s.elapsed = since(start);
  return run;
}

CheckResult run_check(const CheckDescriptor& d, const PrimeContext& ctx, std::optional<long> k) {
  require_domain(d, ctx);
  if (!d.family) {
    const auto start = Clock::now();
    CheckResult r = evaluate(d, ctx, 0, false);
    r.elapsed = since(start);
    return r;
  }
  if (k) {
    const long first = d.family->first(ctx);
    const long last = d.family->last(ctx);
    if (*k < first || *k > last) {
      throw DomainError(d.id + ": " + d.family->variable + " outside " + d.family->label);
    }
    const auto start = Clock::now();
    CheckResult r = evaluate(d, ctx, *k, true);
    r.elapsed = since(start);
    return r;
  }
  FamilyRun run = run_check_detailed(d, ctx);
  if (run.failures.empty()) return run.summary;
  CheckResult first_fail = run.failures.front();
  first_fail.elapsed = run.summary.elapsed;
  return first_fail;
}

CheckResult run_check(std::string_view id, std::uint64_t p, std::optional<long> k) {
  const CheckDescriptor& d = find_check(id);
  if (p < d.min_prime || !is_prime(p)) {
    throw DomainError(d.id + " needs a prime p >= " + std::to_string(d.min_prime));
  }
  const PrimeContext ctx(p);
  return run_check(d, ctx, k);
}

std::string manifest_table() {
  std::ostringstream os;
  os << "id\tmodulus\tmin_prime\tfamily\ttags\tstatus\tanchor\n";
  for (const auto& d : manifest()) {
    os << d.id << '\t' << (d.exponent ? "p^" + std::to_string(*d.exponent) : std::string("exact")) << '\t'
       << d.min_prime << '\t' << (d.family ? d.family->variable + "=" + d.family->label : std::string("-"))
       << '\t';
    for (std::size_t i = 0; i < d.tags.size(); ++i) os << (i ? "," : "") << d.tags[i];
    os << '\t' << (d.printed_form_holds ? "verbatim" : "corrected") << '\t' << d.anchor << '\n';
  }
  return os.str();
}

}  // namespace wzlab
