#include <set>

#include <gtest/gtest.h>

#include "wzlab/prime_context.hpp"
#include "wzlab/suite.hpp"
#include "wzlab/theorems.hpp"

using namespace wzlab;

TEST(Manifest, IdsUnique) {
  std::set<std::string> seen;
  for (const auto& d : manifest()) {
    EXPECT_TRUE(seen.insert(d.id).second) << d.id;
    EXPECT_GE(d.min_prime, 3u) << d.id;
    EXPECT_FALSE(d.anchor.empty()) << d.id;
    EXPECT_FALSE(d.tags.empty()) << d.id;
    if (d.exponent) {
      EXPECT_GE(*d.exponent, 1) << d.id;
      EXPECT_LE(*d.exponent, 5) << d.id;
    }
  }
}

TEST(Manifest, Examples) {
  const auto& a = find_check("lemma2.1.a");
  EXPECT_EQ(a.exponent, 1);
  EXPECT_EQ(a.min_prime, 5u);
  const auto& m = find_check("sec3.morley");
  EXPECT_EQ(m.exponent, 3);
  EXPECT_EQ(m.min_prime, 5u);
  const auto& g = find_check("sec5.granville");
  EXPECT_EQ(g.exponent, 1);
  ASSERT_TRUE(g.family.has_value());
  EXPECT_EQ(g.family->variable, "x");
  EXPECT_THROW(find_check("no.such.check"), UnknownCheck);
}

TEST(RunCheck, Examples) {
  const CheckResult w = run_check("wolstenholme.h1", 5);
  EXPECT_TRUE(w.pass);
  EXPECT_EQ(w.modulus(), "5^2");
  const CheckResult m = run_check("sec3.morley", 7);
  EXPECT_TRUE(m.pass);
  EXPECT_EQ(m.lhs, "20");
  EXPECT_EQ(m.rhs, "20");  // -4096 mod 343
  const CheckResult g = run_check("sec5.granville", 5, 2);
  EXPECT_TRUE(g.pass);
  EXPECT_EQ(g.lhs, "4");
  EXPECT_EQ(g.rhs, "4");
  EXPECT_EQ(g.k, 2);
}

TEST(RunCheck, Errors) {
  EXPECT_THROW(run_check("wolstenholme.h1", 3), DomainError);
  EXPECT_THROW(run_check("wolstenholme.h1", 9), DomainError);
  EXPECT_THROW(run_check("sec5.granville", 5, 9), DomainError);
  EXPECT_THROW(run_check("nope", 5), UnknownCheck);
}

TEST(RunCheck, Wolstenholme) {
  // the congruence fails at p = 3, which is why the domain starts at 5
  const PrimeContext c(3);
  EXPECT_FALSE(congruent(c.H(2), Rational(0), PrimePowerModulus(3, 2)));
}

TEST(RunCheck, ExactChecksReportValuations) {
  const CheckResult r = run_check("sec3.reduction", 7);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.modulus(), "exact");
  EXPECT_EQ(r.lhs.rfind("val=", 0), 0u);
}

TEST(RunCheck, FamilySummary) {
  const CheckDescriptor& d = find_check("sec5.granville");
  const PrimeContext ctx(11);
  const FamilyRun run = run_check_detailed(d, ctx);
  EXPECT_TRUE(run.failures.empty());
  EXPECT_TRUE(run.summary.pass);
  EXPECT_FALSE(run.summary.k.has_value());
  EXPECT_EQ(run.summary.lhs, "pass=3/3");
}

TEST(RunCheck, DetectsABrokenFamilyMember) {
  CheckDescriptor d = find_check("sec5.granville");
  const SideFn rhs = d.rhs;
  d.rhs = [rhs](const PrimeContext& c, long x) { return x == 3 ? rhs(c, x) + Rational(1) : rhs(c, x); };
  const FamilyRun run = run_check_detailed(d, PrimeContext(7));
  EXPECT_FALSE(run.summary.pass);
  EXPECT_EQ(run.summary.lhs, "pass=2/3");
  ASSERT_EQ(run.failures.size(), 1u);
  EXPECT_EQ(run.failures[0].k, 3);
  const CheckResult first = run_check(d, PrimeContext(7), std::nullopt);
  EXPECT_FALSE(first.pass);
  EXPECT_EQ(first.k, 3);
}

TEST(RunCheck, ErrorsBecomeFailures) {
  CheckDescriptor d = find_check("wolstenholme.h1");
  d.lhs = [](const PrimeContext&, long) -> Rational { throw std::runtime_error("boom"); };
  const CheckResult r = run_check(d, PrimeContext(5), std::nullopt);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.lhs, "error:boom");
}

TEST(RunCheck, EveryCheckSmallPrimes) {
  for (const auto& d : manifest()) {
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
      if (p < d.min_prime) continue;
      const FamilyRun run = run_check_detailed(d, PrimeContext(p));
      ASSERT_TRUE(run.summary.pass) << d.id << " p=" << p << " " << run.summary.lhs << " / " << run.summary.rhs
                                    << (run.failures.empty() ? "" : " first k=" + std::to_string(*run.failures[0].k));
    }
  }
}

TEST(RunCheck, TwoRouteConsistency) {
  // for p-integral sides, residue equality and valuation of the difference agree
  for (const auto& d : manifest()) {
    if (!d.exponent) continue;
    for (std::uint64_t p : {7u, 13u}) {
      if (p < d.min_prime) continue;
      const PrimeContext ctx(p);
      const PrimePowerModulus m(p, *d.exponent);
      const long first = d.family ? d.family->first(ctx) : 0;
      const long last = d.family ? d.family->last(ctx) : 0;
      for (long k = first; k <= last; ++k) {
        const Rational l = d.lhs(ctx, k), r = d.rhs(ctx, k);
        if (!is_p_integral(l, p) || !is_p_integral(r, p)) continue;
        ASSERT_EQ(congruent(l, r, m), reduce_mod(l, m) == reduce_mod(r, m)) << d.id;
      }
    }
  }
}

TEST(ManifestTable, OneLinePerCheck) {
  const std::string t = manifest_table();
  EXPECT_EQ(static_cast<std::size_t>(std::count(t.begin(), t.end(), '\n')), manifest().size() + 1);
  EXPECT_EQ(t.rfind("id\tmodulus\tmin_prime", 0), 0u);
}

TEST(Coverage, NoUnmappedRows) {
  const auto rows = coverage_table();
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) EXPECT_NE(row.status, "UNMAPPED") << row.display;
}

TEST(Coverage, ReferencesResolveAndEveryCheckIsMapped) {
  std::set<std::string> referenced;
  for (const auto& row : coverage_table()) {
    for (const auto& id : row.check_ids) {
      referenced.insert(id);
      if (parse_theorem_id(id)) continue;
      EXPECT_NO_THROW(find_check(id)) << row.display << " -> " << id;
    }
  }
  for (const auto& d : manifest()) EXPECT_TRUE(referenced.count(d.id)) << d.id;
}

TEST(Coverage, CorrectedChecksShowUpAsCorrected) {
  for (const auto& row : coverage_table()) {
    bool any_corrected = false;
    for (const auto& id : row.check_ids) {
      if (!parse_theorem_id(id) && !find_check(id).printed_form_holds) any_corrected = true;
    }
    if (any_corrected) EXPECT_EQ(row.status, "corrected") << row.display;
  }
}
