#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wzlab/suite.hpp"

namespace wzlab::suite_detail {

using R = Rational;
using Ctx = PrimeContext;

inline R fr(long a, long b) { return R(a, b); }
inline R pw(const Ctx& c, long e) { return c.P().pow(e); }
inline R sg(long e) { return R(sign_pow(e)); }

class Registry {
public:
  explicit Registry(std::vector<CheckDescriptor>& out) : out_(out) {}

  /// Exact identity.
  Registry& exact(std::string id, std::string anchor, SideFn lhs, SideFn rhs) {
    return add(std::move(id), std::nullopt, std::move(anchor), std::move(lhs), std::move(rhs));
  }
  /// Congruence mod p^r.
  Registry& cong(std::string id, int r, std::string anchor, SideFn lhs, SideFn rhs) {
    return add(std::move(id), r, std::move(anchor), std::move(lhs), std::move(rhs));
  }

  Registry& over(std::string label, long (*first)(const Ctx&), long (*last)(const Ctx&),
                 std::string var = "k") {
    out_.back().family = FamilyRange{std::move(var), std::move(label), first, last};
    return *this;
  }
  Registry& corrected(std::string note) {
    out_.back().printed_form_holds = false;
    out_.back().note = std::move(note);
    return *this;
  }
  Registry& note(std::string text) {
    out_.back().note = std::move(text);
    return *this;
  }
  Registry& min_prime(std::uint64_t p) {
    out_.back().min_prime = p;
    return *this;
  }
  Registry& tag(std::string t) {
    out_.back().tags.push_back(std::move(t));
    return *this;
  }

  /// Tag applied to every later check.
  void group(std::string g) { group_ = std::move(g); }

private:
  Registry& add(std::string id, std::optional<int> r, std::string anchor, SideFn lhs, SideFn rhs) {
    CheckDescriptor d;
    d.id = std::move(id);
    d.anchor = std::move(anchor);
    d.exponent = r;
    d.tags = {group_};
    d.lhs = std::move(lhs);
    d.rhs = std::move(rhs);
    out_.push_back(std::move(d));
    return *this;
  }

  std::vector<CheckDescriptor>& out_;
  std::string group_;
};

// Common ranges.
inline long zero(const Ctx&) { return 0; }
inline long one(const Ctx&) { return 1; }
inline long two(const Ctx&) { return 2; }
inline long half(const Ctx& c) { return c.h(); }
inline long half_m1(const Ctx& c) { return c.h() - 1; }
inline long p_m1(const Ctx& c) { return c.p() - 1; }
inline long prime(const Ctx& c) { return c.p(); }

void add_lemma_checks(Registry& reg);
void add_half_checks(Registry& reg);
void add_full_checks(Registry& reg);
void add_cubic_checks(Registry& reg);

}  // namespace wzlab::suite_detail
