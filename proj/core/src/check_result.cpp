#include "wzlab/check_result.hpp"

namespace wzlab {

std::string CheckResult::modulus() const {
  if (!exponent) return "exact";
  return std::to_string(prime) + "^" + std::to_string(*exponent);
}

std::string valuation_evidence(const Rational& x, std::uint64_t p) {
  const Valuation v = padic_valuation(x, p);
  return v == kInfiniteValuation ? "val=inf" : "val=" + std::to_string(v);
}

void compare_sides(CheckResult& out, const Rational& lhs, const Rational& rhs) {
  const std::uint64_t p = out.prime;
  if (!out.exponent) {
    out.pass = lhs == rhs;
    out.lhs = valuation_evidence(lhs, p);
    out.rhs = valuation_evidence(rhs, p);
    return;
  }
  const PrimePowerModulus m(p, *out.exponent);
  out.pass = congruent(lhs, rhs, m);
  if (is_p_integral(lhs, p) && is_p_integral(rhs, p)) {
    out.lhs = reduce_mod(lhs, m).to_string();
    out.rhs = reduce_mod(rhs, m).to_string();
  } else {
    out.lhs = valuation_evidence(lhs, p);
    out.rhs = valuation_evidence(rhs, p);
  }
}

}  // namespace wzlab
