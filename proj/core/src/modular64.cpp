#include "wzlab/modular64.hpp"

#include <stdexcept>
#include <string>

#include "wzlab/exact.hpp"

namespace wzlab {

namespace {
using u128 = unsigned __int128;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("inverse_mod: " + std::to_string(a) + " is not a unit");
  const auto sm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % sm) + sm) % sm);
}

ModRing64::ModRing64(std::uint64_t p, int r) : p_(p), r_(r), m_(1) {
  if (!is_prime(p) || p < 3) throw InvalidModulus("ModRing64: odd prime required");
  if (r < 1) throw InvalidModulus("ModRing64: exponent must be >= 1");
  for (int i = 0; i < r; ++i) {
    if (m_ > (std::uint64_t{1} << 62) / p) throw InvalidModulus("ModRing64: p^r exceeds 2^62");
    m_ *= p;
  }
}

std::uint64_t ModRing64::reduce(std::int64_t x) const {
  const auto sm = static_cast<std::int64_t>(m_);
  std::int64_t v = x % sm;
  if (v < 0) v += sm;
  return static_cast<std::uint64_t>(v);
}

std::uint64_t ModRing64::add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t s = a + b;
  return s >= m_ ? s - m_ : s;
}

std::uint64_t ModRing64::sub(std::uint64_t a, std::uint64_t b) const {
  return a >= b ? a - b : a + m_ - b;
}

std::uint64_t ModRing64::mul(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m_);
}

std::uint64_t ModRing64::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % m_;
  a %= m_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void PAdicAccumulator::mul(std::int64_t x) {
  if (x == 0) {
    zero_ = true;
    return;
  }
  const auto p = static_cast<std::int64_t>(ring_->prime());
  while (x % p == 0) {
    x /= p;
    ++e_;
  }
  u_ = ring_->mul(u_, ring_->reduce(x));
}

void PAdicAccumulator::div(std::int64_t x) {
  if (x == 0) throw std::domain_error("PAdicAccumulator: division by zero");
  const auto p = static_cast<std::int64_t>(ring_->prime());
  while (x % p == 0) {
    x /= p;
    --e_;
  }
  u_ = ring_->mul(u_, ring_->inv(ring_->reduce(x)));
}

void PAdicAccumulator::mul_unit(std::uint64_t u) { u_ = ring_->mul(u_, u); }

std::uint64_t PAdicAccumulator::residue() const {
  if (zero_) return 0;
  if (e_ < 0) throw NotPIntegral("accumulated value has negative valuation");
  if (e_ >= ring_->exponent()) return 0;
  return ring_->mul(u_, ring_->pow(ring_->prime(), static_cast<std::uint64_t>(e_)));
}

}  // namespace wzlab
