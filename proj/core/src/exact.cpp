#include "wzlab/exact.hpp"

#include <array>

namespace wzlab {

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::from_mpq(mpq_class q) {
  Rational r;
  r.q_ = std::move(q);
  return r;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // powers of coprime integers stay coprime
  return from_mpq(mpq_class(num, den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return from_mpq(std::move(r));
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kSmall) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are sufficient for every n < 2^64.
  for (u64 a : kSmall) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

PrimePowerModulus::PrimePowerModulus(std::uint64_t p, int r) : p_(p), r_(r) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw InvalidModulus("modulus base must be an odd prime, got " + std::to_string(p));
  }
  if (r < 1) throw InvalidModulus("modulus exponent must be >= 1");
  mpz_ui_pow_ui(modulus_.get_mpz_t(), p, static_cast<unsigned long>(r));
}

std::string PrimePowerModulus::to_string() const {
  return std::to_string(p_) + "^" + std::to_string(r_);
}

Residue::Residue(BigInt value, PrimePowerModulus modulus)
    : value_(std::move(value)), modulus_(std::move(modulus)) {
  mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), modulus_.value().get_mpz_t());
}

Residue Residue::truncate(int s) const {
  if (s > modulus_.exponent() || s < 1) throw InvalidModulus("truncate: exponent out of range");
  return Residue(value_, modulus_.with_exponent(s));
}

namespace {

void require_same(const Residue& a, const Residue& b) {
  if (!(a.modulus() == b.modulus())) {
    throw ModulusMismatch("residues live in " + a.modulus().to_string() + " and " +
                          b.modulus().to_string());
  }
}

}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(a.value_ + b.value_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(a.value_ - b.value_, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(a.value_ * b.value_, a.modulus_);
}

Valuation padic_valuation(const BigInt& x, std::uint64_t p) {
  if (x == 0) return kInfiniteValuation;
  BigInt rest;
  const BigInt base(static_cast<unsigned long>(p));
  return static_cast<Valuation>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), base.get_mpz_t()));
}

Valuation padic_valuation(const Rational& x, std::uint64_t p) {
  if (x.is_zero()) return kInfiniteValuation;
  // at most one of the two terms is nonzero for a reduced fraction
  return padic_valuation(x.numerator(), p) - padic_valuation(x.denominator(), p);
}

bool is_p_integral(const Rational& x, std::uint64_t p) {
  return mpz_divisible_ui_p(x.denominator().get_mpz_t(), p) == 0;
}

Residue reduce_mod(const Rational& x, const PrimePowerModulus& m) {
  if (!is_p_integral(x, m.prime())) {
    throw NotPIntegral(x.to_string() + " is not " + std::to_string(m.prime()) + "-integral");
  }
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), x.denominator().get_mpz_t(), m.value().get_mpz_t());
  return Residue(x.numerator() * inv, m);
}

bool congruent(const Rational& x, const Rational& y, const PrimePowerModulus& m) {
  const Valuation v = padic_valuation(x - y, m.prime());
  return v >= m.exponent();
}

}  // namespace wzlab
