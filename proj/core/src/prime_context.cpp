#include "wzlab/prime_context.hpp"

namespace wzlab {

PrimeContext::PrimeContext(std::uint64_t p)
    : p_(p),
      h_(static_cast<long>(p - 1) / 2),
      q_(fermat_quotient(2, p)),
      P_(static_cast<long>(p)),
      cache_(4 * static_cast<long>(p) + 4, 2 * static_cast<long>(p) + 2) {
  if (p < 3 || !is_prime(p)) throw InvalidModulus("PrimeContext needs an odd prime");
}

Rational pow2(long e) { return Rational(2).pow(e); }
Rational pow4(long e) { return Rational(4).pow(e); }

Rational sum_range(long a, long b, const std::function<Rational(long)>& f) {
  Rational s;
  for (long k = a; k <= b; ++k) s += f(k);
  return s;
}

namespace terms {

Rational quartic(const PrimeContext& c, long k) {
  const BigInt b = c.C(2 * k, k);
  Rational t(BigInt(sign_pow(k) * (172 * k * k + 75 * k + 9)) * b * b * b * c.C(3 * k, k) *
             c.C(4 * k, 2 * k));
  return t / pow2(12 * k);
}

Rational cubic(const PrimeContext& c, long k) {
  const BigInt b = c.C(2 * k, k);
  Rational t(BigInt(11 * k + 3) * b * b * c.C(3 * k, k));
  return t / pow2(6 * k);
}

Rational cubic_weight(const PrimeContext& c, long k) {
  const BigInt b = c.C(2 * k, k);
  return Rational(BigInt(22 * k * k - 3 * k - 3) * b * b * c.C(3 * k, k));
}

BigInt central(const PrimeContext& c, long m) { return m < 0 ? BigInt(0) : c.C(m, m / 2); }

Rational half_inner(const PrimeContext& c) {
  const long p = c.p();
  return sum_range(1, (p - 3) / 2, [&](long k) {
    Rational w(BigInt(sign_pow(k) * (p - 1 - k) * (p - 1 - 2 * k)), BigInt(p - 2 - 2 * k));
    return w * Rational(central(c, p - 1 + 2 * k) * central(c, p - 1 - 2 * k) *
                        c.C(2 * p - 2, p - 1 + k));
  });
}

Rational g_star(const PrimeContext& c, long k) {
  const long p = c.p();
  Rational w(BigInt(sign_pow(k) * (2 * p - k) * (p - k)), BigInt(2 * (2 * p - 2 * k - 1)));
  return w * Rational(c.C(2 * p + 2 * k, p + k) * c.C(2 * p - 2 * k, p - k) * c.C(4 * p, 2 * p + k));
}

Rational full_inner(const PrimeContext& c) {
  const long p = c.p();
  return sum_range(0, p - 1, [&](long k) {
    return Rational(BigInt(sign_pow(k) * (2 * p - k)) * c.C(2 * p + 2 * k, p + k) *
                    c.C(2 * p - 2 * k - 2, p - k - 1) * c.C(4 * p, 2 * p + k));
  });
}

Rational cubic_full_summand(const PrimeContext& c, long k) {
  const long p = c.p();
  Rational w(BigInt(sign_pow(k) * (3 * p + 3 * k - 1)),
             BigInt((p + k - 1) * (p + k)) * (2 * p + 2 * k - 1));
  w /= pow4(k);
  return w * Rational(c.C(2 * p + 2 * k, p + k) * c.C(3 * p + k - 1, p) * c.C(p - 1, k),
                      c.C(2 * k, k));
}

Rational f_star(const PrimeContext& c, long k) {
  const long p = c.p();
  Rational w(BigInt(sign_pow(k) * (6 * p - 3 * k - 1) * k),
             BigInt((2 * p - k - 1) * (2 * p - k)) * ((4 * p - 2 * k - 1) * (p - k)));
  w *= pow4(k);
  return w * Rational(c.C(4 * p - 2 * k, 2 * p - k) * c.C(4 * p - k - 1, p) * c.C(p - 1, k),
                      c.C(2 * p - 2 * k, p - k));
}

Rational cubic_half_summand(const PrimeContext& c, long k) {
  const long p = c.p();
  const long d = p + 1 + 2 * k;
  Rational w(BigInt(sign_pow(k) * (3 * p + 1 + 6 * k) * (p + 1) * p),
             BigInt((p - 1 + 2 * k) * d) * d);
  w /= pow4(k);
  return w * Rational(central(c, p - 1 + 2 * k) * c.C((3 * p + 1 + 2 * k) / 2, p + k) *
                          c.C(c.h(), k),
                      c.C(2 * k, k));
}

Rational s_half(const PrimeContext& c, long k) {
  const long p = c.p();
  const long d = p + 1 - k;
  Rational w(BigInt((3 * p + 2 - 3 * k) * (2 * p + 1 - k) * k),
             BigInt((p - k) * (p - 2 * k)) * (d * d));
  w *= Rational(-4).pow(k);
  return w * Rational(c.C(c.h(), k) * c.C(2 * p - 2 * k, p - k) * c.C(2 * p - k, c.h()),
                      central(c, p - 1 - 2 * k));
}

}  // namespace terms

}  // namespace wzlab
