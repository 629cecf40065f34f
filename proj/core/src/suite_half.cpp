#include "suite_internal.hpp"
#include "wzlab/wz.hpp"

namespace wzlab::suite_detail {

namespace {

long lo_last(const Ctx& c) { return (c.p() - 3) / 2; }

R quartic_sum(const Ctx& c, long last) {
  return sum_range(0, last, [&](long k) { return terms::quartic(c, k); });
}

R fact(const Ctx& c, long n) { return R(c.cache().fact(n)); }

// C(p-1,(p-1)/2)^3 C((3p-3)/2,(p-1)/2) C(2p-1,p-1) times the last-term polynomial
R last_term_closed(const Ctx& c) {
  const long p = c.p();
  const long h = c.h();
  const R poly = c.P() * (R(9) + fr(75 * (p - 1), 2) + R(43 * (p - 1) * (p - 1)));
  return sg(h) * poly / (pow2(6 * (p - 1)) * R(2 * p - 1)) * c.Cq(p - 1, h).pow(3) *
         c.Cq((3 * p - 3) / 2, h) * c.Cq(2 * p - 1, p - 1);
}

R sum_h2k_over_k(const Ctx& c) {
  return sum_range(1, c.h(), [&](long k) { return c.H(2 * k) / R(k); });
}

// (1 + p(H_k - H_{2k}) + p^2/4 (...)) shared by the two central-binomial expansions
R central_expansion(const Ctx& c, long k, bool up) {
  const R& hk = c.H(k);
  const R& h2k = c.H(2 * k);
  const R sq = R(2) * hk * hk + R(2) * h2k * h2k - R(4) * hk * h2k;
  const R tail = up ? R(2) * c.H2(2 * k) - c.H2(k) : c.H2(k) - R(2) * c.H2(2 * k);
  return R(1) + c.P() * (hk - h2k) + pw(c, 2) / R(4) * (sq + tail);
}

}  // namespace

void add_half_checks(Registry& reg) {
  reg.group("half");

  reg.exact("sec3.telescope", R"(\sum_{k=0}^{p-1}F\left(\frac{p-1}{2},k\right)=-\sum_{n=0}^{\frac{p-3}{2}}G(n,0))",
            [](const Ctx& c, long) {
              return sum_range(0, c.p() - 1, [&](long k) {
                return evaluate_term(WzPairId::PairA, WzSide::F, c.h(), k);
              });
            },
            [](const Ctx& c, long) {
              return -sum_range(0, c.h() - 1, [&](long n) {
                return evaluate_term(WzPairId::PairA, WzSide::G, n, 0);
              });
            })
      .tag("wz");
  reg.exact("sec3.g-closed", R"(G(n,0)=\frac{(-1)^n(172n^2+75n+9)}{2^{12n+8}})",
            [](const Ctx&, long n) { return evaluate_term(WzPairId::PairA, WzSide::G, n, 0); },
            [](const Ctx& c, long n) { return terms::quartic(c, n) / R(256); })
      .over("0..(p-3)/2", zero, half_m1, "n")
      .tag("wz");
  reg.exact("sec3.f-closed", R"(F\left(\frac{p-1}{2},k\right)=(-1)^{\frac{p-1}{2}})",
            [](const Ctx& c, long k) { return evaluate_term(WzPairId::PairA, WzSide::F, c.h(), k); },
            [](const Ctx& c, long k) {
              const long p = c.p();
              const long h = c.h();
              return sg(h) * R(p - 1) / pow2(6 * p - 5) * c.Cq((3 * p - 3) / 2, h) * c.Cq(p - 1, h) *
                     sg(k) * R(p - 1 - k) * R(terms::central(c, p - 1 + 2 * k)) *
                     R(terms::central(c, p - 3 - 2 * k)) * c.Cq(2 * p - 2, p - 1 + k);
            })
      .over("0..p-1", zero, p_m1)
      .corrected("power of two in the prefactor is 2^{6p-5}")
      .tag("wz");
  reg.exact("sec3.reduction", R"(\frac{2^5p(p-1)^3}{2^{6(p-1)}(2p-1)(p-2)})",
            [](const Ctx& c, long) { return quartic_sum(c, lo_last(c)); },
            [](const Ctx& c, long) {
              const long p = c.p();
              const long h = c.h();
              const R cc = c.Cq((3 * p - 3) / 2, h);
              const R b = c.Cq(p - 1, h);
              const R scale = pow2(6 * (p - 1));
              const R first = R(BigInt(32 * p) * (p - 1) * (p - 1) * (p - 1), BigInt((2 * p - 1) * (p - 2))) /
                              scale * cc * b.pow(3) * c.Cq(2 * p - 1, p - 1);
              const R second = R(32 * (p - 1)) / scale * cc * b * terms::half_inner(c);
              return -sg(h) * first - sg(h) * second;
            })
      .tag("reduction");

  reg.exact("sec3.central-up.product", R"({p-1+2k\choose \frac{p-1}{2}+k}=p{p-1\choose \frac{p-1}{2}})",
            [](const Ctx& c, long k) { return R(terms::central(c, c.p() - 1 + 2 * k)); },
            [](const Ctx& c, long k) {
              const long p = c.p();
              const long h = c.h();
              // prod_{j<2k}(p+j) = (p+2k-1)!/p!,  prod_{j<=k}(p+2j-1) = 2^k (h+k)!/h!
              const R num = fact(c, p + 2 * k - 1) / fact(c, p);
              const R den = pow2(k) * fact(c, h + k) / fact(c, h);
              return c.P() * c.Cq(p - 1, h) * pow4(k) * num / (den * den);
            })
      .over("1..(p-1)/2", one, half)
      .corrected("numerator product runs over (p+j), j=1..2k-1");
  reg.cong("sec3.central-up.ratio", 4, R"(\frac{4^{2k}p}{(p+2k){2k\choose k}})",
           [](const Ctx& c, long k) { return R(terms::central(c, c.p() - 1 + 2 * k)); },
           [](const Ctx& c, long k) {
             const long p = c.p();
             const R f = R(1) + c.P() / R(2) * c.H(k) + pw(c, 2) / R(4) * c.H11(k);
             return c.Cq(p - 1, c.h()) * pow4(2 * k) * c.P() / (R(p + 2 * k) * c.Cq(2 * k, k)) * f * f /
                    (R(1) + c.P() * c.H(2 * k) + pw(c, 2) * c.H11(2 * k));
           })
      .over("0..(p-3)/2", zero, half_m1)
      .corrected("numerator factor is squared");
  reg.cong("sec3.central-up", 4, R"(\left(1+p(H_k-H_{2k})+\frac{p^2}{4}(2H_k^2+2H_{2k}^2)",
           [](const Ctx& c, long k) { return R(terms::central(c, c.p() - 1 + 2 * k)); },
           [](const Ctx& c, long k) {
             const long p = c.p();
             return central_expansion(c, k, true) * c.Cq(p - 1, c.h()) * pow4(2 * k) * c.P() /
                    (R(p + 2 * k) * c.Cq(2 * k, k));
           })
      .over("0..(p-3)/2", zero, half_m1)
      .corrected("second-order term reads 2H_{2k}(2)-H_k(2)-4H_kH_{2k}");
  reg.exact("sec3.central-down.product", R"({p-1-2k\choose \frac{p-1}{2}-k}={p-1\choose \frac{p-1}{2}}\frac{{\frac{p-1}{2}\choose k}^2}{{2k\choose k}{p-1\choose 2k}})",
            [](const Ctx& c, long k) { return R(terms::central(c, c.p() - 1 - 2 * k)); },
            [](const Ctx& c, long k) {
              const long p = c.p();
              const R b = c.Cq(c.h(), k);
              return c.Cq(p - 1, c.h()) * b * b / (c.Cq(2 * k, k) * c.Cq(p - 1, 2 * k));
            })
      .over("0..(p-1)/2", zero, half);
  reg.cong("sec3.central-down.ratio", 3, R"(\frac{{2k\choose k}}{16^k})",
           [](const Ctx& c, long k) { return R(terms::central(c, c.p() - 1 - 2 * k)); },
           [](const Ctx& c, long k) {
             const R d = R(1) - c.P() / R(2) * c.H(k) + pw(c, 2) / R(4) * c.H11(k);
             return c.Cq(c.p() - 1, c.h()) * c.Cq(2 * k, k) / pow2(4 * k) *
                    (R(1) - c.P() * c.H(2 * k) + pw(c, 2) * c.H11(2 * k)) / (d * d);
           })
      .over("0..(p-1)/2", zero, half)
      .corrected("denominator factor is squared");
  reg.cong("sec3.central-down", 3, R"(\left(1+p(H_k-H_{2k})+\frac{p^2}{4}(2H_k^2+2H_{2k}^2+H_k(2))",
           [](const Ctx& c, long k) { return R(terms::central(c, c.p() - 1 - 2 * k)); },
           [](const Ctx& c, long k) {
             return central_expansion(c, k, false) * c.Cq(c.p() - 1, c.h()) * c.Cq(2 * k, k) / pow2(4 * k);
           })
      .over("0..(p-1)/2", zero, half)
      .corrected("cross term is -4H_kH_{2k}");
  reg.cong("sec3.binomial-p1", 3, R"({p-1\choose k}\equiv (-1)^k(1-pH_k+p^2H_k(1,1)))",
           [](const Ctx& c, long k) { return c.Cq(c.p() - 1, k); },
           [](const Ctx& c, long k) {
             return sg(k) * (R(1) - c.P() * c.H(k) + pw(c, 2) * c.H11(k));
           })
      .over("0..p-1", zero, p_m1)
      .min_prime(3);
  reg.cong("sec3.binomial-2p2.harmonic", 3, R"({2p-2\choose p-1-k}=\frac{k}{p-1}\prod_{j=k}^{p-2}(1+\frac{p}{j}))",
           [](const Ctx& c, long k) { return c.Cq(2 * c.p() - 2, c.p() - 1 - k); },
           [](const Ctx& c, long k) {
             const long p = c.p();
             const R s1 = c.H(p - 2) - c.H(k - 1);
             const R s2 = (s1 * s1 - (c.H2(p - 2) - c.H2(k - 1))) / R(2);
             return fr(k, p - 1) * (R(1) + c.P() * s1 + pw(c, 2) * s2) * c.Cq(p - 1, k);
           })
      .over("1..p-1", one, p_m1);
  reg.cong("sec3.binomial-2p2", 3, R"(-k(-1)^k\left(1+2p+4p^2+\frac{p+2p^2}{k})",
           [](const Ctx& c, long k) { return c.Cq(2 * c.p() - 2, c.p() - 1 - k); },
           [](const Ctx& c, long k) {
             const long p = c.p();
             const R& hk = c.H(k);
             return R(-k) * sg(k) *
                    (R(1 + 2 * p + 4 * p * p) + fr(p + 2 * p * p, k) - (R(2 * p + 4 * p * p) + fr(2 * p * p, k)) * hk +
                     R(2 * p * p) * hk * hk);
           })
      .over("1..p-1", one, p_m1);
  reg.cong("sec3.rational-weight", 3, R"(\frac{k(p-1-2k)(p-1-k)}{(p-2-2k)(p+2k)})",
           [](const Ctx& c, long k) {
             const long p = c.p();
             return R(BigInt(k * (p - 1 - 2 * k)) * (p - 1 - k), BigInt((p - 2 - 2 * k) * (p + 2 * k)));
           },
           [](const Ctx& c, long k) {
             const long p = c.p();
             return -(fr(2 * k + 1 - 3 * p, 4) - fr(2 * p - 5 * p * p, 16 * k) + fr(p * p, 16 * k * k) +
                      fr(2 * p + p * p, 16 * (k + 1)) + fr(p * p, 16 * (k + 1) * (k + 1)));
           })
      .over("1..(p-3)/2", one, lo_last);
  reg.exact("sec3.odd-reciprocal.reflect", R"(\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{2k-1}=\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{p-2k})",
            [](const Ctx& c, long) { return c.Odd(c.h()); },
            [](const Ctx& c, long) {
              return sum_range(1, c.h(), [&](long k) { return fr(1, c.p() - 2 * k); });
            });
  reg.cong("sec3.odd-reciprocal", 1, R"(\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{2k-1}\equiv -\frac{1}{2}H_{\frac{p-1}{2}})",
           [](const Ctx& c, long) { return c.Odd(c.h()); },
           [](const Ctx& c, long) { return -c.H(c.h()) / R(2); });
  reg.cong("sec3.inner-normalized", 4, R"(-\frac{3p^3+3p}{16}+\frac{2p^2-3p^3}{8}H_{\frac{p-1}{2}})",
           [](const Ctx& c, long) {
             const R b = c.Cq(c.p() - 1, c.h());
             return terms::half_inner(c) / (b * b);
           },
           [](const Ctx& c, long) {
             const long h = c.h();
             const R P = c.P();
             const R p2 = pw(c, 2);
             const R p3 = pw(c, 3);
             const R s_k = sum_range(1, h, [&](long k) { return R(k) * c.H(2 * k); });
             const R s_1 = sum_range(1, h, [&](long k) { return c.H(2 * k); });
             const R s_sq = sum_range(1, h, [&](long k) { return R(2 * k + 1) * c.H(2 * k) * c.H(2 * k); });
             return -(R(3) * p3 + R(3) * P) / R(16) + (R(2) * p2 - R(3) * p3) / R(8) * c.H(h) +
                    p3 / R(8) * c.H2(h) - p3 / R(2) * sum_h2k_over_k(c) - (p2 - R(2) * p3) * s_k -
                    (p2 - p3) / R(2) * s_1 + p3 / R(2) * s_sq;
           });
  reg.cong("sec3.morley", 3, R"({p-1\choose \frac{p-1}{2}}\equiv (-1)^{\frac{p-1}{2}}4^{p-1}\pmod{p^3})",
           [](const Ctx& c, long) { return c.Cq(c.p() - 1, c.h()); },
           [](const Ctx& c, long) { return sg(c.h()) * pow4(c.p() - 1); });
  reg.cong("sec3.inner", 4, R"(-\frac{3p+2p^2+6p^3}{16}-\frac{9p^2-2p^3}{8}q_p(2)-\frac{45p^3}{16}q_p(2)^2)",
           [](const Ctx& c, long) { return terms::half_inner(c); },
           [](const Ctx& c, long) {
             const R P = c.P();
             const R& q = c.q();
             return -(R(3) * P + R(2) * pw(c, 2) + R(6) * pw(c, 3)) / R(16) -
                    (R(9) * pw(c, 2) - R(2) * pw(c, 3)) / R(8) * q - R(45) * pw(c, 3) / R(16) * q * q;
           });
  reg.exact("sec3.binomial-3half.product", R"({\frac{3p-3}{2}\choose \frac{p-1}{2}}=\frac{p\prod_{j=1}^{\frac{p-3}{2}}(p+j)})",
            [](const Ctx& c, long) { return c.Cq((3 * c.p() - 3) / 2, c.h()); },
            [](const Ctx& c, long) {
              const long p = c.p();
              return c.P() * fact(c, (3 * p - 3) / 2) / fact(c, p) / fact(c, c.h());
            })
      .corrected("denominator is ((p-1)/2)!");
  reg.cong("sec3.binomial-3half.harmonic", 4, R"(\frac{2p}{3p-1}\left(1+pH_{\frac{p-1}{2}})",
           [](const Ctx& c, long) { return c.Cq((3 * c.p() - 3) / 2, c.h()); },
           [](const Ctx& c, long) {
             const long h = c.h();
             return R(2) * c.P() / R(3 * c.p() - 1) * (R(1) + c.P() * c.H(h) + pw(c, 2) * c.H11(h));
           })
      .corrected("second-order coefficient is p^2, not p^2/2");
  reg.cong("sec3.binomial-3half", 4, R"(-2p-6p^2-18p^3+4(p^2+3p^3)q_p(2)-6p^3q_p(2)^2)",
           [](const Ctx& c, long) { return c.Cq((3 * c.p() - 3) / 2, c.h()); },
           [](const Ctx& c, long) {
             const R P = c.P();
             const R& q = c.q();
             return R(-2) * P - R(6) * pw(c, 2) - R(18) * pw(c, 3) + R(4) * (pw(c, 2) + R(3) * pw(c, 3)) * q -
                    R(6) * pw(c, 3) * q * q;
           });
  reg.cong("sec3.binomial-2p1", 3, R"({2p-1\choose p-1}\equiv 1\pmod{p^3})",
           [](const Ctx& c, long) { return c.Cq(2 * c.p() - 1, c.p() - 1); },
           [](const Ctx&, long) { return R(1); });
  reg.exact("sec3.fermat-power", R"(\left(2^{p-1}\right)^{\alpha}=(1+pq_p(2))^{\alpha})",
            [](const Ctx& c, long a) { return pow2(c.p() - 1).pow(a); },
            [](const Ctx& c, long a) { return (R(1) + c.P() * c.q()).pow(a); })
      .over("1..5", one, [](const Ctx&) { return 5L; }, "alpha")
      .min_prime(3);
  reg.cong("sec3.half-sum-short", 5, R"(-20p^2-48p^3-152p^4+(64p^3+96p^4)q_p(2)-96p^4q_p(2)^2)",
           [](const Ctx& c, long) { return quartic_sum(c, lo_last(c)); },
           [](const Ctx& c, long) {
             const R& q = c.q();
             return R(-20) * pw(c, 2) - R(48) * pw(c, 3) - R(152) * pw(c, 4) +
                    (R(64) * pw(c, 3) + R(96) * pw(c, 4)) * q - R(96) * pw(c, 4) * q * q;
           });
  reg.exact("sec3.last-term.closed", R"(p(9+\frac{75(p-1)}{2}+43(p-1)^2))",
            [](const Ctx& c, long) { return terms::quartic(c, c.h()); },
            [](const Ctx& c, long) { return last_term_closed(c); })
      .corrected("C(p-1,(p-1)/2) enters cubed and the factor 43 multiplies (p-1)^2 only");
  reg.cong("sec3.last-term", 5, R"(29p^2+48p^3+152p^4-(58p^3+96p^4)q_p(2)+87p^4q_p(2)^2)",
           [](const Ctx& c, long) { return last_term_closed(c); },
           [](const Ctx& c, long) {
             const R& q = c.q();
             return R(29) * pw(c, 2) + R(48) * pw(c, 3) + R(152) * pw(c, 4) -
                    (R(58) * pw(c, 3) + R(96) * pw(c, 4)) * q + R(87) * pw(c, 4) * q * q;
           })
      .corrected("evaluated on the corrected closed form");
  reg.exact("sec3.half-split", R"(\sum_{k=0}^{\frac{p-1}{2}}=\sum_{k=0}^{\frac{p-3}{2}}+)",
            [](const Ctx& c, long) { return quartic_sum(c, c.h()); },
            [](const Ctx& c, long) { return quartic_sum(c, lo_last(c)) + last_term_closed(c); });
}

}  // namespace wzlab::suite_detail
