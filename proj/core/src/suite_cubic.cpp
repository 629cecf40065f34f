#include "suite_internal.hpp"
#include "wzlab/wz.hpp"

namespace wzlab::suite_detail {

namespace {

long lo_last(const Ctx& c) { return (c.p() - 3) / 2; }

R cubic_sum(const Ctx& c, long a, long b) {
  return sum_range(a, b, [&](long k) { return terms::cubic(c, k); });
}

// sum_{k=2}^{last} (22k^2-3k-3)C(2k,k)^2C(3k,k) / (2^{6k+3} 3k(k-1)(2k-1))
R weighted_tail(const Ctx& c, long last) {
  return sum_range(2, last, [&](long k) {
    return terms::cubic_weight(c, k) / (pow2(6 * k + 3) * R(3 * k * (k - 1) * (2 * k - 1)));
  });
}

R fs(const Ctx& c, long k) { return terms::f_star(c, k); }
R l5(const Ctx& c, long k) { return terms::cubic_full_summand(c, k); }
R l6(const Ctx& c, long k) { return terms::cubic_half_summand(c, k); }
R s6(const Ctx& c, long k) { return terms::s_half(c, k); }

R fs_low(const Ctx& c) { return sum_range(1, lo_last(c), [&](long k) { return fs(c, k); }); }
R fs_high(const Ctx& c) { return sum_range((c.p() + 1) / 2, c.p() - 2, [&](long k) { return fs(c, k); }); }

R pow4_over(const Ctx& c, long (*den)(long)) {
  return sum_range(1, c.h(), [&](long k) { return pow4(k) / R(den(k)); });
}
R pow4_over_k(const Ctx& c) { return pow4_over(c, [](long k) { return k; }); }
R pow4_over_odd(const Ctx& c) { return pow4_over(c, [](long k) { return 2 * k - 1; }); }
R inv4_over_k(const Ctx& c) {
  return sum_range(1, c.h(), [&](long k) { return R(1) / (pow4(k) * R(k)); });
}
R inv4_over_odd(const Ctx& c) {
  return sum_range(1, c.h(), [&](long k) { return R(1) / (pow4(k) * R(2 * k - 1)); });
}

// (3p+2)(p-1)/(4(p+1)^2p) C(3p,p)C(2p,p)
R last_closed(const Ctx& c) {
  const long p = c.p();
  return R(BigInt((3 * p + 2) * (p - 1)), BigInt(4 * (p + 1) * (p + 1)) * p) * c.Cq(3 * p, p) * c.Cq(2 * p, p);
}

R middle_closed(const Ctx& c) {
  const long p = c.p();
  const long h = c.h();
  const R b = c.Cq(2 * p - 1, h);
  const R w(BigInt(sign_pow(h) * (9 * p + 1) * (p - 1)),
            BigInt(3 * (3 * p + 1) * (3 * p + 1)) * ((3 * p - 1) * p));
  return w / pow2(p - 2) * c.Cq(4 * p, 2 * p) * c.Cq((7 * p - 1) / 2, p) * b * b /
         (c.Cq(4 * p, p) * c.Cq(p - 1, h));
}

R pair_b_f_sum(const Ctx& c, long n) {
  return sum_range(0, c.p() - 1, [&](long k) { return evaluate_term(WzPairId::PairB, WzSide::F, n, k); });
}
R pair_b_g_sum(long first, long last) {
  return sum_range(first, last, [&](long n) { return evaluate_term(WzPairId::PairB, WzSide::G, n, 0); });
}

}  // namespace

void add_cubic_checks(Registry& reg) {
  reg.group("cubic");

  reg.exact("sec5.telescope", R"(\sum_{k=0}^{p-1}F'(p,k)-\sum_{k=0}^{p-1}F'(2,k)=-\sum_{n=2}^{p-1}G'(n,0))",
            [](const Ctx& c, long) { return pair_b_f_sum(c, c.p()) - pair_b_f_sum(c, 2); },
            [](const Ctx& c, long) { return -pair_b_g_sum(2, c.p() - 1); })
      .tag("wz");
  reg.exact("sec5.g-difference", R"(G'(n,0)=\frac{22n^2-3n-3}{2^{6n+3}\cdot 3n(n-1)(2n-1)})",
            [](const Ctx&, long n) { return gb_difference_residual(n); },
            [](const Ctx&, long) { return R(); })
      .over("2..p-1", two, p_m1, "n")
      .tag("wz");
  reg.exact("sec5.reduction", R"(\frac{p^2}{2^{6p+1}}{2p\choose p}\sum_{k=0}^{p-1})",
            [](const Ctx& c, long) {
              const long p = c.p();
              return pw(c, 2) / pow2(6 * p + 1) * c.Cq(2 * p, p) *
                     sum_range(0, p - 1, [&](long k) { return l5(c, k); });
            },
            [](const Ctx& c, long) {
              const R tail = sum_range(2, c.p() - 1, [&](long k) {
                return terms::cubic_weight(c, k) / (pow2(6 * k) * R(k * (k - 1) * (2 * k - 1)));
              });
              return fr(15, 128) - tail / R(24);
            })
      .corrected("weight denominator is k(k-1)(2k-1)")
      .tag("reduction");
  reg.exact("sec5.head-tail", R"(\frac{p^3}{2^{6p-5}(p-1)(2p-1)}{2p\choose p}^2{3p\choose p}-\frac{45}{4})",
            [](const Ctx& c, long) {
              const long p = c.p();
              return cubic_sum(c, 2, p - 1) - R(48) * weighted_tail(c, p - 1);
            },
            [](const Ctx& c, long) {
              const long p = c.p();
              const R b = c.Cq(2 * p, p);
              return pw(c, 3) / (pow2(6 * p - 5) * R((p - 1) * (2 * p - 1))) * b * b * c.Cq(3 * p, p) - fr(45, 4);
            })
      .tag("wz");
  reg.exact("sec5.reindex", R"(-\frac{1}{4^p}\sum_{k=1}^{p-1}F^*(p,k))",
            [](const Ctx& c, long) { return sum_range(1, c.p() - 1, [&](long k) { return l5(c, k); }); },
            [](const Ctx& c, long) {
              return -sum_range(1, c.p() - 1, [&](long k) { return fs(c, k); }) / pow4(c.p());
            });
  reg.exact("sec5.split", R"(F^*(p,p-1)+F^*\left(p,\frac{p-1}{2}\right))",
            [](const Ctx& c, long) { return sum_range(1, c.p() - 1, [&](long k) { return fs(c, k); }); },
            [](const Ctx& c, long) { return fs_low(c) + fs_high(c) + fs(c, c.p() - 1) + fs(c, c.h()); });

  reg.cong("sec5.binomial-4p-k", 1, R"({4p-k-1\choose p}\equiv\frac{3(-1)^k}{{p-1\choose k}})",
           [](const Ctx& c, long k) { return c.Cq(4 * c.p() - k - 1, c.p()); },
           [](const Ctx& c, long k) { return R(3 * sign_pow(k)) / c.Cq(c.p() - 1, k); })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec5.central-ratio", 1, R"({4p\choose 2p}/{2p\choose p}=3)",
           [](const Ctx& c, long) { return c.Cq(4 * c.p(), 2 * c.p()) / c.Cq(2 * c.p(), c.p()); },
           [](const Ctx&, long) { return R(3); });
  reg.exact("sec5.central-shift", R"({2n-2k\choose n-k}=\frac{{2n\choose n}{n\choose k}^2}{{2k\choose k}{2n\choose 2k}})",
            [](const Ctx& c, long k) { return c.Cq(2 * c.p() - 2 * k, c.p() - k); },
            [](const Ctx& c, long k) {
              const long n = c.p();
              const R b = c.Cq(n, k);
              return c.Cq(2 * n, n) * b * b / (c.Cq(2 * k, k) * c.Cq(2 * n, 2 * k));
            })
      .over("0..p", zero, prime)
      .min_prime(3);
  reg.exact("sec5.central-shift-ratio.exact", R"(\frac{{4p-2k\choose 2p-k}}{{2p-2k\choose p-k}})",
            [](const Ctx& c, long k) {
              const long p = c.p();
              return c.Cq(4 * p - 2 * k, 2 * p - k) / c.Cq(2 * p - 2 * k, p - k);
            },
            [](const Ctx& c, long k) {
              const long p = c.p();
              const R a = c.Cq(2 * p, k);
              const R b = c.Cq(p, k);
              return c.Cq(4 * p, 2 * p) * c.Cq(2 * p, 2 * k) * a * a / (c.Cq(2 * p, p) * c.Cq(4 * p, 2 * k) * b * b);
            })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec5.central-shift-ratio", 1, R"(\frac{{4p-2k\choose 2p-k}}{{2p-2k\choose p-k}}\equiv 6)",
           [](const Ctx& c, long k) {
             const long p = c.p();
             return c.Cq(4 * p - 2 * k, 2 * p - k) / c.Cq(2 * p - 2 * k, p - k);
           },
           [](const Ctx&, long) { return R(6); })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec5.low-piece.weight", 1, R"(18\sum_{k=1}^{\frac{p-3}{2}}\frac{2^{2k}(6p-3k-1)k}{(2p-k-1)(2p-k)(4p-2k-1)(p-k)})",
           [](const Ctx& c, long) { return fs_low(c); },
           [](const Ctx& c, long) {
             const long p = c.p();
             return R(18) * sum_range(1, lo_last(c), [&](long k) {
                      return pow4(k) * R(BigInt((6 * p - 3 * k - 1) * k),
                                         BigInt((2 * p - k - 1) * (2 * p - k)) * ((4 * p - 2 * k - 1) * (p - k)));
                    });
           });
  reg.cong("sec5.low-piece.partial", 1, R"(-18\sum_{k=1}^{\frac{p-3}{2}}4^k\left(\frac{1}{k}+\frac{2}{2k+1})",
           [](const Ctx& c, long) { return fs_low(c); },
           [](const Ctx& c, long) {
             return R(-18) * sum_range(1, lo_last(c), [&](long k) {
                      return pow4(k) * (fr(1, k) + fr(2, 2 * k + 1) - fr(2, k + 1));
                    });
           })
      .corrected("2/(k+1) enters with a minus sign");
  reg.cong("sec5.low-piece", 1, R"(-36-9\sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{2k-1}-9\sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{k})",
           [](const Ctx& c, long) { return fs_low(c); },
           [](const Ctx& c, long) { return R(-36) - R(9) * pow4_over_odd(c) - R(9) * pow4_over_k(c); });
  reg.cong("sec5.ratio-sixth", 1, R"(\frac{{2p\choose 2k+2}}{{4p\choose 2(p-1-k)}}\equiv\frac{1}{6})",
           [](const Ctx& c, long k) {
             const long p = c.p();
             return c.Cq(2 * p, 2 * k + 2) / c.Cq(4 * p, 2 * (p - 1 - k));
           },
           [](const Ctx&, long) { return fr(1, 6); })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec5.ratio-four", 1, R"(\frac{{2p\choose p-1-k}^2}{{p\choose k+1}^2}\equiv 4)",
           [](const Ctx& c, long k) {
             const long p = c.p();
             const R r = c.Cq(2 * p, p - 1 - k) / c.Cq(p, k + 1);
             return r * r;
           },
           [](const Ctx&, long) { return R(4); })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec5.ratio-three", 1, R"({3p+k\choose p}{p-1\choose k}\equiv 3(-1)^k)",
           [](const Ctx& c, long k) { return c.Cq(3 * c.p() + k, c.p()) * c.Cq(c.p() - 1, k); },
           [](const Ctx&, long k) { return R(3 * sign_pow(k)); })
      .over("1..(p-3)/2", one, lo_last);
  reg.exact("sec5.high-piece.reindex", R"(4^{p-1}\frac{{4p\choose 2p}}{{2p\choose p}})",
            [](const Ctx& c, long) { return fs_high(c); },
            [](const Ctx& c, long) {
              const long p = c.p();
              const R s = sum_range(1, lo_last(c), [&](long k) {
                const R b = c.Cq(2 * p, p - 1 - k);
                const R d = c.Cq(p, k + 1);
                const R w(BigInt(sign_pow(k) * (3 * p + 3 * k + 2) * (p - 1 - k)),
                          BigInt((p + k) * (p + k + 1)) * ((2 * p + 2 * k + 1) * (1 + k)));
                return w / pow4(k) * c.Cq(2 * p, 2 * k + 2) * b * b * c.Cq(3 * p + k, p) * c.Cq(p - 1, k) /
                       (c.Cq(4 * p, 2 * (p - 1 - k)) * d * d);
              });
              return pow4(p - 1) * c.Cq(4 * p, 2 * p) / c.Cq(2 * p, p) * s;
            });
  reg.cong("sec5.high-piece.partial", 1, R"(-6\sum_{k=1}^{\frac{p-3}{2}}\frac{1}{4^k}\left(\frac{2}{k}-\frac{2}{2k+1}-\frac{1}{k+1}\right))",
           [](const Ctx& c, long) { return fs_high(c); },
           [](const Ctx& c, long) {
             return R(-6) * sum_range(1, lo_last(c), [&](long k) {
                      return (fr(2, k) - fr(2, 2 * k + 1) - fr(1, k + 1)) / pow4(k);
                    });
           });
  reg.cong("sec5.high-piece", 1, R"(12\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{4^kk}+48\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{4^k(2k-1)}-42)",
           [](const Ctx& c, long) { return fs_high(c); },
           [](const Ctx& c, long) { return R(12) * inv4_over_k(c) + R(48) * inv4_over_odd(c) - R(42); });
  reg.exact("sec5.quarter-sum.reflect", R"(\frac{1}{2^p}\sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{p+1-2k})",
            [](const Ctx& c, long) { return inv4_over_k(c); },
            [](const Ctx& c, long) {
              return sum_range(1, c.h(), [&](long k) { return pow4(k) / R(c.p() + 1 - 2 * k); }) / pow2(c.p());
            });
  reg.cong("sec5.quarter-sum", 1, R"(\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{4^kk})",
           [](const Ctx& c, long) { return inv4_over_k(c); },
           [](const Ctx& c, long) { return -pow4_over_odd(c) / R(2); })
      .corrected("right side is -1/2 sum 4^k/(2k-1)");
  reg.exact("sec5.quarter-odd-sum.reflect", R"(\frac{1}{2^{p+1}}\sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{p-2k})",
            [](const Ctx& c, long) { return inv4_over_odd(c); },
            [](const Ctx& c, long) {
              return sum_range(1, c.h(), [&](long k) { return pow4(k) / R(c.p() - 2 * k); }) / pow2(c.p() + 1);
            });
  reg.cong("sec5.quarter-odd-sum", 1, R"(-\frac{1}{8}\sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{k})",
           [](const Ctx& c, long) { return inv4_over_odd(c); },
           [](const Ctx& c, long) { return -pow4_over_k(c) / R(8); });
  reg.cong("sec5.granville", 1, R"(\sum_{k=1}^{p-1}\frac{x^k}{k}\equiv\frac{1-x^p-(1-x)^p}{p})",
           [](const Ctx& c, long x) {
             return sum_range(1, c.p() - 1, [&](long k) { return R(x).pow(k) / R(k); });
           },
           [](const Ctx& c, long x) {
             const long p = c.p();
             return (R(1) - R(x).pow(p) - R(1 - x).pow(p)) / c.P();
           })
      .over("2..4", two, [](const Ctx&) { return 4L; }, "x")
      .min_prime(3);
  reg.exact("sec5.power-sums.identity", R"(\sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{2k-1}+\sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{k}=2\sum_{k=1}^{p-1}\frac{2^k}{k})",
            [](const Ctx& c, long) { return pow4_over_odd(c) + pow4_over_k(c); },
            [](const Ctx& c, long) {
              return R(2) * sum_range(1, c.p() - 1, [&](long k) { return pow2(k) / R(k); });
            })
      .min_prime(3);
  reg.cong("sec5.power-sums", 1, R"(\frac{2-2^p}{p})",
           [](const Ctx& c, long) {
             return R(2) * sum_range(1, c.p() - 1, [&](long k) { return pow2(k) / R(k); });
           },
           [](const Ctx& c, long) { return R(2) * (R(2) - pow2(c.p())) / c.P(); })
      .corrected("right side carries the factor 2")
      .min_prime(3);
  reg.cong("sec5.split-pieces", 1, R"(-78+60q_p(2))",
           [](const Ctx& c, long) { return fs_low(c) + fs_high(c); },
           [](const Ctx& c, long) { return R(-78) + R(60) * c.q(); });
  reg.cong("sec5.binomial-2p1-half.harmonic", 2, R"({2p-1\choose \frac{p-1}{2}}\equiv (-1)^{\frac{p-1}{2}}(1-2pH_{\frac{p-1}{2}}))",
           [](const Ctx& c, long) { return c.Cq(2 * c.p() - 1, c.h()); },
           [](const Ctx& c, long) { return sg(c.h()) * (R(1) - R(2) * c.P() * c.H(c.h())); });
  reg.cong("sec5.binomial-2p1-half", 2, R"((-1)^{\frac{p-1}{2}}(1+4pq_p(2)))",
           [](const Ctx& c, long) { return c.Cq(2 * c.p() - 1, c.h()); },
           [](const Ctx& c, long) { return sg(c.h()) * (R(1) + R(4) * c.P() * c.q()); });
  reg.cong("sec5.binomial-7half.harmonic", 2, R"({\frac{7p-1}{2}\choose p}\equiv 3+3pH_{\frac{p-1}{2}})",
           [](const Ctx& c, long) { return c.Cq((7 * c.p() - 1) / 2, c.p()); },
           [](const Ctx& c, long) {
             return R(3) + R(3) * c.P() * c.H(c.h()) + R(2) * c.P() * c.H(c.p() - 1);
           })
      .corrected("last term is 2pH_{p-1}");
  reg.cong("sec5.binomial-7half", 2, R"(3-6pq_p(2))",
           [](const Ctx& c, long) { return c.Cq((7 * c.p() - 1) / 2, c.p()); },
           [](const Ctx& c, long) { return R(3) - R(6) * c.P() * c.q(); });
  reg.cong("sec5.binomial-ratio-4p", 2, R"(\frac{{4p\choose 2p}}{{4p\choose p}}\equiv\frac{3}{2})",
           [](const Ctx& c, long) { return c.Cq(4 * c.p(), 2 * c.p()) / c.Cq(4 * c.p(), c.p()); },
           [](const Ctx&, long) { return fr(3, 2); });
  reg.cong("sec5.binomial-ratio-3p", 2, R"(\frac{{3p\choose 2p}}{{2p\choose p}}\equiv\frac{3}{2})",
           [](const Ctx& c, long) { return c.Cq(3 * c.p(), 2 * c.p()) / c.Cq(2 * c.p(), c.p()); },
           [](const Ctx&, long) { return fr(3, 2); });
  reg.exact("sec5.piece-last.closed", R"(F^*(p,p-1)=\frac{(3p+2)(p-1)}{4(p+1)^2p})",
            [](const Ctx& c, long) { return fs(c, c.p() - 1); },
            [](const Ctx& c, long) { return pow4(c.p()) * last_closed(c); })
      .corrected("closed form equals F*(p,p-1)/4^p");
  reg.cong("sec5.piece-last", 1, R"(\frac{9}{2}-\frac{3}{p})",
           [](const Ctx& c, long) { return last_closed(c); },
           [](const Ctx& c, long) { return fr(9, 2) - R(3) / c.P(); })
      .corrected("right side is 9/2-3/p");
  reg.exact("sec5.piece-middle.closed", R"(\frac{(-1)^{\frac{p-1}{2}}(9p+1)(p-1)}{2^{p-2}\cdot 3(3p+1)^2(3p-1)p})",
            [](const Ctx& c, long) { return fs(c, c.h()); },
            [](const Ctx& c, long) { return pow4(c.p()) * middle_closed(c); })
      .corrected("closed form equals F*(p,(p-1)/2)/4^p");
  reg.cong("sec5.piece-middle", 1, R"(15+\frac{3}{p}+9q_p(2))",
           [](const Ctx& c, long) { return middle_closed(c); },
           [](const Ctx& c, long) { return R(15) + R(3) / c.P() + R(9) * c.q(); });
  reg.cong("sec5.inner-tail", 1, R"(\sum_{k=1}^{p-1}\equiv -24q_p(2))",
           [](const Ctx& c, long) { return sum_range(1, c.p() - 1, [&](long k) { return l5(c, k); }); },
           [](const Ctx& c, long) { return R(-24) * c.q(); });
  reg.cong("sec5.inner.closed", 1, R"(\frac{2(3p-1)}{3p(p-1)(2p-1)}{2p\choose p}{3p\choose p}-24q_p(2))",
           [](const Ctx& c, long) { return sum_range(0, c.p() - 1, [&](long k) { return l5(c, k); }); },
           [](const Ctx& c, long) {
             const long p = c.p();
             return R(BigInt(2 * (3 * p - 1)), BigInt(3 * p * (p - 1)) * (2 * p - 1)) * c.Cq(2 * p, p) *
                        c.Cq(3 * p, p) -
                    R(24) * c.q();
           });
  reg.cong("sec5.inner", 1, R"(-\frac{4}{p}-24q_p(2))",
           [](const Ctx& c, long) { return sum_range(0, c.p() - 1, [&](long k) { return l5(c, k); }); },
           [](const Ctx& c, long) { return R(-4) / c.P() - R(24) * c.q(); });
  reg.cong("sec5.tail", 3, R"(\frac{3p+18p^2q_p(2)}{2^{6(p-1)}}-\frac{45}{8})",
           [](const Ctx& c, long) { return cubic_sum(c, 2, c.p() - 1); },
           [](const Ctx& c, long) {
             return (R(3) * c.P() + R(18) * pw(c, 2) * c.q()) / pow2(6 * (c.p() - 1)) - fr(45, 8);
           })
      .corrected("summand has C(2k,k)^2");
  reg.exact("sec5.head", R"(\frac{45}{8})",
            [](const Ctx& c, long) { return cubic_sum(c, 0, 1); },
            [](const Ctx&, long) { return fr(45, 8); })
      .min_prime(3);

  reg.group("cubic-half");

  reg.exact("sec6.telescope", R"(\sum_{k=0}^{p-1}F'\left(\frac{p+1}{2},k\right)-\sum_{k=0}^{p-1}F'(2,k))",
            [](const Ctx& c, long) { return pair_b_f_sum(c, c.h() + 1) - pair_b_f_sum(c, 2); },
            [](const Ctx& c, long) { return -pair_b_g_sum(2, c.h()); })
      .tag("wz");
  reg.exact("sec6.reduction", R"(\frac{{p-1\choose \frac{p-1}{2}}}{2^{3p+1}}\sum_{k=0}^{\frac{p-1}{2}})",
            [](const Ctx& c, long) {
              const long p = c.p();
              return c.Cq(p - 1, c.h()) / pow2(3 * p + 1) * sum_range(0, c.h(), [&](long k) { return l6(c, k); });
            },
            [](const Ctx& c, long) { return fr(15, 128) - weighted_tail(c, c.h()); })
      .corrected("weight denominator carries the factor 3")
      .tag("reduction");
  reg.exact("sec6.head-tail", R"(\frac{3(9p^2-1)}{2^{3p-2}(p-1)}{\frac{3p-3}{2}\choose \frac{p-1}{2}}{p-1\choose \frac{p-1}{2}}^2-\frac{45}{4})",
            [](const Ctx& c, long) { return cubic_sum(c, 2, c.h()) - R(48) * weighted_tail(c, c.h()); },
            [](const Ctx& c, long) {
              const long p = c.p();
              const R b = c.Cq(p - 1, c.h());
              return R(3 * (9 * p * p - 1)) / (pow2(3 * p - 2) * R(p - 1)) * c.Cq((3 * p - 3) / 2, c.h()) * b * b -
                     fr(45, 4);
            })
      .corrected("weight is 22k^2-3k-3 over 2^{6k+3} 3k(k-1)(2k-1)")
      .tag("wz");
  reg.cong("sec6.binomial-2pk-half", 1, R"({2p-k\choose \frac{p-1}{2}}\equiv (-1)^{\frac{p-1}{2}}\frac{2(p-k){\frac{p-1}{2}\choose k}}{(p+1-2k){p-1\choose k}})",
           [](const Ctx& c, long k) { return c.Cq(2 * c.p() - k, c.h()); },
           [](const Ctx& c, long k) {
             const long p = c.p();
             return sg(c.h()) * R(2 * (p - k)) * c.Cq(c.h(), k) / (R(p + 1 - 2 * k) * c.Cq(p - 1, k));
           })
      .over("1..(p-1)/2", one, half)
      .note("only the congruence mod p is checked; the product line above it holds at k=1 only");
  reg.cong("sec6.sun", 2, R"((-4)^k{\frac{p-1}{2}\choose k}\equiv {2k\choose k}\left(1-p\sum_{j=1}^k\frac{1}{2j-1}\right))",
           [](const Ctx& c, long k) { return R(-4).pow(k) * c.Cq(c.h(), k); },
           [](const Ctx& c, long k) { return c.Cq(2 * k, k) * (R(1) - c.P() * c.Odd(k)); })
      .over("0..(p-1)/2", zero, half)
      .min_prime(3);
  reg.cong("sec6.s-sum.closed", 2, R"(-(-1)^{\frac{p-1}{2}}\frac{4p}{{p-1\choose \frac{p-1}{2}}})",
           [](const Ctx& c, long) { return sum_range(2, c.h(), [&](long k) { return s6(c, k); }); },
           [](const Ctx& c, long) {
             return -sg(c.h()) * R(4) * c.P() / c.Cq(c.p() - 1, c.h()) * (pow4_over_k(c) + pow4_over_odd(c) + R(4));
           });
  reg.cong("sec6.s-sum", 2, R"(-16p+16pq_p(2))",
           [](const Ctx& c, long) { return sum_range(2, c.h(), [&](long k) { return s6(c, k); }); },
           [](const Ctx& c, long) { return R(-16) * c.P() + R(16) * c.P() * c.q(); });
  reg.cong("sec6.boundary-a", 2, R"(16+32pq_p(2))",
           [](const Ctx& c, long) {
             const long p = c.p();
             return R(-16 * (3 * p - 1)) / R((p - 1) * (2 * p - 1)) * c.Cq(2 * p - 1, p - 1) * c.Cq(2 * p - 1, c.h()) /
                    c.Cq(p - 1, c.h());
           },
           [](const Ctx& c, long) { return R(16) + R(32) * c.P() * c.q(); });
  reg.cong("sec6.boundary-b", 3, R"(-(-1)^{\frac{p-1}{2}}(p+5p^2))",
           [](const Ctx& c, long) {
             const long p = c.p();
             return R(BigInt((3 * p + 1) * (9 * p * p - 1)), BigInt(2 * (p * p - 1)) * (p + 1)) *
                    c.Cq((3 * p - 3) / 2, c.h()) * c.Cq(p - 1, c.h());
           },
           [](const Ctx& c, long) { return -sg(c.h()) * (c.P() + R(5) * pw(c, 2)); });
  reg.cong("sec6.boundary-c", 3, R"(-3(p+4p^2-p^2q_p(2)))",
           [](const Ctx& c, long) {
             const long p = c.p();
             const R b = c.Cq(p - 1, c.h());
             return R(3 * (9 * p * p - 1)) / (pow2(3 * p - 2) * R(p - 1)) * c.Cq((3 * p - 3) / 2, c.h()) * b * b;
           },
           [](const Ctx& c, long) { return R(-3) * (c.P() + R(4) * pw(c, 2) - pw(c, 2) * c.q()); });
  reg.exact("sec6.reindex", R"(-(-1)^{\frac{p-1}{2}}\frac{p}{2^{p+3}}\sum_{k=1}^{\frac{p-1}{2}})",
            [](const Ctx& c, long) { return sum_range(1, c.h(), [&](long k) { return l6(c, k); }); },
            [](const Ctx& c, long) {
              return -sg(c.h()) * c.P() / pow2(c.p() + 3) * sum_range(1, c.h(), [&](long k) { return s6(c, k); });
            });
  reg.cong("sec6.l-sum", 3, R"(-(-1)^{\frac{p-1}{2}}(p-p^2+2p^2q_p(2)))",
           [](const Ctx& c, long) { return sum_range(1, c.h(), [&](long k) { return l6(c, k); }); },
           [](const Ctx& c, long) { return -sg(c.h()) * (c.P() - pw(c, 2) + R(2) * pw(c, 2) * c.q()); });
  reg.cong("sec6.weighted-tail", 3, R"(\frac{p}{8}+\frac{p^2}{4}+\frac{15}{128})",
           [](const Ctx& c, long) { return weighted_tail(c, c.h()); },
           [](const Ctx& c, long) { return c.P() / R(8) + pw(c, 2) / R(4) + fr(15, 128); })
      .corrected("weight denominator carries the factor 3");
  reg.cong("sec6.tail", 3, R"(-\frac{45}{8}+3p+3p^2q_p(2))",
           [](const Ctx& c, long) { return cubic_sum(c, 2, c.h()); },
           [](const Ctx& c, long) { return fr(-45, 8) + R(3) * c.P() + R(3) * pw(c, 2) * c.q(); });
}

}  // namespace wzlab::suite_detail
