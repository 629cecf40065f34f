#include "suite_internal.hpp"
#include "wzlab/wz.hpp"

namespace wzlab::suite_detail {

namespace {

long lo_last(const Ctx& c) { return (c.p() - 3) / 2; }

R gs(const Ctx& c, long k) { return terms::g_star(c, k); }

R low_piece(const Ctx& c) { return sum_range(1, lo_last(c), [&](long k) { return gs(c, k); }); }
R high_piece(const Ctx& c) { return sum_range((c.p() + 1) / 2, c.p() - 2, [&](long k) { return gs(c, k); }); }

R lo_sum(const Ctx& c, const std::function<R(long)>& f) { return sum_range(1, lo_last(c), f); }

R odd_sum(const Ctx& c) { return lo_sum(c, [](long k) { return fr(1, 2 * k + 1); }); }
R odd_sq_sum(const Ctx& c) { return lo_sum(c, [](long k) { return fr(1, (2 * k + 1) * (2 * k + 1)); }); }
R harm_odd(const Ctx& c) { return lo_sum(c, [&](long k) { return c.H(k) / R(2 * k + 1); }); }
R harm_odd_shift(const Ctx& c) { return lo_sum(c, [&](long k) { return c.H(2 * k - 1) / R(2 * k + 1); }); }

}  // namespace

void add_full_checks(Registry& reg) {
  reg.group("full");

  reg.exact("sec4.telescope", R"(\sum_{k=0}^{p-1}F(p,k)=-\sum_{n=0}^{p-1}G(n,0))",
            [](const Ctx& c, long) {
              return sum_range(0, c.p() - 1, [&](long k) {
                return evaluate_term(WzPairId::PairA, WzSide::F, c.p(), k);
              });
            },
            [](const Ctx& c, long) {
              return -sum_range(0, c.p() - 1, [&](long n) {
                return evaluate_term(WzPairId::PairA, WzSide::G, n, 0);
              });
            })
      .tag("wz");
  reg.exact("sec4.f-closed", R"(F(p,k)=-\frac{(-1)^kp(2p-k)}{2^{12p}})",
            [](const Ctx& c, long k) { return evaluate_term(WzPairId::PairA, WzSide::F, c.p(), k); },
            [](const Ctx& c, long k) {
              const long p = c.p();
              return -sg(k) * R(p * (2 * p - k)) / pow2(12 * p) * c.Cq(3 * p, p) * c.Cq(2 * p, p) *
                     c.Cq(2 * p + 2 * k, p + k) * c.Cq(2 * p - 2 * k - 2, p - k - 1) * c.Cq(4 * p, 2 * p + k);
            })
      .over("0..p-1", zero, p_m1)
      .corrected("no factor 6k")
      .tag("wz");
  reg.exact("sec4.reduction", R"(\frac{2^8p}{2^{12p}}{3p\choose p}{2p\choose p})",
            [](const Ctx& c, long) {
              return sum_range(0, c.p() - 1, [&](long k) { return terms::quartic(c, k); });
            },
            [](const Ctx& c, long) {
              const long p = c.p();
              return R(256 * p) / pow2(12 * p) * c.Cq(3 * p, p) * c.Cq(2 * p, p) * terms::full_inner(c);
            })
      .tag("reduction");
  reg.exact("sec4.split.piece-sum", R"(\sum_{k=1}^{\frac{p-3}{2}}+\sum_{k=\frac{p+1}{2}}^{p-2})",
            [](const Ctx& c, long) { return terms::full_inner(c); },
            [](const Ctx& c, long) {
              return low_piece(c) + high_piece(c) + gs(c, 0) + gs(c, c.h()) + gs(c, c.p() - 1);
            })
      .tag("reduction");

  reg.cong("sec4.binomial-4p", 3, R"({4p\choose 2p+k}\equiv\frac{12p}{p-k})",
           [](const Ctx& c, long k) { return c.Cq(4 * c.p(), 2 * c.p() + k); },
           [](const Ctx& c, long k) {
             const long p = c.p();
             const R P = c.P();
             return R(12 * p) / R(p - k) * (R(1) + R(3) * P * c.H(p - 1)) *
                    (R(1) + R(2) * P * (c.H(p - 1) - c.H(k))) / (R(1) + P * c.H(p - k)) * c.Cq(p - 1, k);
           })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec4.central-2p-minus", 3, R"({2p-2k\choose p-k}\equiv -\frac{2p}{k{2k\choose k}})",
           [](const Ctx& c, long k) { return c.Cq(2 * c.p() - 2 * k, c.p() - k); },
           [](const Ctx& c, long k) {
             const R P = c.P();
             return -R(2) * P / (R(k) * c.Cq(2 * k, k)) *
                    (R(1) - R(2) * P * c.H(k - 1) + R(2) * P * c.H(2 * k - 1));
           })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec4.central-2p-plus", 2, R"({2p+2k\choose p+k}\equiv\frac{(-1)^k2p}{(2k+1){p+k\choose 2k+1}})",
           [](const Ctx& c, long k) { return c.Cq(2 * c.p() + 2 * k, c.p() + k); },
           [](const Ctx& c, long k) {
             const long p = c.p();
             const R P = c.P();
             return sg(k) * R(2) * P / (R(2 * k + 1) * c.Cq(p + k, 2 * k + 1)) *
                    (R(1) + R(2) * P * c.H(2 * k) - R(2) * P * c.H(p - k - 1));
           })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec4.binomial-pk", 3, R"({p+k\choose 2k+1}\equiv\frac{(-1)^kp}{(2k+1){2k\choose k}})",
           [](const Ctx& c, long k) { return c.Cq(c.p() + k, 2 * k + 1); },
           [](const Ctx& c, long k) { return sg(k) * c.P() / (R(2 * k + 1) * c.Cq(2 * k, k)); })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec4.piece-term", 4, R"(-\frac{24p^2}{k}\left(1-2pH_{p-1-k}-pH_{p-k}-5pH_k+4pH_{2k-1}+\frac{3p}{k}\right))",
           [](const Ctx& c, long k) {
             const long p = c.p();
             return sg(k) * fr(p - k, 2) * c.Cq(2 * p + 2 * k, p + k) * c.Cq(2 * p - 2 * k, p - k) *
                    c.Cq(4 * p, 2 * p + k);
           },
           [](const Ctx& c, long k) {
             const long p = c.p();
             const R P = c.P();
             return -R(24) * pw(c, 2) / R(k) *
                    (R(1) - R(2) * P * c.H(p - 1 - k) - P * c.H(p - k) - R(5) * P * c.H(k) +
                     R(4) * P * c.H(2 * k - 1) + fr(3 * p, k));
           })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec4.weight", 2, R"(\frac{2p-k}{2p-2k-1}\equiv\frac{2kp}{(2k+1)^2}-\frac{2p-k}{2k+1})",
           [](const Ctx& c, long k) { return fr(2 * c.p() - k, 2 * c.p() - 2 * k - 1); },
           [](const Ctx& c, long k) {
             const long p = c.p();
             return fr(2 * k * p, (2 * k + 1) * (2 * k + 1)) - fr(2 * p - k, 2 * k + 1);
           })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec4.harmonic-reflect", 1, R"(H_{p-1-k}\equiv H_k\pmod{p})",
           [](const Ctx& c, long k) { return c.H(c.p() - 1 - k); },
           [](const Ctx& c, long k) { return c.H(k); })
      .over("0..p-1", zero, p_m1);
  reg.cong("sec4.low-piece", 4, R"(-48p^3H_{\frac{p-3}{2}}+(96p^3-24p^2)\sum_{k=1}^{\frac{p-3}{2}}\frac{1}{2k+1})",
           [](const Ctx& c, long) { return low_piece(c); },
           [](const Ctx& c, long) {
             const R p2 = pw(c, 2);
             const R p3 = pw(c, 3);
             return R(-48) * p3 * c.H(lo_last(c)) + (R(96) * p3 - R(24) * p2) * odd_sum(c) -
                    R(48) * p3 * odd_sq_sum(c) + R(192) * p3 * harm_odd(c) - R(96) * p3 * harm_odd_shift(c);
           });
  reg.exact("sec4.high-piece.reindex", R"(\frac{(p+1+k)(2p-k)}{2(4p-2k-1)}{4p-2k\choose 2p-k}{2k\choose k}{4p\choose p+1+k})",
            [](const Ctx& c, long) { return high_piece(c); },
            [](const Ctx& c, long) {
              const long p = c.p();
              return lo_sum(c, [&](long k) {
                return sg(k) * R(BigInt((p + 1 + k) * (2 * p - k)), BigInt(2 * (4 * p - 2 * k - 1))) *
                       c.Cq(4 * p - 2 * k, 2 * p - k) * c.Cq(2 * k, k) * c.Cq(4 * p, p + 1 + k);
              });
            });
  reg.cong("sec4.binomial-4p-shift", 3, R"({4p\choose p+1+k}\equiv\frac{(-1)^k12p}{k+1})",
           [](const Ctx& c, long k) { return c.Cq(4 * c.p(), c.p() + 1 + k); },
           [](const Ctx& c, long k) {
             const long p = c.p();
             const R P = c.P();
             return sg(k) * fr(12 * p, k + 1) * (R(1) + R(3) * P * c.H(p - 1)) * (R(1) - R(3) * P * c.H(k)) /
                    (R(1) + P * c.H(k + 1));
           })
      .over("1..(p-3)/2", one, lo_last)
      .corrected("middle factor is (1-3pH_k)");
  reg.exact("sec4.ratio.exact", R"({4p-2k\choose 2p-k}{2k\choose k}=\frac{{4p\choose 2p}{2p\choose k}^2}{{4p\choose 2k}})",
            [](const Ctx& c, long k) { return c.Cq(4 * c.p() - 2 * k, 2 * c.p() - k) * c.Cq(2 * k, k); },
            [](const Ctx& c, long k) {
              const long p = c.p();
              const R b = c.Cq(2 * p, k);
              return c.Cq(4 * p, 2 * p) * b * b / c.Cq(4 * p, 2 * k);
            })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec4.ratio", 3, R"(-{4p\choose 2p}\frac{2p}{k})",
           [](const Ctx& c, long k) { return c.Cq(4 * c.p() - 2 * k, 2 * c.p() - k) * c.Cq(2 * k, k); },
           [](const Ctx& c, long k) {
             const long p = c.p();
             const R P = c.P();
             const R a = c.H(p - 1) - c.H(p - k);
             const R b = c.H(p - 1) - c.H(p - 2 * k);
             const R x = R(1) + P * a;
             const R y = R(1) - P * c.H(k - 1);
             return -c.Cq(4 * p, 2 * p) * R(2) * P * x * x * y * y /
                    (R(k) * (R(1) + R(3) * P * b) * (R(1) - P * c.H(2 * k - 1)));
           })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec4.high-term", 4, R"(-\frac{24p^2}{k(k+1)}\left(1+4pH_{2k-1}-8pH_{k-1}-\frac{4p}{k}-\frac{p}{k+1}\right))",
           [](const Ctx& c, long k) {
             const long p = c.p();
             return sg(k) * c.Cq(4 * p, p + 1 + k) * c.Cq(4 * p - 2 * k, 2 * p - k) * c.Cq(2 * k, k) /
                    c.Cq(4 * p, 2 * p);
           },
           [](const Ctx& c, long k) {
             const long p = c.p();
             const R P = c.P();
             return -R(24) * pw(c, 2) / R(k * (k + 1)) *
                    (R(1) + R(4) * P * c.H(2 * k - 1) - R(8) * P * c.H(k - 1) - fr(4 * p, k) - fr(p, k + 1));
           })
      .over("1..(p-3)/2", one, lo_last)
      .note("read termwise in k");
  reg.cong("sec4.central-4p", 3, R"({4p\choose 2p}\equiv 6)",
           [](const Ctx& c, long) { return c.Cq(4 * c.p(), 2 * c.p()); },
           [](const Ctx&, long) { return R(6); });
  reg.cong("sec4.high-weight", 2, R"(\frac{(p+1+k)(2p-k)}{4p-2k-1})",
           [](const Ctx& c, long k) {
             const long p = c.p();
             return R(BigInt((p + 1 + k) * (2 * p - k)), BigInt(4 * p - 2 * k - 1));
           },
           [](const Ctx& c, long k) {
             const long o = 2 * k + 1;
             return -c.P() * (fr(3, 2 * o) + fr(1, o * o) - fr(1, 2)) + fr(o, 4) - fr(1, 4 * o);
           })
      .over("1..(p-3)/2", one, lo_last);
  reg.cong("sec4.high-piece", 4, R"(72(4p^3-p^2)\sum_{k=1}^{\frac{p-3}{2}}\frac{1}{1+2k})",
           [](const Ctx& c, long) { return high_piece(c); },
           [](const Ctx& c, long) {
             const R p2 = pw(c, 2);
             const R p3 = pw(c, 3);
             return R(72) * (R(4) * p3 - p2) * odd_sum(c) - R(288) * p3 * odd_sq_sum(c) -
                    R(144) * p3 * c.H(lo_last(c)) - R(288) * p3 * harm_odd_shift(c) + R(576) * p3 * harm_odd(c);
           });
  reg.exact("sec4.odd-sum.reflect", R"(\sum_{k=1}^{\frac{p-3}{2}}\frac{1}{1+2k}=\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{p-2k}-1)",
            [](const Ctx& c, long) { return odd_sum(c); },
            [](const Ctx& c, long) {
              return sum_range(1, c.h(), [&](long k) { return fr(1, c.p() - 2 * k); }) - R(1);
            });
  reg.cong("sec4.odd-sum", 2, R"(q_p(2)-\frac{p}{2}q_p(2)^2-1)",
           [](const Ctx& c, long) { return odd_sum(c); },
           [](const Ctx& c, long) { return c.q() - c.P() / R(2) * c.q() * c.q() - R(1); });
  reg.exact("sec4.odd-square-sum.reflect", R"(\sum_{k=1}^{\frac{p-3}{2}}\frac{1}{(1+2k)^2})",
            [](const Ctx& c, long) { return odd_sq_sum(c); },
            [](const Ctx& c, long) {
              return sum_range(1, c.h(), [&](long k) {
                       const long d = c.p() - 2 * k;
                       return fr(1, d * d);
                     }) -
                     R(1);
            });
  reg.cong("sec4.odd-square-sum", 1, R"(\sum_{k=1}^{\frac{p-3}{2}}\frac{1}{(1+2k)^2}\equiv -1)",
           [](const Ctx& c, long) { return odd_sq_sum(c); },
           [](const Ctx&, long) { return R(-1); });
  reg.cong("sec4.harmonic-half-reflect", 1, R"(H_{\frac{p-1}{2}-k}\equiv H_{\frac{p-1}{2}}+2H_{2k}-H_k)",
           [](const Ctx& c, long k) { return c.H(c.h() - k); },
           [](const Ctx& c, long k) { return c.H(c.h()) + R(2) * c.H(2 * k) - c.H(k); })
      .over("0..(p-1)/2", zero, half);
  reg.cong("sec4.harmonic-over-k", 1, R"(\sum_{k=1}^{\frac{p-1}{2}}\frac{H_k}{k}\equiv 2q_p(2)^2)",
           [](const Ctx& c, long) {
             return sum_range(1, c.h(), [&](long k) { return c.H(k) / R(k); });
           },
           [](const Ctx& c, long) { return R(2) * c.q() * c.q(); });
  reg.exact("sec4.harmonic-odd.reflect", R"(\sum_{k=1}^{\frac{p-1}{2}}\frac{H_{\frac{p-1}{2}-k}}{p-2k})",
            [](const Ctx& c, long) { return harm_odd(c); },
            [](const Ctx& c, long) {
              return sum_range(1, c.h(), [&](long k) { return c.H(c.h() - k) / R(c.p() - 2 * k); });
            });
  reg.cong("sec4.harmonic-odd", 1, R"(\sum_{k=1}^{\frac{p-3}{2}}\frac{H_k}{2k+1}\equiv -2q_p(2)^2)",
           [](const Ctx& c, long) { return harm_odd(c); },
           [](const Ctx& c, long) { return R(-2) * c.q() * c.q(); });
  reg.exact("sec4.harmonic-odd-shift.reflect", R"(\sum_{k=1}^{\frac{p-1}{2}}\frac{H_{p-1-2k}}{p-2k})",
            [](const Ctx& c, long) { return harm_odd_shift(c); },
            [](const Ctx& c, long) {
              const long p = c.p();
              return sum_range(1, c.h(), [&](long k) { return c.H(p - 1 - 2 * k) / R(p - 2 * k); }) + odd_sum(c) -
                     c.H(c.h()) / R(2) + fr(1, p - 1);
            });
  reg.cong("sec4.harmonic-odd-shift", 1, R"(2q_p(2)-\frac{q_p(2)^2}{2}-2)",
           [](const Ctx& c, long) { return harm_odd_shift(c); },
           [](const Ctx& c, long) { return R(2) * c.q() - c.q() * c.q() / R(2) - R(2); });
  reg.cong("sec4.binomial-4p-mid", 4, R"({4p\choose \frac{5p-1}{2}})",
           [](const Ctx& c, long) { return c.Cq(4 * c.p(), (5 * c.p() - 1) / 2); },
           [](const Ctx& c, long) {
             const R P = c.P();
             const R& q = c.q();
             return c.Cq(c.p() - 1, c.h()) *
                    (R(24) * P - R(72) * pw(c, 2) + R(216) * pw(c, 3) + (R(144) * pw(c, 2) - R(432) * pw(c, 3)) * q +
                     R(360) * pw(c, 3) * q * q);
           });
  reg.cong("sec4.central-3p", 3, R"({3p-1\choose \frac{3p-1}{2}})",
           [](const Ctx& c, long) { return c.Cq(3 * c.p() - 1, (3 * c.p() - 1) / 2); },
           [](const Ctx& c, long) {
             const R& q = c.q();
             return R(2) * c.Cq(c.p() - 1, c.h()) *
                    (R(1) + R(4) * c.P() * q + R(6) * pw(c, 2) * q * q);
           });
  reg.cong("sec4.binomial-4p-p", 3, R"({4p\choose p}\equiv 2{2p\choose p})",
           [](const Ctx& c, long) { return c.Cq(4 * c.p(), c.p()); },
           [](const Ctx& c, long) { return R(2) * c.Cq(2 * c.p(), c.p()); });
  reg.cong("sec4.central-2p", 3, R"(2{2p\choose p}\equiv 4{2p-1\choose p-1})",
           [](const Ctx& c, long) { return R(2) * c.Cq(2 * c.p(), c.p()); },
           [](const Ctx& c, long) { return R(4) * c.Cq(2 * c.p() - 1, c.p() - 1); });
  reg.cong("sec4.binomial-2p1", 3, R"(4{2p-1\choose p-1}\equiv 4)",
           [](const Ctx& c, long) { return R(4) * c.Cq(2 * c.p() - 1, c.p() - 1); },
           [](const Ctx&, long) { return R(4); });
  reg.cong("sec4.piece-zero", 4, R"(-24p^2(1+2p))",
           [](const Ctx& c, long) { return gs(c, 0); },
           [](const Ctx& c, long) { return R(-24) * pw(c, 2) * (R(1) + R(2) * c.P()); });
  reg.cong("sec4.piece-last", 4, R"(-72p^2(1+4p))",
           [](const Ctx& c, long) { return gs(c, c.p() - 1); },
           [](const Ctx& c, long) { return R(-72) * pw(c, 2) * (R(1) + R(4) * c.P()); });
  reg.cong("sec4.piece-middle", 4, R"(2^{6(p-1)}(24p+240p^2q_p(2)+1080p^3q_p(2)^2))",
           [](const Ctx& c, long) { return gs(c, c.h()); },
           [](const Ctx& c, long) {
             const R& q = c.q();
             return pow2(6 * (c.p() - 1)) *
                    (R(24) * c.P() + R(240) * pw(c, 2) * q + R(1080) * pw(c, 3) * q * q);
           });
  reg.cong("sec4.inner", 4, R"(24p+288p^2q_p(2)+1584p^3q_p(2)^2)",
           [](const Ctx& c, long) { return sum_range(0, c.p() - 1, [&](long k) { return gs(c, k); }); },
           [](const Ctx& c, long) {
             const R& q = c.q();
             return R(24) * c.P() + R(288) * pw(c, 2) * q + R(1584) * pw(c, 3) * q * q;
           });
  reg.cong("sec4.binomial-product", 3, R"({3p\choose p}{2p\choose p}\equiv 6)",
           [](const Ctx& c, long) { return c.Cq(3 * c.p(), c.p()) * c.Cq(2 * c.p(), c.p()); },
           [](const Ctx&, long) { return R(6); });
}

}  // namespace wzlab::suite_detail
