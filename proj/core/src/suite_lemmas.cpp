#include "suite_internal.hpp"

namespace wzlab::suite_detail {

namespace {

R sum_h2k_over_k(const Ctx& c) {
  return sum_range(1, c.h(), [&](long k) { return c.H(2 * k) / R(k); });
}
R sum_k_h2k(const Ctx& c) {
  return sum_range(1, c.h(), [&](long k) { return R(k) * c.H(2 * k); });
}
R sum_h2k(const Ctx& c) {
  return sum_range(1, c.h(), [&](long k) { return c.H(2 * k); });
}
R sum_odd_h2k_sq(const Ctx& c) {
  return sum_range(1, c.h(), [&](long k) { return R(2 * k + 1) * c.H(2 * k) * c.H(2 * k); });
}
R alt_k_hk(const Ctx& c) {
  return sum_range(1, c.p() - 1, [&](long k) { return sg(k) * R(k) * c.H(k); });
}
// sum_{j<p} (-1)^j/j sum_{i<j} 1/i
R alt_double(const Ctx& c) {
  return sum_range(1, c.p() - 1, [&](long j) { return sg(j) * c.H(j - 1) / R(j); });
}
R alt_w_hk_sq(const Ctx& c) {
  return sum_range(1, c.p() - 1, [&](long k) { return sg(k) * R(k + 1) * c.H(k) * c.H(k); });
}
R alt_w_h2(const Ctx& c) {
  return sum_range(1, c.p() - 1, [&](long k) { return sg(k) * R(k + 1) * c.H2(k); });
}
R w_hk_sq(const Ctx& c) {
  return sum_range(1, c.p() - 1, [&](long k) { return R(k + 1) * c.H(k) * c.H(k); });
}
R w_h2(const Ctx& c) {
  return sum_range(1, c.p() - 1, [&](long k) { return R(k + 1) * c.H2(k); });
}

// Suffix sums T[j] = sum_{k=j}^{p-1} f(k), T[p] = 0.
std::vector<long> suffix(const Ctx& c, long (*f)(long)) {
  std::vector<long> t(c.p() + 1, 0);
  for (long k = c.p() - 1; k >= 1; --k) t[k] = t[k + 1] + f(k);
  return t;
}

}  // namespace

void add_lemma_checks(Registry& reg) {
  reg.group("lemmas");

  reg.cong("wolstenholme.h1", 2, R"(H_{p-1}\equiv 0\pmod{p^2})",
           [](const Ctx& c, long) { return c.H(c.p() - 1); },
           [](const Ctx&, long) { return R(); });
  reg.cong("wolstenholme.h2", 1, R"(H_{p-1}(2)\equiv 0\pmod{p})",
           [](const Ctx& c, long) { return c.H2(c.p() - 1); },
           [](const Ctx&, long) { return R(); });

  reg.cong("lemma2.1.a", 1, R"(\sum_{k=1}^{\frac{p-1}{2}}\frac{H_{2k}}{k}\equiv q_p(2)^2\pmod{p})",
           [](const Ctx& c, long) { return sum_h2k_over_k(c); },
           [](const Ctx& c, long) { return c.q() * c.q(); });
  reg.cong("lemma2.1.b", 2, R"(H_{\frac{p-1}{2}}\equiv -2q_p(2)+pq_p(2)^2\pmod{p^2})",
           [](const Ctx& c, long) { return c.H(c.h()); },
           [](const Ctx& c, long) { return R(-2) * c.q() + c.P() * c.q() * c.q(); });
  reg.cong("lemma2.1.c", 1, R"(H_{\frac{p-1}{2}}(2)\equiv 0\pmod{p})",
           [](const Ctx& c, long) { return c.H2(c.h()); },
           [](const Ctx&, long) { return R(); });

  reg.cong("lemma2.2.a", 2, R"(\sum_{k=1}^{\frac{p-1}{2}}kH_{2k}\equiv \frac{3p-2}{16}+\frac{2q_p(2)-pq_p(2)^2}{16}\pmod{p^2})",
           [](const Ctx& c, long) { return sum_k_h2k(c); },
           [](const Ctx& c, long) {
             const R& q = c.q();
             return fr(3 * c.p() - 2, 16) + (R(2) * q - c.P() * q * q) / R(16);
           });
  reg.cong("lemma2.2.b", 2, R"(\sum_{k=1}^{\frac{p-1}{2}}H_{2k}\equiv\frac{1-p}{2}-\frac{2q_p(2)-pq_p(2)^2}{4}\pmod{p^2})",
           [](const Ctx& c, long) { return sum_h2k(c); },
           [](const Ctx& c, long) {
             const R& q = c.q();
             return fr(1 - c.p(), 2) - (R(2) * q - c.P() * q * q) / R(4);
           });
  reg.cong("lemma2.2.c", 1, R"(\sum_{k=1}^{\frac{p-1}{2}}(2k+1)H_{2k}^2\equiv\frac{q_p(2)^2-2}{4}\pmod{p})",
           [](const Ctx& c, long) { return sum_odd_h2k_sq(c); },
           [](const Ctx& c, long) { return (c.q() * c.q() - R(2)) / R(4); });

  reg.exact("lemma2.alt-khk.closed", R"(\sum_{k=1}^{p-1}(-1)^kkH_k=\frac{(2p-1)H_{p-1}-H_{p-1}(-1)}{4})",
            [](const Ctx& c, long) { return alt_k_hk(c); },
            [](const Ctx& c, long) {
              return (R(2 * c.p() - 1) * c.H(c.p() - 1) - c.Hs(c.p() - 1)) / R(4);
            });
  reg.exact("lemma2.alt-khk.swap", R"(\sum_{j=1}^{p-1}\sum_{k=j}^{p-1}(-1)^kk)",
            [](const Ctx& c, long) { return alt_k_hk(c); },
            [](const Ctx& c, long) {
              const auto t = suffix(c, [](long k) { return sign_pow(k) * k; });
              return sum_range(1, c.p() - 1, [&](long j) { return fr(t[j], j); });
            })
      .corrected("inner sum carries the weight 1/j");
  reg.exact("lemma2.kh2k.closed", R"(\frac{(2p^2-1)H_{p-1}-H_{p-1}(-1)-2+3p-p^2}{16})",
            [](const Ctx& c, long) { return sum_k_h2k(c); },
            [](const Ctx& c, long) {
              const long p = c.p();
              return (R(2 * p * p - 1) * c.H(p - 1) - c.Hs(p - 1) + R(-2 + 3 * p - p * p)) / R(16);
            })
      .corrected("closed form of the sum of kH_{2k} for k up to (p-1)/2, not of kH_k up to p-1");
  reg.exact("lemma2.kh2k.parity", R"(\sum_{k=1}^{\frac{p-1}{2}}kH_{2k}=\frac{1}{4}\sum_{k=1}^{p-1}(1+(-1)^k)kH_k)",
            [](const Ctx& c, long) { return sum_k_h2k(c); },
            [](const Ctx& c, long) {
              return sum_range(1, c.p() - 1, [&](long k) { return R(1 + sign_pow(k)) * R(k) * c.H(k); }) /
                     R(4);
            });
  reg.exact("lemma2.alt-harmonic.split", R"(H_{p-1}(-1)=H_{\frac{p-1}{2}}-H_{p-1})",
            [](const Ctx& c, long) { return c.Hs(c.p() - 1); },
            [](const Ctx& c, long) { return c.H(c.h()) - c.H(c.p() - 1); });
  reg.cong("lemma2.alt-harmonic", 2, R"(H_{p-1}(-1)\equiv -2q_p(2)+pq_p(2)^2)",
           [](const Ctx& c, long) { return c.Hs(c.p() - 1); },
           [](const Ctx& c, long) { return R(-2) * c.q() + c.P() * c.q() * c.q(); });
  reg.cong("lemma2.alt-double", 1, R"(\sum_{j=1}^{p-1}\sum_{i=1}^{j-1}\frac{(-1)^j}{ij}\equiv q_p(2)^2)",
           [](const Ctx& c, long) { return alt_double(c); },
           [](const Ctx& c, long) { return c.q() * c.q(); });
  reg.exact("lemma2.alt-square.split", R"(H_{p-1}(-2)=\frac{1}{2}H_{\frac{p-1}{2}}(2)-H_{p-1}(2))",
            [](const Ctx& c, long) { return c.Hs2(c.p() - 1); },
            [](const Ctx& c, long) { return c.H2(c.h()) / R(2) - c.H2(c.p() - 1); });
  reg.cong("lemma2.alt-square", 1, R"(H_{p-1}(-2)\equiv 0)",
           [](const Ctx& c, long) { return c.Hs2(c.p() - 1); },
           [](const Ctx&, long) { return R(); });

  reg.exact("lemma2.alt-weighted-square.expand", R"(\sum_{k=1}^{p-1}(-1)^k(k+1)\left(H_k(2)+2\sum_{j=1}^{k}\sum_{i=1}^{j-1}\frac{1}{ij}\right))",
            [](const Ctx& c, long) { return alt_w_hk_sq(c); },
            [](const Ctx& c, long) {
              return sum_range(1, c.p() - 1, [&](long k) {
                return sg(k) * R(k + 1) * (c.H2(k) + R(2) * c.H11(k));
              });
            });
  reg.exact("lemma2.alt-weighted-square.swap", R"(2\sum_{j=1}^{p-1}\sum_{i=1}^{j}\frac{1}{ij}\sum_{k=j}^{p-1}(-1)^k(k+1))",
            [](const Ctx& c, long) { return alt_w_hk_sq(c); },
            [](const Ctx& c, long) {
              const auto u = suffix(c, [](long k) { return sign_pow(k) * (k + 1); });
              return R(2) * sum_range(1, c.p() - 1, [&](long j) { return c.H(j) / R(j) * R(u[j]); }) -
                     alt_w_h2(c);
            });
  reg.exact("lemma2.alt-weighted-square.closed", R"(\frac{1+2p}{4}\left(H_{p-1}^2+H_{p-1}(2)\right))",
            [](const Ctx& c, long) { return alt_w_hk_sq(c); },
            [](const Ctx& c, long) {
              const long p = c.p();
              const R& hp = c.H(p - 1);
              return fr(1 + 2 * p, 4) * (hp * hp + c.H2(p - 1)) +
                     (alt_double(c) + c.Hs2(p - 1)) / R(2) + c.H(c.h()) / R(2) - alt_w_h2(c);
            });
  reg.cong("lemma2.alt-weighted-square", 1, R"(\frac{q_p(2)^2}{2}-q_p(2)-\sum_{k=1}^{p-1}(-1)^k(k+1)H_k(2))",
           [](const Ctx& c, long) { return alt_w_hk_sq(c); },
           [](const Ctx& c, long) { return c.q() * c.q() / R(2) - c.q() - alt_w_h2(c); });
  reg.exact("lemma2.alt-weighted-h2.closed", R"(\frac{(1+2p)H_{p-1}(2)+H_{p-1}(-2)+2H_{p-1}(-1)}{4})",
            [](const Ctx& c, long) { return alt_w_h2(c); },
            [](const Ctx& c, long) {
              const long p = c.p();
              return (R(1 + 2 * p) * c.H2(p - 1) + c.Hs2(p - 1) + R(2) * c.Hs(p - 1)) / R(4);
            });
  reg.cong("lemma2.alt-weighted-h2", 1, R"(\sum_{k=1}^{p-1}(-1)^k(k+1)H_k(2)\equiv -q_p(2))",
           [](const Ctx& c, long) { return alt_w_h2(c); },
           [](const Ctx& c, long) { return -c.q(); });
  reg.cong("lemma2.weighted-square", 1, R"(\sum_{k=1}^{p-1}(k+1)H_k^2\equiv -\frac{1}{2}-\sum_{k=1}^{p-1}(k+1)H_k(2))",
           [](const Ctx& c, long) { return w_hk_sq(c); },
           [](const Ctx& c, long) { return fr(-1, 2) - w_h2(c); });
  reg.cong("lemma2.weighted-h2", 1, R"(\sum_{k=1}^{p-1}(k+1)H_k(2)\equiv\frac{1}{2})",
           [](const Ctx& c, long) { return w_h2(c); },
           [](const Ctx&, long) { return fr(1, 2); });
  reg.exact("lemma2.2.c.parity", R"(\frac{1}{2}\sum_{k=1}^{p-1}(k+1)(1+(-1)^k)H_k^2)",
            [](const Ctx& c, long) { return sum_odd_h2k_sq(c); },
            [](const Ctx& c, long) {
              return sum_range(1, c.p() - 1, [&](long k) {
                       return R(k + 1) * R(1 + sign_pow(k)) * c.H(k) * c.H(k);
                     }) /
                     R(2);
            });
}

}  // namespace wzlab::suite_detail
