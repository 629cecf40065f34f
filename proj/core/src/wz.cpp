#include "wzlab/wz.hpp"

#include <string>

#include "wzlab/combinatorics.hpp"

namespace wzlab {

namespace {

// n, k, constant
constexpr Affine kN{1, 0, 0};

const FactorialRatioTerm kPairAF{
    {{2, 2, 0}, {2, -2, -2}, {4, 0, 0}, {3, 0, 0}},
    {{1, 1, 0}, {1, 1, 0}, {2, -1, -1}, {1, -1, -1}, {1, -1, -1}, {1, 0, 0}, {1, 0, 0}, {1, 0, 0},
     {2, 1, 0}},
    {kN},
    {},
    SignRule::NPlusK,
    {12, 0, 0},
    Certificate::None};

const FactorialRatioTerm kPairAG{
    {{2, 2, 0}, {2, -2, 0}, {4, 0, 0}, {3, 0, 0}},
    {{1, 1, 0}, {1, 1, 0}, {2, -1, 1}, {1, -1, 0}, {1, -1, 0}, {1, 0, 0}, {1, 0, 0}, {1, 0, 0},
     {2, 1, 1}},
    {},
    {},
    SignRule::NPlusK,
    {12, 0, 8},
    Certificate::Alpha};

const FactorialRatioTerm kPairBF{
    {{2, 2, -2}, {3, 1, -1}, {2, 0, 0}, {0, 1, 0}},
    {{1, 1, 0}, {1, 1, 0}, {1, -1, -1}, {2, 1, -1}, {1, 0, 0}, {1, 0, 0}, {0, 2, 0}},
    {kN, {3, 3, -1}},
    {{1, 1, -1}},
    SignRule::K,
    {6, 2, 0},
    Certificate::None};

const FactorialRatioTerm kPairBG{
    {{2, 2, -3}, {3, 1, -1}, {2, 0, 0}, {0, 1, -1}},
    {{1, 1, 0}, {1, 1, 0}, {1, -1, 0}, {2, 1, 0}, {1, 0, 0}, {1, 0, 0}, {0, 2, -2}},
    {},
    {},
    SignRule::KPlusOne,
    {6, 2, 2},
    Certificate::Beta};

long monomial(int i, long n, long k) {
  switch (i) {
    case 0: return n * n * n;
    case 1: return n * n * k;
    case 2: return n * k * k;
    case 3: return k * k * k;
    case 4: return n * n;
    case 5: return n * k;
    case 6: return k * k;
    case 7: return n;
    case 8: return k;
    default: return 1;
  }
}

BigInt alpha(long n, long k) {
  const BigInt N(n), K(k);
  const BigInt K2 = K * K, N2 = N * N;
  return 16 * K2 * K2 - 128 * K2 * N2 + 688 * N2 * N2 - 76 * K2 * N + 988 * N2 * N - 16 * K2 +
         508 * N2 + 111 * N + 9;
}

bool is_odd(long x) { return (x % 2) != 0; }

}  // namespace

const FactorialRatioTerm& term_of(WzPairId pair, WzSide side) {
  if (pair == WzPairId::PairA) return side == WzSide::F ? kPairAF : kPairAG;
  return side == WzSide::F ? kPairBF : kPairBG;
}

const BetaCoefficients& adopted_beta() {
  // n^3, n^2k, nk^2, k^3, n^2, nk, k^2, n, k, 1
  static const BetaCoefficients c{22, 32, 10, 0, -3, 2, 1, -3, -1, 0};
  return c;
}

const BetaCoefficients& printed_beta() {
  // (10n^2+2n-3)n folds into 32 n^3 and -1 n^2
  static const BetaCoefficients c{32, 32, 0, 0, -1, 0, 1, -3, -1, 0};
  return c;
}

BigInt beta_poly(const BetaCoefficients& c, long n, long k) {
  BigInt s = 0;
  for (int i = 0; i < 10; ++i) s += c[i] * monomial(i, n, k);
  return s;
}

BigInt certificate_poly(WzPairId pair, long n, long k) {
  return pair == WzPairId::PairA ? alpha(n, k) : beta_poly(adopted_beta(), n, k);
}

Rational evaluate_term(const FactorialRatioTerm& t, long n, long k, const BetaCoefficients* beta) {
  // Numerator and denominator are reduced once at the end.
  BigInt num = 1;
  BigInt den = 1;
  long order = 0;
  bool determined = true;
  bool negative = false;

  for (const Affine& f : t.den_plain) {
    const long x = f.at(n, k);
    if (x == 0) {
      throw PoleAtArgument("denominator factor vanishes at (" + std::to_string(n) + ", " +
                           std::to_string(k) + ")");
    }
    den *= x;
  }
  for (const Affine& f : t.num_plain) {
    const long x = f.at(n, k);
    if (x != 0) {
      num *= x;
    } else {
      ++order;
      if (f.b == 0) determined = false;
      else num *= f.b;
    }
  }
  if (t.certificate != Certificate::None) {
    const BigInt c = t.certificate == Certificate::Alpha
                         ? alpha(n, k)
                         : beta_poly(beta ? *beta : adopted_beta(), n, k);
    if (c == 0) {
      ++order;
      determined = false;
    } else {
      num *= c;
    }
  }
  // Residue of x! = Gamma(x+1) at x = -j-1 moving with slope b in k.
  for (const Affine& f : t.num_factorials) {
    const long x = f.at(n, k);
    if (x >= 0) {
      num *= factorial(x);
    } else {
      --order;
      if (f.b == 0) {
        determined = false;
      } else {
        const long j = -x - 1;
        den *= factorial(j) * f.b;
        negative ^= is_odd(j);
      }
    }
  }
  for (const Affine& f : t.den_factorials) {
    const long x = f.at(n, k);
    if (x >= 0) {
      den *= factorial(x);
    } else {
      ++order;
      if (f.b == 0) {
        determined = false;
      } else {
        const long j = -x - 1;
        num *= factorial(j) * f.b;
        negative ^= is_odd(j);
      }
    }
  }

  if (order > 0) return Rational();
  if (order < 0) {
    throw Undefined("numerator pole excess at (" + std::to_string(n) + ", " + std::to_string(k) +
                    ")");
  }
  if (!determined) {
    throw BalancedPole("balanced pole without k-dependence at (" + std::to_string(n) + ", " +
                       std::to_string(k) + ")");
  }

  const long e = t.two_power.at(n, k);
  if (e >= 0) {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
  } else {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(-e));
  }
  switch (t.sign) {
    case SignRule::None: break;
    case SignRule::NPlusK: negative ^= is_odd(n + k); break;
    case SignRule::K: negative ^= is_odd(k); break;
    case SignRule::KPlusOne: negative ^= is_odd(k + 1); break;
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational evaluate_term(WzPairId pair, WzSide side, long n, long k) {
  return evaluate_term(term_of(pair, side), n, k);
}

bool wz_point_in_domain(WzPairId pair, long n, long k) {
  if (pair == WzPairId::PairA) return true;
  // F'(n+1,k), F'(n,k) have the factor (n+k-1) in the denominator
  return n + k != 1 && n + k != 0;
}

Rational wz_residual(WzPairId pair, long n, long k) {
  if (pair == WzPairId::PairB) return wz_residual(adopted_beta(), n, k);
  return evaluate_term(pair, WzSide::F, n + 1, k) - evaluate_term(pair, WzSide::F, n, k) -
         evaluate_term(pair, WzSide::G, n, k + 1) + evaluate_term(pair, WzSide::G, n, k);
}

Rational wz_residual(const BetaCoefficients& beta, long n, long k) {
  return evaluate_term(kPairBF, n + 1, k) - evaluate_term(kPairBF, n, k) -
         evaluate_term(kPairBG, n, k + 1, &beta) + evaluate_term(kPairBG, n, k, &beta);
}

Rational check_telescope(WzPairId pair, long m, long N) {
  const long n0 = pair == WzPairId::PairA ? 0 : 2;
  Rational r;
  for (long k = 0; k < N; ++k) {
    r += evaluate_term(pair, WzSide::F, m, k) - evaluate_term(pair, WzSide::F, n0, k);
  }
  for (long n = n0; n < m; ++n) {
    r -= evaluate_term(pair, WzSide::G, n, N) - evaluate_term(pair, WzSide::G, n, 0);
  }
  return r;
}

Rational g_closed_form_residual(long n) {
  const BigInt c2 = binomial(2 * n, n);
  Rational closed(BigInt(172 * n * n + 75 * n + 9) * c2 * c2 * c2 * binomial(3 * n, n) *
                  binomial(4 * n, 2 * n));
  closed /= Rational(2).pow(12 * n + 8);
  if (is_odd(n)) closed = -closed;
  return evaluate_term(WzPairId::PairA, WzSide::G, n, 0) - closed;
}

namespace {

Rational t_shift(long n) {
  const BigInt fn = factorial(n);
  BigInt den = fn * fn;
  den = den * den * fn * (2 * n - 1) * (n - 1);
  Rational t(BigInt(n) * n * n * factorial(2 * n) * factorial(3 * n), den);
  return t / Rational(2).pow(6 * n - 5);
}

}  // namespace

Rational gb_difference_residual(long n) {
  if (n < 2) throw std::domain_error("gb_difference_residual needs n >= 2");
  const BigInt c2 = binomial(2 * n, n);
  Rational g(BigInt(11 * n + 3) * c2 * c2 * binomial(3 * n, n));
  g /= Rational(2).pow(6 * n);
  return g - Rational(48) * evaluate_term(WzPairId::PairB, WzSide::G, n, 0) -
         (t_shift(n + 1) - t_shift(n));
}

Rational summand_identity_residual(SummandFamily family, long n) {
  const Rational ratio = Rational(27, 16).pow(n);
  const BigInt c2 = binomial(2 * n, n);
  const BigInt c3 = binomial(3 * n, n);
  const Rational one_n = pochhammer(Rational(1), n);
  if (family == SummandFamily::Quartic) {
    Rational lhs = pochhammer(Rational(1, 2), n) * pochhammer(Rational(1, 3), n) *
                   pochhammer(Rational(2, 3), n) * pochhammer(Rational(1, 4), n) *
                   pochhammer(Rational(3, 4), n) / one_n.pow(5);
    lhs *= Rational(172 * n * n + 75 * n + 9) * ratio;
    Rational rhs(BigInt(172 * n * n + 75 * n + 9) * c2 * c2 * c2 * c3 * binomial(4 * n, 2 * n));
    rhs /= Rational(2).pow(12 * n);
    if (is_odd(n)) {
      lhs = -lhs;
      rhs = -rhs;
    }
    return lhs - rhs;
  }
  Rational lhs = pochhammer(Rational(1, 2), n) * pochhammer(Rational(1, 3), n) *
                 pochhammer(Rational(2, 3), n) / one_n.pow(3);
  lhs *= Rational(11 * n + 3) * ratio;
  Rational rhs(BigInt(11 * n + 3) * c2 * c2 * c3);
  rhs /= Rational(64).pow(n);
  return lhs - rhs;
}

namespace {

// Exact row reduction; returns rank and fills x when the system has full column rank.
long solve_exact(std::vector<std::vector<mpq_class>> rows, std::size_t cols, std::vector<mpq_class>& x) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const mpq_class lead = rows[rank][c];
    for (auto& v : rows[rank]) v /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c];
      for (std::size_t j = c; j <= cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  // inconsistent rows leave a nonzero right-hand side with zero coefficients
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][cols] != 0) return -1;
  }
  x.assign(cols, 0);
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = rows[i][cols];
  return static_cast<long>(rank);
}

}  // namespace

BetaRepair repair_beta(long grid) {
  BetaRepair out;
  FactorialRatioTerm bare = kPairBG;
  bare.certificate = Certificate::None;

  std::vector<std::vector<mpq_class>> rows;
  for (long n = 0; n < grid; ++n) {
    for (long k = 0; k < grid; ++k) {
      if (!wz_point_in_domain(WzPairId::PairB, n, k)) continue;
      try {
        if (wz_residual(printed_beta(), n, k) != Rational()) ++out.printed_failures;
      } catch (const std::domain_error&) {
        ++out.printed_failures;
      }
      Rational r0, r1;
      try {
        r0 = evaluate_term(bare, n, k);
        r1 = evaluate_term(bare, n, k + 1);
      } catch (const std::domain_error&) {
        continue;
      }
      const Rational rhs = evaluate_term(kPairBF, n + 1, k) - evaluate_term(kPairBF, n, k);
      std::vector<mpq_class> row(11);
      bool nonzero = false;
      for (int i = 0; i < 10; ++i) {
        const Rational coeff = Rational(monomial(i, n, k + 1)) * r1 - Rational(monomial(i, n, k)) * r0;
        row[i] = coeff.raw();
        nonzero = nonzero || !coeff.is_zero();
      }
      row[10] = rhs.raw();
      if (!nonzero && rhs.is_zero()) continue;
      rows.push_back(std::move(row));
    }
  }
  out.printed_satisfies = out.printed_failures == 0;
  out.points_used = static_cast<long>(rows.size());

  std::vector<mpq_class> x;
  out.rank = solve_exact(rows, 10, x);
  out.unique = out.rank == 10;
  if (out.unique) {
    for (int i = 0; i < 10; ++i) {
      if (x[i].get_den() != 1) {
        out.unique = false;
        break;
      }
      out.solution[i] = x[i].get_num();
    }
  }
  return out;
}

}  // namespace wzlab
