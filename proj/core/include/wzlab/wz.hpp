#pragma once

// The two WZ pairs as factorial-ratio terms, their certificate polynomials,
// and exact residuals of the WZ equation and its telescoped forms.

#include <array>
#include <stdexcept>
#include <vector>

#include "wzlab/exact.hpp"

namespace wzlab {

enum class WzPairId { PairA, PairB };
enum class WzSide { F, G };

/// Numerator pole order exceeds the zeros available to cancel it.
class Undefined : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Zeros and poles balance but the limit along k is not determined.
class BalancedPole : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A plain (non-factorial) denominator factor vanishes.
class PoleAtArgument : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// a*n + b*k + c
struct Affine {
  long a = 0, b = 0, c = 0;
  long at(long n, long k) const { return a * n + b * k + c; }
};

enum class SignRule { None, NPlusK, K, KPlusOne };
enum class Certificate { None, Alpha, Beta };

/// sign * cert(n,k) * prod(plain num) * prod(factorial num)
///   / (2^two_power * prod(plain den) * prod(factorial den))
struct FactorialRatioTerm {
  std::vector<Affine> num_factorials;
  std::vector<Affine> den_factorials;
  std::vector<Affine> num_plain;
  std::vector<Affine> den_plain;
  SignRule sign = SignRule::None;
  Affine two_power;
  Certificate certificate = Certificate::None;
};

const FactorialRatioTerm& term_of(WzPairId pair, WzSide side);

/// Coefficients of beta on the monomials
/// n^3, n^2 k, n k^2, k^3, n^2, n k, k^2, n, k, 1.
using BetaCoefficients = std::array<BigInt, 10>;

/// The adopted reading 22n^3+(32k-3)n^2+(10k^2+2k-3)n+k^2-k.
const BetaCoefficients& adopted_beta();
/// The display with (10n^2+2n-3)n, kept for comparison.
const BetaCoefficients& printed_beta();

BigInt certificate_poly(WzPairId pair, long n, long k);
BigInt beta_poly(const BetaCoefficients& c, long n, long k);

/// Exact value with pole-order accounting. Factorials at negative integers are
/// simple poles; vanishing plain numerator factors and certificate values are
/// simple zeros. Excess zeros give 0, excess numerator poles raise Undefined,
/// and a balanced count is resolved as the limit along k using Gamma residues.
Rational evaluate_term(const FactorialRatioTerm& t, long n, long k,
                       const BetaCoefficients* beta = nullptr);
Rational evaluate_term(WzPairId pair, WzSide side, long n, long k);

/// F(n+1,k) - F(n,k) - G(n,k+1) + G(n,k)
Rational wz_residual(WzPairId pair, long n, long k);
Rational wz_residual(const BetaCoefficients& beta, long n, long k);

/// True when the PairB evaluations behind wz_residual stay off n+k = 1.
bool wz_point_in_domain(WzPairId pair, long n, long k);

/// sum_{k<N}[F(m,k) - F(n0,k)] - sum_{n0<=n<m}[G(n,N) - G(n,0)],
/// n0 = 0 for PairA and 2 for PairB.
Rational check_telescope(WzPairId pair, long m, long N);

/// G(n,0) against its binomial closed form (PairA).
Rational g_closed_form_residual(long n);

/// g_n - 48 G'(n,0) - (t_{n+1} - t_n) for n >= 2.
Rational gb_difference_residual(long n);

enum class SummandFamily { Quartic, Cubic };

/// Rising-factorial form of a series summand minus its binomial form.
Rational summand_identity_residual(SummandFamily family, long n);

struct BetaRepair {
  bool printed_satisfies = false;
  long printed_failures = 0;
  long points_used = 0;
  long rank = 0;
  bool unique = false;
  BetaCoefficients solution;
};

/// Solves the WZ equation of PairB for the ten cubic coefficients of beta by
/// exact elimination over grid points 0 <= n, k < grid (off n+k = 1), and
/// counts how often the printed polynomial fails on the same grid.
BetaRepair repair_beta(long grid = 20);

}  // namespace wzlab
