#pragma once

#include <optional>
#include <string>

#include "jackstein/chains.hpp"
#include "jackstein/partition.hpp"
#include "jackstein/rational.hpp"
#include "jackstein/theta.hpp"

namespace jackstein {

// The central statistic. raw = alpha n(lambda') - n(lambda) is kept exact;
// normalized = raw / sqrt(alpha C(n,2)) is the reported float. Internal
// identities are always stated on raw values (or their even powers), so the
// square root never costs exactness.
struct WValue {
  Rational raw;
  double normalized = 0.0;
};

Rational w_raw(const Partition& lambda, const Rational& alpha);
WValue w_statistic(const Partition& lambda, const Rational& alpha);  // |lambda| >= 2

// Standard normal CDF via the complementary error function,
// Phi(x) = erfc(-x / sqrt(2)) / 2. absolute error well under 1e-12
// (libm erfc is correct to a few ulp); Phi(0) = 1/2 exactly.
double normal_cdf(double x);

// max over lambda of |sum_rho M(lambda,rho) raw(rho) - (1 - 2/n) raw(lambda)|,
// exactly 0 when the Stein linearity hypothesis holds.
IdentityResidual conditional_mean_eigencheck(int n, const Rational& alpha);

// Verifies that the theta column of nu is an eigenvector of both chains:
// L with eigenvalue (z_nu / (alpha^{n-l(nu)} n!)) theta^{(n-1,1)}_nu and M
// with the affine-transformed eigenvalue. Returns the max residual.
IdentityResidual general_eigencheck(const Partition& nu, const TransitionMatrix& m_matrix,
                                    const TransitionMatrix& l_matrix,
                                    const ThetaTable& theta);

// E(raw^r) through two independent routes: the r-step return probability of
// the lumped Metropolis chain at (1^n) rescaled by (alpha C(n,2))^r, and the
// direct expectation under Jack_alpha measure. Exact equality is the
// invariant. For even r the normalized moment E(W^r) is also exact.
struct MomentReport {
  int n = 0;
  Rational alpha;
  int r = 0;
  Rational via_chain;           // E(raw^r) via the chain route
  Rational direct;              // E(raw^r) directly
  Rational normalized_squared;  // E(W^r)^2 = direct^2 / (alpha C(n,2))^r
  std::optional<Rational> normalized_exact;  // E(W^r) when r is even
  double normalized = 0.0;                   // E(W^r) as float
};

MomentReport moments(int n, const Rational& alpha, int r);

// Closed form for the conditional second moment of one L-step from lambda
// (n >= 4), in terms of three theta columns of lambda.
Rational conditional_second_moment(const Partition& lambda, const ThetaTable& theta);
// Independent route: sum_rho L(lambda,rho) raw(rho)^2 / (alpha C(n,2)).
Rational conditional_second_moment_direct(const Partition& lambda,
                                          const TransitionMatrix& l_matrix);

// E(-1 + (n/4) E^lambda(W*-W)^2)^2, exactly, next to its closed form
// (3 alpha n + 2 alpha^2 - 10 alpha + 2) / (4 alpha n (n-1)); n >= 5.
struct Term1Report {
  Rational computed;
  Rational formula;
};
Term1Report stein_error_term1(int n, const Rational& alpha);

// E|raw* - raw|^3 exactly; normalized divides by (alpha C(n,2))^{3/2} at
// report time.
struct ThirdMomentReport {
  Rational raw_abs_third;
  double normalized = 0.0;
};
ThirdMomentReport stein_error_term3(int n, const Rational& alpha);

// Exact tail probabilities of the longest row and column against their
// explicit bounds: P(lambda_1 >= 2e sqrt(n/alpha)) <= alpha n^2 /
// 4^{2e sqrt(n/alpha)} and the conjugate statement.
struct TailBoundReport {
  int n = 0;
  Rational alpha;
  double row_threshold = 0.0;
  Rational row_tail;
  double row_bound = 0.0;
  bool row_ok = false;
  double col_threshold = 0.0;
  Rational col_tail;
  double col_bound = 0.0;
  bool col_ok = false;
};
TailBoundReport tail_bound_check(int n, const Rational& alpha);

// sup over atoms w of max(|F(w) - Phi(w)|, |F(w-) - Phi(w)|) where F is the
// exact CDF of normalized W under Jack_alpha measure.
double kolmogorov_distance(int n, const Rational& alpha);

// Everything Stein's bound needs, with both conditioning variants: the
// lambda-conditioned error term (which has the closed form) and the
// W-grouped term the bound actually requires; grouping partitions with
// equal raw value is exact. bound uses the W-grouped term.
struct SteinReport {
  int n = 0;
  Rational alpha;
  Rational tau;                             // 2/n
  Rational term1_lambda;                    // E(-1 + (n/4) E^lambda(W*-W)^2)^2
  Rational term1_w_grouped;                 // same with E^W
  std::optional<Rational> term1_formula;    // closed form, present for n >= 5
  Rational term3_raw;                       // E|raw*-raw|^3
  double term3 = 0.0;                       // E|W*-W|^3
  double bound = 0.0;                       // Stein upper bound (W-grouped)
  double bound_lambda = 0.0;                // assembled from the lambda variant
  double kolmogorov = 0.0;
};
SteinReport stein_upper_bound(int n, const Rational& alpha);

}  // namespace jackstein
