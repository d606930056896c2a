#pragma once

#include <string>
#include <vector>

#include "jackstein/partition.hpp"
#include "jackstein/powersum.hpp"
#include "jackstein/rational.hpp"

namespace jackstein {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Power-sum coefficient table of the Jack polynomials of degree n at a
// fixed rational alpha: values[i][j] is the coefficient of p_{mu_j} in
// J_{lambda_i}, with both indices in canonical partition order. The
// monomial coefficients of each J are kept alongside (monomial[i][j] is
// the coefficient of m_{mu_j} in J_{lambda_i}); they are a by-product of
// the construction and let callers check triangularity.
struct ThetaTable {
  int n = 0;
  Rational alpha;
  std::vector<Partition> index;
  RationalMatrix values;
  RationalMatrix monomial;

  int index_of(const Partition& p) const;
  const Rational& theta(const Partition& lambda, const Partition& mu) const;
  PowerSumExpr jack_in_power_sums(const Partition& lambda) const;
};

// Row mu: expansion of p_mu in the monomial basis (nonnegative integers),
// canonical order both ways.
RationalMatrix p_to_m_expansion(int n);

struct MonomialToPowerSum {
  int n = 0;
  RationalMatrix matrix;  // row mu: m_mu in the power-sum basis
};

// Exact inverse of p_to_m_expansion(n).
MonomialToPowerSum m_to_p_expansion(int n);

// Builds the theta table: Gram-Schmidt over the monomial basis (in
// power-sum coordinates) along the canonical order, which linearly extends
// dominance, under <.,.>_alpha; each row is then rescaled so the
// coefficient of p_{(1^n)} is exactly 1.
ThetaTable jack_theta_table(int n, const Rational& alpha);

struct PieriResidual {
  Rational max_abs_diff;  // exactly 0 when the identity holds
  std::string witness;    // empty on success
};

// Checks p1_perp(J_lambda) = sum_tau (c'_lambda psi'_{lambda/tau} / c'_tau) J_tau
// for every lambda of size n, comparing power-sum coefficients computed
// through the two independent routes.
PieriResidual verify_p1perp_pieri(int n, const Rational& alpha);

}  // namespace jackstein
