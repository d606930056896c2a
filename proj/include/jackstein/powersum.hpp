#pragma once

#include <map>
#include <optional>

#include "jackstein/partition.hpp"
#include "jackstein/rational.hpp"

namespace jackstein {

// Homogeneous symmetric function of fixed degree in the power-sum basis:
// a finite map mu -> coefficient with |mu| = degree. Absent keys are 0;
// stored coefficients are nonzero.
struct PowerSumExpr {
  int degree = 0;
  std::map<Partition, Rational> coeffs;

  Rational coeff(const Partition& mu) const {
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  void add(const Partition& mu, const Rational& c);
};

// <f, g>_alpha with <p_nu, p_mu>_alpha = delta z_mu alpha^{l(mu)}.
// Throws on degree mismatch or alpha <= 0.
Rational alpha_inner(const PowerSumExpr& f, const PowerSumExpr& g, const Rational& alpha);

// p_1-perp = alpha d/dp_1: drops degree by one. Degree-0 input is
// annihilated and reported as nullopt.
std::optional<PowerSumExpr> p1_perp(const PowerSumExpr& f, const Rational& alpha);

// Multiplication by p_1 (adjoint partner of p1_perp): degree goes up by one.
PowerSumExpr multiply_by_p1(const PowerSumExpr& f);

}  // namespace jackstein
