#pragma once

#include <string>
#include <vector>

#include "jackstein/partition.hpp"
#include "jackstein/rational.hpp"
#include "jackstein/theta.hpp"

namespace jackstein {

// Exact probability vector over the partitions of n in canonical order.
struct DistOverPartitions {
  int n = 0;
  Rational alpha;
  std::vector<Partition> index;
  std::vector<Rational> probs;

  const Rational& prob(const Partition& p) const;
};

enum class ChainKind { M, L, K };

// Row-stochastic exact matrix over the partitions of n in canonical order.
// Rows sum exactly to 1. Kinds M and K are genuine chains (entries >= 0);
// kind L may have negative diagonal entries, which are reported, never
// asserted away.
struct TransitionMatrix {
  int n = 0;
  Rational alpha;
  ChainKind kind = ChainKind::M;
  std::vector<Partition> index;
  RationalMatrix rows;

  int index_of(const Partition& p) const;
};

// Jack_alpha measure of lambda: alpha^n n! / (c_lambda c'_lambda), alpha > 0.
Rational jack_measure(const Partition& lambda, const Rational& alpha);

// The whole distribution at level n; sums to 1 exactly.
DistOverPartitions jack_distribution(int n, const Rational& alpha);

// Single-box growth/shrink transitions between adjacent levels, with the
// Jack_alpha coherent family as the harmonic data. Probabilities are exact
// and computed locally from product formulas:
//   up:   lambda -> Lambda with psi'_{Lambda/lambda} c_lambda / c_Lambda
//   down: lambda -> tau    with psi'_{lambda/tau} c'_lambda / (alpha n c'_tau)
std::vector<std::pair<Partition, Rational>> up_transition(const Partition& lambda,
                                                          const Rational& alpha);
std::vector<std::pair<Partition, Rational>> down_transition(const Partition& lambda,
                                                            const Rational& alpha);

// Sparse row of the down-up chain M_alpha out of lambda (|lambda| >= 2,
// alpha >= 1): M(lambda, rho) = c'_lambda / (alpha n c_rho) *
//   sum_tau psi'_{lambda/tau} psi'_{rho/tau} c_tau / c'_tau.
std::vector<std::pair<Partition, Rational>> m_transition_row(const Partition& lambda,
                                                             const Rational& alpha);

// Full chains at level n (alpha >= 1 enforced; callers wanting alpha < 1
// are pointed at the conjugation duality).
TransitionMatrix m_chain(int n, const Rational& alpha);
TransitionMatrix l_chain(int n, const Rational& alpha, const ThetaTable& theta);
TransitionMatrix l_chain(int n, const Rational& alpha);
TransitionMatrix k_chain(int n, const Rational& alpha);

// Stationary law of the lumped Metropolis chain: the measure proportional
// to alpha^{-#cycles} on permutations, lumped to cycle types, i.e.
// (n!/z_mu) alpha^{-l(mu)} normalized.
DistOverPartitions k_stationary(int n, const Rational& alpha);

// The unlumped Metropolis chain on all n! permutations, n <= 5. Permutations
// are listed in lexicographic one-line order.
struct ToyMetropolisChain {
  int n = 0;
  Rational alpha;
  std::vector<std::vector<int>> perms;  // one-line notation, 1-based values
  RationalMatrix rows;
};

ToyMetropolisChain t_chain_toy(int n, const Rational& alpha);

// Cycle type of a permutation in one-line notation.
Partition cycle_type(const std::vector<int>& perm);

// Exact r-step distribution from a point mass.
DistOverPartitions chain_step_distribution(const TransitionMatrix& chain,
                                           const Partition& start, int steps);

struct IdentityResidual {
  Rational max_abs_diff;
  std::string witness;
};

// Compares the exact r-step K_alpha probability from (1^n) to mu against
// the spectral sum alpha^n n! sum_rho theta^rho_mu / (c_rho c'_rho)
// * ((alpha n(rho') - n(rho)) / (alpha C(n,2)))^r, for every mu.
IdentityResidual hanlon_identity_check(int n, const Rational& alpha, int r,
                                       const ThetaTable& theta);

}  // namespace jackstein
