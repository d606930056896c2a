#pragma once

#include <string>
#include <vector>

#include "jackstein/chains.hpp"
#include "jackstein/rational.hpp"
#include "jackstein/theta.hpp"

namespace jackstein {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty iff pass
};

struct VerifySuiteResult {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  // reported quantities that are never asserted
  bool all_pass() const;
};

// Individual checkers return an empty string on success and a witness
// (what failed, where) otherwise. They are reused by the one-shot suite,
// by unit tests, and by fault-injection tests.
std::string check_theta_orthogonality_rows(const ThetaTable& t);
std::string check_theta_orthogonality_cols(const ThetaTable& t);
std::string check_theta_special_values(const ThetaTable& t);
std::string check_row_sums(const TransitionMatrix& m);
std::string check_chain_signs(const TransitionMatrix& m);  // M, K: all >= 0; L: off-diagonal >= 0
std::string check_reversibility(const TransitionMatrix& m, const DistOverPartitions& pi);
std::string check_offdiagonal_ratio(const TransitionMatrix& m_matrix,
                                    const TransitionMatrix& l_matrix);
std::string check_toy_lumping(int n, const Rational& alpha);
std::string check_growth_coherence(int max_n, const Rational& alpha);
std::string check_measure_duality(int n, const Rational& alpha);
std::string check_w_duality(int n, const Rational& alpha);

// Literal n=3 transition matrices as rational functions of alpha, in
// canonical order [(3), (2,1), (1^3)] — regression anchors for the whole
// theta engine and chain constructions.
RationalMatrix fixture_m3(const Rational& alpha);
RationalMatrix fixture_l3(const Rational& alpha);
RationalMatrix fixture_k3(const Rational& alpha);
// The 6x6 unlumped chain at n=3, in lexicographic one-line order.
RationalMatrix fixture_t3(const Rational& alpha);
std::string check_n3_fixtures(const Rational& alpha);

// Closed forms for the 2- and 3-step probabilities of the lumped chain
// started at (1^n).
std::string check_two_step_from_identity(int n, const Rational& alpha);
std::string check_three_step_from_identity(int n, const Rational& alpha);

Rational min_l_diagonal(const TransitionMatrix& l_matrix);

// Runs every exact identity for n <= max_n over the given alpha values.
// max_n has a hard cap of 10 (the suite is meant to be quick); larger
// requests throw.
VerifySuiteResult run_verify_suite(int max_n, const std::vector<Rational>& alphas);

}  // namespace jackstein
