#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "jackstein/chains.hpp"
#include "jackstein/rational.hpp"

namespace jackstein::cli {

enum class OutputFormat { pretty, csv, json };

struct RunConfig {
  int n = 3;
  Rational alpha = Rational(1);
  std::uint64_t seed = 0;
  long samples = 10000;
  OutputFormat format = OutputFormat::pretty;
};

// Report builders, one per subcommand. Pure functions of their arguments,
// so identical configs produce byte-identical reports; the sample report is
// additionally a pure function of the seed.
std::string render_measure(const RunConfig& config);
std::string render_chain(const RunConfig& config, ChainKind kind, int steps,
                         const Partition& start);  // steps < 0: matrix dump
std::string render_sample(const RunConfig& config, bool pairs);
std::string render_clt(const RunConfig& config, const std::vector<int>& ns);
std::string render_theta(const RunConfig& config);
// pretty/csv/json rendering of the one-shot verification suite; second
// member is the all-pass flag.
std::pair<std::string, bool> render_verify(const RunConfig& config, int max_n,
                                           const std::vector<Rational>& alphas);

// Inverse of normal_cdf by bisection; used for the approximate chi-square
// quantile printed in sample reports.
double normal_quantile(double p);

// Wilson-Hilferty approximation of the chi-square quantile; accurate to a
// few percent, which is all the printed diagnostic needs. The acceptance
// tests pin their own exact table value instead.
double chi_square_quantile_approx(int df, double p);

// Entry point behind main(): parses args (excluding argv[0]) and runs one
// subcommand. Exit status 0 on success, 1 on verification failure, 2 on
// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jackstein::cli
