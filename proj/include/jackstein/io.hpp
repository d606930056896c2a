#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jackstein/chains.hpp"
#include "jackstein/stein.hpp"
#include "jackstein/theta.hpp"

namespace jackstein {

// Double formatting with 15 significant digits, locale-independent.
std::string format_double(double x);

// Minimal CSV with RFC-style quoting (fields holding commas or quotes are
// quoted; embedded quotes doubled). Partition labels contain commas, so
// label fields always round-trip through quotes.
std::string csv_escape(const std::string& field);
std::string csv_line(const std::vector<std::string>& fields);
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

// Labeled exact matrix: header row "lambda", mu labels...; one row per
// lambda with "num/den" entries.
struct LabeledMatrix {
  std::vector<std::string> col_labels;
  std::vector<std::string> row_labels;
  RationalMatrix values;
};

std::string matrix_to_csv(const std::vector<Partition>& index, const RationalMatrix& rows);
LabeledMatrix parse_matrix_csv(const std::string& text);

std::string transition_matrix_to_csv(const TransitionMatrix& m);
std::string theta_table_to_csv(const ThetaTable& t);

// {"[3]": "1/6", ...} in canonical order.
std::string dist_to_json(const DistOverPartitions& d);

// Report serialization: exact fields as "num/den" strings, real fields as
// decimals with 15 significant digits.
std::string stein_report_to_json(const SteinReport& rep);
std::string moment_report_to_json(const MomentReport& rep);

// Generic sweep row; `exact` is absent for quantities that are inherently
// floating point (distances, assembled bounds).
struct SweepRow {
  int n = 0;
  Rational alpha;
  std::string quantity;
  std::optional<Rational> exact;
  double value = 0.0;
};

// CSV with columns (n, alpha, quantity, exact, float).
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace jackstein
