#include "jackstein/io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace jackstein {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(fields[i]);
  }
  out += '\n';
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      any = true;
    } else if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      if (any || !field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      field.clear();
      row.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (any || !field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_to_csv(const std::vector<Partition>& index, const RationalMatrix& rows) {
  std::vector<std::string> header = {"lambda"};
  for (const auto& p : index) header.push_back(p.str());
  std::string out = csv_line(header);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> fields = {index[i].str()};
    for (const auto& v : rows[i]) fields.push_back(v.str());
    out += csv_line(fields);
  }
  return out;
}

LabeledMatrix parse_matrix_csv(const std::string& text) {
  auto rows = parse_csv(text);
  if (rows.empty()) throw std::invalid_argument("parse_matrix_csv: empty input");
  LabeledMatrix m;
  for (std::size_t j = 1; j < rows[0].size(); ++j) m.col_labels.push_back(rows[0][j]);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("parse_matrix_csv: ragged row " + std::to_string(i));
    m.row_labels.push_back(rows[i][0]);
    std::vector<Rational> vals;
    for (std::size_t j = 1; j < rows[i].size(); ++j) {
      auto v = Rational::parse(rows[i][j]);
      if (!v) throw std::invalid_argument("parse_matrix_csv: bad entry " + rows[i][j]);
      vals.push_back(std::move(*v));
    }
    m.values.push_back(std::move(vals));
  }
  return m;
}

std::string transition_matrix_to_csv(const TransitionMatrix& m) {
  return matrix_to_csv(m.index, m.rows);
}

std::string theta_table_to_csv(const ThetaTable& t) {
  return matrix_to_csv(t.index, t.values);
}

std::string dist_to_json(const DistOverPartitions& d) {
  nlohmann::ordered_json j;
  for (std::size_t i = 0; i < d.index.size(); ++i)
    j[d.index[i].str()] = d.probs[i].str();
  return j.dump(2) + "\n";
}

std::string stein_report_to_json(const SteinReport& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["alpha"] = rep.alpha.str();
  j["tau"] = rep.tau.str();
  j["term1"] = rep.term1_lambda.str();
  j["term1_w_grouped"] = rep.term1_w_grouped.str();
  if (rep.term1_formula)
    j["term1_formula"] = rep.term1_formula->str();
  else
    j["term1_formula"] = nullptr;
  j["term3_raw"] = rep.term3_raw.str();
  j["term3"] = format_double(rep.term3);
  j["bound"] = format_double(rep.bound);
  j["bound_lambda_conditioned"] = format_double(rep.bound_lambda);
  j["kolmogorov"] = format_double(rep.kolmogorov);
  return j.dump(2) + "\n";
}

std::string moment_report_to_json(const MomentReport& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["alpha"] = rep.alpha.str();
  j["r"] = rep.r;
  j["via_chain"] = rep.via_chain.str();
  j["direct"] = rep.direct.str();
  j["normalized_squared"] = rep.normalized_squared.str();
  if (rep.normalized_exact)
    j["normalized_exact"] = rep.normalized_exact->str();
  else
    j["normalized_exact"] = nullptr;
  j["normalized"] = format_double(rep.normalized);
  return j.dump(2) + "\n";
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = csv_line({"n", "alpha", "quantity", "exact", "float"});
  for (const auto& r : rows)
    out += csv_line({std::to_string(r.n), r.alpha.str(), r.quantity,
                     r.exact ? r.exact->str() : std::string{}, format_double(r.value)});
  return out;
}

}  // namespace jackstein
