#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "jackstein/cli.hpp"
#include "jackstein/io.hpp"
#include "jackstein/stein.hpp"
#include "jackstein/theta.hpp"

using namespace jackstein;
using cli::OutputFormat;
using cli::RunConfig;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("csv quoting round trip") {
  std::vector<std::vector<std::string>> rows = {
      {"lambda", "[2,1]", "[1,1,1]"},
      {"[2,1]", "1/2", "he said \"hi\""},
  };
  std::string text;
  for (const auto& r : rows) text += csv_line(r);
  CHECK(parse_csv(text) == rows);
}

TEST_CASE("matrix csv round trip is exact") {
  auto m = m_chain(4, Rational(3, 2));
  auto parsed = parse_matrix_csv(transition_matrix_to_csv(m));
  REQUIRE(parsed.values.size() == m.rows.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    CHECK(parsed.row_labels[i] == m.index[i].str());
    CHECK(parsed.col_labels[i] == m.index[i].str());
    for (std::size_t j = 0; j < m.rows[i].size(); ++j)
      CHECK(parsed.values[i][j] == m.rows[i][j]);
  }

  auto t = jack_theta_table(5, Rational(2));
  auto parsed_t = parse_matrix_csv(theta_table_to_csv(t));
  for (std::size_t i = 0; i < t.values.size(); ++i)
    for (std::size_t j = 0; j < t.values[i].size(); ++j)
      CHECK(parsed_t.values[i][j] == t.values[i][j]);
}

TEST_CASE("distribution json export") {
  auto d = jack_distribution(3, Rational(1));
  std::string j = dist_to_json(d);
  CHECK(j.find("\"[3]\": \"1/6\"") != std::string::npos);
  CHECK(j.find("\"[2,1]\": \"2/3\"") != std::string::npos);
  CHECK(j.find("\"[1,1,1]\": \"1/6\"") != std::string::npos);
}

TEST_CASE("measure report") {
  RunConfig config;
  config.n = 3;
  config.format = OutputFormat::csv;
  auto rows = parse_csv(cli::render_measure(config));
  REQUIRE(rows.size() == 5);  // header + three shapes + total
  CHECK(rows[1][0] == "[3]");
  CHECK(rows[1][1] == "1/6");
  CHECK(rows[2][1] == "2/3");
  CHECK(rows[3][1] == "1/6");
  CHECK(rows[4][0] == "total");
  CHECK(rows[4][1] == "1");

  config.n = 5;
  config.alpha = Rational(2);
  rows = parse_csv(cli::render_measure(config));
  bool found = false;
  for (const auto& r : rows)
    if (r[0] == "[3,2]") {
      CHECK(r[1] == "2/21");
      found = true;
    }
  CHECK(found);

  config.n = 0;
  config.alpha = Rational(1);
  rows = parse_csv(cli::render_measure(config));
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][0] == "[]");
  CHECK(rows[1][1] == "1");
}

TEST_CASE("chain reports") {
  RunConfig config;
  config.n = 3;
  config.alpha = Rational(2);
  config.format = OutputFormat::csv;

  auto rows = parse_csv(cli::render_chain(config, ChainKind::M, -1, Partition()));
  REQUIRE(rows.size() == 4);
  CHECK(rows[1][0] == "[3]");
  CHECK(rows[1][1] == "1/5");
  CHECK(rows[1][2] == "4/5");
  CHECK(rows[1][3] == "0");

  // canonical order [(3), (2,1), (1^3)]: the K row out of [3] holds with
  // probability 1 - 1/alpha and otherwise moves to [2,1]
  rows = parse_csv(cli::render_chain(config, ChainKind::K, -1, Partition()));
  CHECK(rows[1][0] == "[3]");
  CHECK(rows[1][1] == "1/2");
  CHECK(rows[1][2] == "1/2");
  CHECK(rows[1][3] == "0");

  RunConfig c4;
  c4.n = 4;
  c4.alpha = Rational(1);
  c4.format = OutputFormat::csv;
  rows = parse_csv(cli::render_chain(c4, ChainKind::K, 2, P({1, 1, 1, 1})));
  bool found = false;
  for (const auto& r : rows)
    if (r[0] == "[1,1,1,1]") {
      CHECK(r[1] == "1/6");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("sample reports are byte-identical for equal seeds") {
  RunConfig config;
  config.n = 4;
  config.alpha = Rational(2);
  config.seed = 777;
  config.samples = 2000;
  auto first = cli::render_sample(config, false);
  auto second = cli::render_sample(config, false);
  CHECK(first == second);
  config.seed = 778;
  CHECK(cli::render_sample(config, false) != first);

  config.samples = 500;
  auto pairs_report = cli::render_sample(config, true);
  CHECK(pairs_report.find("pair") != std::string::npos);
}

TEST_CASE("theta dump matches the table") {
  RunConfig config;
  config.n = 4;
  config.alpha = Rational(3, 2);
  auto parsed = parse_matrix_csv(cli::render_theta(config));
  auto table = jack_theta_table(4, Rational(3, 2));
  for (std::size_t i = 0; i < table.values.size(); ++i)
    for (std::size_t j = 0; j < table.values[i].size(); ++j)
      CHECK(parsed.values[i][j] == table.values[i][j]);
}

TEST_CASE("clt sweep table") {
  RunConfig config;
  config.alpha = Rational(1);
  config.format = OutputFormat::csv;
  auto rows = parse_csv(cli::render_clt(config, {2, 4}));
  REQUIRE(rows.size() == 3);
  double d2 = std::stod(rows[1][2]);
  CHECK(d2 == doctest::Approx(0.3413).epsilon(1e-3));
  double bound2 = std::stod(rows[1][3]);
  CHECK(bound2 >= d2);
}

TEST_CASE("cli exit codes") {
  std::string out, err;
  CHECK(run_cli({"measure", "-n", "3", "--alpha", "1"}, &out) == 0);
  CHECK(out.find("1/6") != std::string::npos);

  CHECK(run_cli({"measure", "-n", "3", "--alpha", "zebra"}, &out, &err) == 2);
  CHECK(err.find("alpha") != std::string::npos);

  CHECK(run_cli({"measure", "-n", "3", "--alpha", "-2"}, &out, &err) == 2);
  CHECK(run_cli({"bogus"}, &out, &err) == 2);
  CHECK(run_cli({"chain", "-n", "3", "--alpha", "1/2", "--kind", "M"}, &out, &err) == 2);
  CHECK(err.find("duality") != std::string::npos);

  CHECK(run_cli({"verify", "-n", "11"}, &out, &err) == 2);
  CHECK(run_cli({"--help"}, &out, &err) == 0);

  CHECK(run_cli({"chain", "-n", "3", "--alpha", "2", "--kind", "K", "--steps", "2",
                 "--start", "[1,1,1]"},
                &out) == 0);
}

TEST_CASE("report serialization") {
  auto stein = stein_upper_bound(6, Rational(2));
  std::string j = stein_report_to_json(stein);
  CHECK(j.find("\"tau\": \"1/3\"") != std::string::npos);
  CHECK(j.find("\"term1\": \"" + stein.term1_lambda.str() + "\"") != std::string::npos);
  CHECK(j.find("\"term1_formula\": \"" + stein.term1_formula->str() + "\"") !=
        std::string::npos);
  CHECK(j.find("\"kolmogorov\"") != std::string::npos);

  auto mom = moments(5, Rational(2), 3);
  j = moment_report_to_json(mom);
  CHECK(j.find("\"via_chain\": \"" + mom.via_chain.str() + "\"") != std::string::npos);
  CHECK(j.find("\"normalized_exact\": null") != std::string::npos);

  std::vector<SweepRow> rows;
  rows.push_back({6, Rational(2), "term3_raw", stein.term3_raw, stein.term3});
  rows.push_back({6, Rational(2), "kolmogorov", std::nullopt, stein.kolmogorov});
  auto parsed = parse_csv(sweep_to_csv(rows));
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0] == std::vector<std::string>{"n", "alpha", "quantity", "exact", "float"});
  CHECK(parsed[1][3] == stein.term3_raw.str());
  CHECK(parsed[2][3].empty());
}

TEST_CASE("verify subcommand smoke run") {
  std::string out, err;
  int code = run_cli({"verify", "-n", "3", "--alpha", "2"}, &out, &err);
  CHECK(code == 0);
  CHECK(out.find("FAIL") == std::string::npos);
  CHECK(out.find("checks passed") != std::string::npos);
  CHECK(out.find("NOTE") != std::string::npos);
}
