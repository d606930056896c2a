#include "jackstein/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jackstein/io.hpp"
#include "jackstein/sampling.hpp"
#include "jackstein/stein.hpp"
#include "jackstein/theta.hpp"
#include "jackstein/verify.hpp"

namespace jackstein::cli {

namespace {

using nlohmann::ordered_json;

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string pretty_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t j = 0; j < row.size(); ++j)
      width[j] = std::max(width[j], row[j].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += "  ";
      out += (j + 1 == row.size()) ? row[j] : pad(row[j], width[j]);
    }
    out += '\n';
  }
  return out;
}

const char* kind_name(ChainKind k) {
  switch (k) {
    case ChainKind::M: return "M";
    case ChainKind::L: return "L";
    case ChainKind::K: return "K";
  }
  return "?";
}

}  // namespace

std::string render_measure(const RunConfig& config) {
  auto dist = jack_distribution(config.n, config.alpha);
  Rational total(0);
  for (const auto& p : dist.probs) total += p;

  if (config.format == OutputFormat::json) {
    ordered_json j;
    j["n"] = config.n;
    j["alpha"] = config.alpha.str();
    ordered_json probs;
    for (std::size_t i = 0; i < dist.index.size(); ++i)
      probs[dist.index[i].str()] = dist.probs[i].str();
    j["probabilities"] = probs;
    j["total"] = total.str();
    return j.dump(2) + "\n";
  }
  if (config.format == OutputFormat::csv) {
    std::string out = csv_line({"partition", "exact", "float"});
    for (std::size_t i = 0; i < dist.index.size(); ++i)
      out += csv_line({dist.index[i].str(), dist.probs[i].str(),
                       format_double(dist.probs[i].to_double())});
    out += csv_line({"total", total.str(), format_double(total.to_double())});
    return out;
  }
  std::string out = "Jack measure  n=" + std::to_string(config.n) +
                    "  alpha=" + config.alpha.str() + "\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"partition", "exact", "float"});
  for (std::size_t i = 0; i < dist.index.size(); ++i)
    rows.push_back({dist.index[i].str(), dist.probs[i].str(),
                    format_double(dist.probs[i].to_double())});
  rows.push_back({"total", total.str(), format_double(total.to_double())});
  return out + pretty_table(rows);
}

namespace {

TransitionMatrix build_chain(const RunConfig& config, ChainKind kind) {
  switch (kind) {
    case ChainKind::M: return m_chain(config.n, config.alpha);
    case ChainKind::L: return l_chain(config.n, config.alpha);
    case ChainKind::K: return k_chain(config.n, config.alpha);
  }
  throw std::invalid_argument("unknown chain kind");
}

std::string render_distribution(const RunConfig& config, const DistOverPartitions& dist,
                                const std::string& headline) {
  if (config.format == OutputFormat::json) {
    ordered_json j;
    j["n"] = config.n;
    j["alpha"] = config.alpha.str();
    j["description"] = headline;
    ordered_json probs;
    for (std::size_t i = 0; i < dist.index.size(); ++i)
      probs[dist.index[i].str()] = dist.probs[i].str();
    j["probabilities"] = probs;
    return j.dump(2) + "\n";
  }
  if (config.format == OutputFormat::csv) {
    std::string out = csv_line({"partition", "exact", "float"});
    for (std::size_t i = 0; i < dist.index.size(); ++i)
      out += csv_line({dist.index[i].str(), dist.probs[i].str(),
                       format_double(dist.probs[i].to_double())});
    return out;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"partition", "exact", "float"});
  for (std::size_t i = 0; i < dist.index.size(); ++i)
    rows.push_back({dist.index[i].str(), dist.probs[i].str(),
                    format_double(dist.probs[i].to_double())});
  return headline + "\n" + pretty_table(rows);
}

}  // namespace

std::string render_chain(const RunConfig& config, ChainKind kind, int steps,
                         const Partition& start) {
  auto chain = build_chain(config, kind);
  if (steps >= 0) {
    auto dist = chain_step_distribution(chain, start, steps);
    return render_distribution(config, dist,
                               std::string(kind_name(kind)) + " chain, " +
                                   std::to_string(steps) + " steps from " + start.str() +
                                   "  n=" + std::to_string(config.n) +
                                   "  alpha=" + config.alpha.str());
  }

  if (config.format == OutputFormat::json) {
    ordered_json j;
    j["kind"] = kind_name(kind);
    j["n"] = config.n;
    j["alpha"] = config.alpha.str();
    ordered_json labels = ordered_json::array();
    for (const auto& p : chain.index) labels.push_back(p.str());
    j["labels"] = labels;
    ordered_json rows = ordered_json::array();
    for (const auto& row : chain.rows) {
      ordered_json r = ordered_json::array();
      for (const auto& v : row) r.push_back(v.str());
      rows.push_back(r);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }
  if (config.format == OutputFormat::csv) return transition_matrix_to_csv(chain);

  std::string out = std::string(kind_name(kind)) + " chain  n=" + std::to_string(config.n) +
                    "  alpha=" + config.alpha.str() + "\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"lambda\\rho"};
  for (const auto& p : chain.index) header.push_back(p.str());
  rows.push_back(header);
  for (std::size_t i = 0; i < chain.rows.size(); ++i) {
    std::vector<std::string> r = {chain.index[i].str()};
    for (const auto& v : chain.rows[i]) r.push_back(v.str());
    rows.push_back(r);
  }
  return out + pretty_table(rows);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("normal_quantile: p must be in (0,1)");
  double lo = -10.0, hi = 10.0;
  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double chi_square_quantile_approx(int df, double p) {
  double z = normal_quantile(p);
  double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
  return df * t * t * t;
}

std::string render_sample(const RunConfig& config, bool pairs) {
  if (config.samples < 1)
    throw std::invalid_argument("sample: --samples must be >= 1");
  if (config.n < 2) throw std::invalid_argument("sample: n must be >= 2");
  GrowthSampler sampler(config.alpha);
  SampleRng rng(config.seed);
  Rational scale = config.alpha * choose2(config.n);
  double sigma = std::sqrt(scale.to_double());

  std::map<Partition, long> counts;
  Rational sum_raw(0), sum_raw2(0), sum_raw3(0);
  Rational pair_sum_star(0), pair_sum_diff2(0);
  for (long s = 0; s < config.samples; ++s) {
    Partition lambda;
    if (pairs) {
      auto [lam, star] = sampler.exchangeable_pair(config.n, rng);
      Rational rs = w_raw(star, config.alpha);
      Rational rl = w_raw(lam, config.alpha);
      pair_sum_star += rs;
      pair_sum_diff2 += (rs - rl) * (rs - rl);
      lambda = std::move(lam);
    } else {
      lambda = sampler.grow(config.n, rng).final_shape();
    }
    ++counts[lambda];
    Rational raw = w_raw(lambda, config.alpha);
    sum_raw += raw;
    sum_raw2 += raw * raw;
    sum_raw3 += raw * raw * raw;
  }

  Rational count_r(config.samples);
  double mean = (sum_raw / count_r).to_double() / sigma;
  double var = ((sum_raw2 / count_r) - (sum_raw / count_r) * (sum_raw / count_r)).to_double() /
               scale.to_double();
  double third = (sum_raw3 / count_r).to_double() / (sigma * sigma * sigma);

  auto exact = jack_distribution(config.n, config.alpha);
  // chi-square against the exact law when every expected cell count is at
  // least 5 (the usual applicability rule)
  bool chi_ok_to_run = true;
  double chi = 0.0;
  for (std::size_t i = 0; i < exact.index.size(); ++i) {
    double expected = exact.probs[i].to_double() * static_cast<double>(config.samples);
    if (expected < 5.0) chi_ok_to_run = false;
  }
  if (chi_ok_to_run) {
    for (std::size_t i = 0; i < exact.index.size(); ++i) {
      double expected = exact.probs[i].to_double() * static_cast<double>(config.samples);
      auto it = counts.find(exact.index[i]);
      double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second);
      chi += (observed - expected) * (observed - expected) / expected;
    }
  }
  int df = static_cast<int>(exact.index.size()) - 1;
  double quantile = chi_ok_to_run ? chi_square_quantile_approx(df, 0.999) : 0.0;

  // histogram over raw W values (exact keys, canonical partition grouping)
  std::map<Rational, long> histogram;
  for (const auto& [lam, c] : counts) histogram[w_raw(lam, config.alpha)] += c;

  if (config.format == OutputFormat::json) {
    ordered_json j;
    j["n"] = config.n;
    j["alpha"] = config.alpha.str();
    j["seed"] = config.seed;
    j["samples"] = config.samples;
    j["mode"] = pairs ? "exchangeable-pair" : "growth";
    ordered_json hist = ordered_json::array();
    for (const auto& [raw, c] : histogram) {
      ordered_json h;
      h["w_raw"] = raw.str();
      h["w"] = format_double(raw.to_double() / sigma);
      h["count"] = c;
      hist.push_back(h);
    }
    j["histogram"] = hist;
    j["mean"] = format_double(mean);
    j["variance"] = format_double(var);
    j["third_moment"] = format_double(third);
    if (chi_ok_to_run) {
      j["chi_square"] = format_double(chi);
      j["chi_square_df"] = df;
      j["chi_square_quantile_0.999_approx"] = format_double(quantile);
    }
    if (pairs) {
      j["pair_mean_w_star"] = format_double((pair_sum_star / count_r).to_double() / sigma);
      j["pair_mean_sq_step"] =
          format_double((pair_sum_diff2 / count_r).to_double() / scale.to_double());
    }
    return j.dump(2) + "\n";
  }
  if (config.format == OutputFormat::csv) {
    std::string out = csv_line({"w_raw", "w", "count", "frequency"});
    for (const auto& [raw, c] : histogram)
      out += csv_line({raw.str(), format_double(raw.to_double() / sigma), std::to_string(c),
                       format_double(static_cast<double>(c) / config.samples)});
    return out;
  }

  std::string out = std::string(pairs ? "exchangeable-pair" : "growth") +
                    " sample report  n=" + std::to_string(config.n) +
                    "  alpha=" + config.alpha.str() + "  seed=" + std::to_string(config.seed) +
                    "  samples=" + std::to_string(config.samples) + "\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"w_raw", "w", "count", "frequency"});
  for (const auto& [raw, c] : histogram)
    rows.push_back({raw.str(), format_double(raw.to_double() / sigma), std::to_string(c),
                    format_double(static_cast<double>(c) / config.samples)});
  out += pretty_table(rows);
  out += "mean(W)=" + format_double(mean) + "  var(W)=" + format_double(var) +
         "  third(W)=" + format_double(third) + "\n";
  if (chi_ok_to_run) {
    out += "chi-square=" + format_double(chi) + "  df=" + std::to_string(df) +
           "  0.999-quantile~" + format_double(quantile) +
           (chi <= quantile ? "  OK" : "  HIGH") + "\n";
  } else {
    out += "chi-square skipped (an expected cell count is below 5)\n";
  }
  if (pairs) {
    out += "pair: mean(W*)=" + format_double((pair_sum_star / count_r).to_double() / sigma) +
           "  mean((W*-W)^2)=" +
           format_double((pair_sum_diff2 / count_r).to_double() / scale.to_double()) + "\n";
  }
  return out;
}

std::string render_clt(const RunConfig& config, const std::vector<int>& ns) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"n", "alpha", "distance", "stein_bound", "distance*n^1/4", "bound*n^1/4"});
  for (int n : ns) {
    auto rep = stein_upper_bound(n, config.alpha);
    double quarter = std::pow(n, 0.25);
    rows.push_back({std::to_string(n), config.alpha.str(), format_double(rep.kolmogorov),
                    format_double(rep.bound), format_double(rep.kolmogorov * quarter),
                    format_double(rep.bound * quarter)});
  }
  if (config.format == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 1; i < rows.size(); ++i) {
      ordered_json j;
      for (std::size_t k = 0; k < rows[0].size(); ++k) j[rows[0][k]] = rows[i][k];
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  if (config.format == OutputFormat::csv) {
    std::string out;
    for (const auto& row : rows) out += csv_line(row);
    return out;
  }
  return "normal approximation sweep  alpha=" + config.alpha.str() + "\n" +
         pretty_table(rows);
}

std::string render_theta(const RunConfig& config) {
  return theta_table_to_csv(jack_theta_table(config.n, config.alpha));
}

std::pair<std::string, bool> render_verify(const RunConfig& config, int max_n,
                                           const std::vector<Rational>& alphas) {
  auto suite = run_verify_suite(max_n, alphas);
  bool ok = suite.all_pass();
  if (config.format == OutputFormat::json) {
    ordered_json j;
    ordered_json checks = ordered_json::array();
    for (const auto& c : suite.checks) {
      ordered_json e;
      e["name"] = c.name;
      e["status"] = c.pass ? "pass" : "fail";
      e["witness"] = c.witness;
      checks.push_back(e);
    }
    j["checks"] = checks;
    j["notes"] = suite.notes;
    j["all_pass"] = ok;
    return {j.dump(2) + "\n", ok};
  }
  if (config.format == OutputFormat::csv) {
    std::string out = csv_line({"name", "status", "witness"});
    for (const auto& c : suite.checks)
      out += csv_line({c.name, c.pass ? "pass" : "fail", c.witness});
    return {out, ok};
  }
  std::string out;
  int passed = 0;
  for (const auto& c : suite.checks) {
    if (c.pass) {
      out += "PASS  " + c.name + "\n";
      ++passed;
    } else {
      out += "FAIL  " + c.name + "  [" + c.witness + "]\n";
    }
  }
  for (const auto& note : suite.notes) out += "NOTE  " + note + "\n";
  out += std::to_string(passed) + "/" + std::to_string(suite.checks.size()) +
         " checks passed\n";
  return {out, ok};
}

namespace {

Rational parse_alpha_or_throw(const std::string& text) {
  auto a = Rational::parse(text);
  if (!a || a->sign() <= 0)
    throw CLI::ValidationError("--alpha", "expected a positive rational like 2 or 3/2, got '" +
                                              text + "'");
  return *a;
}

Partition parse_partition_or_throw(const std::string& text) {
  auto p = Partition::parse(text);
  if (!p)
    throw CLI::ValidationError("--start",
                               "expected a partition like [3,2] or [2,1^3], got '" + text + "'");
  return *p;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + out_path);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact workbench for the Jack measure, its Markov chains, and the "
               "normal-approximation diagnostics"};
  app.require_subcommand(1);

  RunConfig config;
  std::string alpha_text = "1";
  std::string format_text = "pretty";
  std::string out_path;
  std::string kind_text = "M";
  std::string start_text;
  int steps = -1;
  bool pairs = false;
  std::vector<int> n_list;

  auto add_common = [&](CLI::App* sub, bool with_n = true) {
    if (with_n) sub->add_option("-n", config.n, "degree (partition size)");
    sub->add_option("--alpha", alpha_text, "positive rational parameter, e.g. 2 or 3/2");
    sub->add_option("--seed", config.seed, "RNG seed (std::mt19937_64)");
    sub->add_option("--samples", config.samples, "number of Monte Carlo samples");
    sub->add_option("--format", format_text, "output format: csv|json|pretty")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    sub->add_option("--out", out_path, "write the report to this file instead of stdout");
  };

  auto* measure = app.add_subcommand("measure", "tabulate the exact measure at level n");
  add_common(measure);
  auto* chain = app.add_subcommand(
      "chain", "exact transition matrix, or an r-step distribution with --steps");
  add_common(chain);
  chain->add_option("--kind", kind_text, "chain kind: M|L|K")
      ->check(CLI::IsMember({"M", "L", "K"}));
  chain->add_option("--steps", steps, "number of steps (omit to dump the matrix)");
  chain->add_option("--start", start_text, "start partition, default [1^n]");
  auto* sample = app.add_subcommand("sample", "seeded Monte Carlo sampling report");
  add_common(sample);
  sample->add_flag("--pairs", pairs, "sample exchangeable pairs instead of single shapes");
  auto* clt = app.add_subcommand("clt",
                                 "Kolmogorov distance and Stein bound sweep over -n values");
  clt->add_option("-n", n_list, "degrees to sweep (repeatable)");
  clt->add_option("--alpha", alpha_text, "positive rational parameter");
  clt->add_option("--format", format_text, "output format: csv|json|pretty")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));
  clt->add_option("--out", out_path, "write the report to this file");
  auto* verify = app.add_subcommand("verify", "run every exact identity up to a cap");
  verify->add_option("-n", config.n, "exact cap (default 8, hard limit 10)");
  verify->add_option("--alpha", alpha_text,
                     "restrict to one alpha (default: 1, 3/2, 2, 3)");
  verify->add_option("--format", format_text, "output format: csv|json|pretty")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));
  verify->add_option("--out", out_path, "write the report to this file");
  auto* theta = app.add_subcommand("theta", "dump the exact theta coefficient table as CSV");
  add_common(theta);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    config.alpha = parse_alpha_or_throw(alpha_text);
    if (format_text == "csv") config.format = OutputFormat::csv;
    else if (format_text == "json") config.format = OutputFormat::json;
    else config.format = OutputFormat::pretty;

    if (measure->parsed()) {
      emit(render_measure(config), out_path, out);
      return 0;
    }
    if (chain->parsed()) {
      ChainKind kind = kind_text == "M"   ? ChainKind::M
                       : kind_text == "L" ? ChainKind::L
                                          : ChainKind::K;
      Partition start = start_text.empty()
                            ? Partition(std::vector<int>(config.n, 1))
                            : parse_partition_or_throw(start_text);
      emit(render_chain(config, kind, steps, start), out_path, out);
      return 0;
    }
    if (sample->parsed()) {
      emit(render_sample(config, pairs), out_path, out);
      return 0;
    }
    if (clt->parsed()) {
      if (n_list.empty()) n_list = {5, 10, 15, 20};
      emit(render_clt(config, n_list), out_path, out);
      return 0;
    }
    if (verify->parsed()) {
      int cap = verify->count("-n") ? config.n : 8;
      std::vector<Rational> alphas;
      if (verify->count("--alpha")) {
        alphas = {config.alpha};
      } else {
        alphas = {Rational(1), Rational(3, 2), Rational(2), Rational(3)};
      }
      auto [text, ok] = render_verify(config, cap, alphas);
      emit(text, out_path, out);
      return ok ? 0 : 1;
    }
    if (theta->parsed()) {
      emit(render_theta(config), out_path, out);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace jackstein::cli
