#include "jackstein/stein.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace jackstein {

namespace {

void require_alpha_at_least_one(const Rational& alpha, const char* who) {
  if (alpha < Rational(1))
    throw std::invalid_argument(
        std::string(who) +
        ": requires alpha >= 1; for alpha < 1 use the conjugation duality");
}

Partition padded_with_ones(std::vector<int> head, int n) {
  int used = 0;
  for (int p : head) used += p;
  for (int i = used; i < n; ++i) head.push_back(1);
  return Partition(std::move(head));
}

}  // namespace

Rational w_raw(const Partition& lambda, const Rational& alpha) {
  if (alpha.sign() <= 0) throw std::invalid_argument("w_raw: alpha must be positive");
  return alpha * Rational(n_stat(lambda.conjugate())) - Rational(n_stat(lambda));
}

WValue w_statistic(const Partition& lambda, const Rational& alpha) {
  if (lambda.size() < 2)
    throw std::invalid_argument("w_statistic: |lambda| must be >= 2");
  WValue w;
  w.raw = w_raw(lambda, alpha);
  w.normalized =
      w.raw.to_double() / std::sqrt((alpha * choose2(lambda.size())).to_double());
  return w;
}

double normal_cdf(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("normal_cdf: non-finite input");
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

IdentityResidual conditional_mean_eigencheck(int n, const Rational& alpha) {
  if (n < 2)
    throw std::invalid_argument("conditional_mean_eigencheck: n must be >= 2");
  require_alpha_at_least_one(alpha, "conditional_mean_eigencheck");

  Rational eig = Rational(1) - Rational(2, n);
  IdentityResidual res;
  res.max_abs_diff = Rational(0);
  for (const auto& lambda : enumerate_partitions(n)) {
    Rational lhs(0);
    for (const auto& [rho, p] : m_transition_row(lambda, alpha))
      lhs += p * w_raw(rho, alpha);
    Rational diff = (lhs - eig * w_raw(lambda, alpha)).abs();
    if (diff > res.max_abs_diff) {
      res.max_abs_diff = diff;
      res.witness = "lambda=" + lambda.str();
    }
  }
  if (res.max_abs_diff.is_zero()) res.witness.clear();
  return res;
}

IdentityResidual general_eigencheck(const Partition& nu, const TransitionMatrix& m_matrix,
                                    const TransitionMatrix& l_matrix,
                                    const ThetaTable& theta) {
  int n = theta.n;
  if (nu.size() != n) throw std::invalid_argument("general_eigencheck: |nu| != n");
  if (m_matrix.n != n || l_matrix.n != n || m_matrix.alpha != theta.alpha ||
      l_matrix.alpha != theta.alpha)
    throw std::invalid_argument("general_eigencheck: inputs do not match");
  const Rational& alpha = theta.alpha;

  int hook = theta.index_of(Partition(std::vector<int>{n - 1, 1}));
  int nu_col = theta.index_of(nu);
  Rational eig_l = z_stat(nu) / (alpha.pow(n - nu.num_parts()) * factorial(n)) *
                   theta.values[hook][nu_col];
  Rational beta = alpha * Rational(n - 1) / (alpha * Rational(n - 1) + Rational(1));
  Rational eig_m = Rational(1) + beta * (eig_l - Rational(1));

  IdentityResidual res;
  res.max_abs_diff = Rational(0);
  const std::size_t count = theta.index.size();
  for (std::size_t i = 0; i < count; ++i) {
    Rational lhs_l(0), lhs_m(0);
    for (std::size_t j = 0; j < count; ++j) {
      if (!l_matrix.rows[i][j].is_zero())
        lhs_l += l_matrix.rows[i][j] * theta.values[j][nu_col];
      if (!m_matrix.rows[i][j].is_zero())
        lhs_m += m_matrix.rows[i][j] * theta.values[j][nu_col];
    }
    Rational dl = (lhs_l - eig_l * theta.values[i][nu_col]).abs();
    Rational dm = (lhs_m - eig_m * theta.values[i][nu_col]).abs();
    Rational d = std::max(dl, dm);
    if (d > res.max_abs_diff) {
      res.max_abs_diff = d;
      res.witness = "nu=" + nu.str() + " lambda=" + theta.index[i].str();
    }
  }
  if (res.max_abs_diff.is_zero()) res.witness.clear();
  return res;
}

MomentReport moments(int n, const Rational& alpha, int r) {
  if (n < 2) throw std::invalid_argument("moments: n must be >= 2");
  if (r < 0) throw std::invalid_argument("moments: r must be >= 0");
  require_alpha_at_least_one(alpha, "moments");

  MomentReport rep;
  rep.n = n;
  rep.alpha = alpha;
  rep.r = r;

  Rational scale = alpha * choose2(n);
  Partition ones(std::vector<int>(n, 1));
  auto dist = chain_step_distribution(k_chain(n, alpha), ones, r);
  rep.via_chain = dist.prob(ones) * scale.pow(static_cast<unsigned>(r));

  Rational direct(0);
  const auto pi = jack_distribution(n, alpha);
  for (std::size_t i = 0; i < pi.index.size(); ++i) {
    Rational raw = w_raw(pi.index[i], alpha);
    direct += pi.probs[i] * raw.pow(static_cast<unsigned>(r));
  }
  rep.direct = direct;

  Rational scale_r = scale.pow(static_cast<unsigned>(r));
  rep.normalized_squared = direct * direct / scale_r;
  if (r % 2 == 0) rep.normalized_exact = direct / scale.pow(static_cast<unsigned>(r / 2));
  rep.normalized = direct.to_double() / std::pow(scale.to_double(), r / 2.0);
  return rep;
}

Rational conditional_second_moment(const Partition& lambda, const ThetaTable& theta) {
  int n = theta.n;
  if (n < 4)
    throw std::invalid_argument(
        "conditional_second_moment: closed form needs n >= 4; use the direct "
        "L-weighted summation below that");
  if (lambda.size() != n)
    throw std::invalid_argument("conditional_second_moment: |lambda| != n");
  const Rational& alpha = theta.alpha;
  require_alpha_at_least_one(alpha, "conditional_second_moment");

  int li = theta.index_of(lambda);
  auto coeff = [&](std::vector<int> head) {
    return theta.values[li][theta.index_of(padded_with_ones(std::move(head), n))];
  };
  Rational denom = alpha * alpha * Rational(n) * Rational(n) * Rational(n - 1) * Rational(n - 1);
  Rational term2 = coeff({2}) * Rational(4) * (alpha - Rational(1)) *
                   (alpha * choose2(n - 1) - Rational(1)) / denom;
  Rational term3 = coeff({3}) * Rational(6) *
                   (alpha * Rational(n - 1) * Rational(n - 3) - Rational(3)) / denom;
  Rational term22 = coeff({2, 2}) * Rational(4) *
                    (alpha * Rational(n - 1) * Rational(n - 4) - Rational(4)) / denom;
  return Rational(1) + term2 + term3 + term22;
}

Rational conditional_second_moment_direct(const Partition& lambda,
                                          const TransitionMatrix& l_matrix) {
  if (lambda.size() != l_matrix.n)
    throw std::invalid_argument("conditional_second_moment_direct: |lambda| != n");
  const Rational& alpha = l_matrix.alpha;
  Rational scale = alpha * choose2(l_matrix.n);
  int i = l_matrix.index_of(lambda);
  Rational total(0);
  for (std::size_t j = 0; j < l_matrix.index.size(); ++j) {
    if (l_matrix.rows[i][j].is_zero()) continue;
    Rational raw = w_raw(l_matrix.index[j], alpha);
    total += l_matrix.rows[i][j] * raw * raw;
  }
  return total / scale;
}

namespace {

// Per-lambda conditional sums over one M_alpha step: q = E^lambda(raw*-raw)^2
// and t = E^lambda|raw*-raw|^3, both exact.
struct ConditionalSums {
  Rational q;
  Rational t;
};

ConditionalSums conditional_sums(const Partition& lambda, const Rational& alpha) {
  Rational raw_l = w_raw(lambda, alpha);
  ConditionalSums s;
  for (const auto& [rho, p] : m_transition_row(lambda, alpha)) {
    Rational d = (w_raw(rho, alpha) - raw_l).abs();
    Rational d2 = d * d;
    s.q += p * d2;
    s.t += p * d2 * d;
  }
  return s;
}

}  // namespace

Term1Report stein_error_term1(int n, const Rational& alpha) {
  if (n < 5) throw std::invalid_argument("stein_error_term1: n must be >= 5");
  require_alpha_at_least_one(alpha, "stein_error_term1");

  Rational scale = alpha * choose2(n);
  Rational quarter_n(n, 4);
  Rational computed(0);
  const auto pi = jack_distribution(n, alpha);
  for (std::size_t i = 0; i < pi.index.size(); ++i) {
    Rational q = conditional_sums(pi.index[i], alpha).q / scale;
    Rational v = Rational(-1) + quarter_n * q;
    computed += pi.probs[i] * v * v;
  }

  Term1Report rep;
  rep.computed = computed;
  rep.formula = (Rational(3) * alpha * Rational(n) + Rational(2) * alpha * alpha -
                 Rational(10) * alpha + Rational(2)) /
                (Rational(4) * alpha * Rational(n) * Rational(n - 1));
  return rep;
}

ThirdMomentReport stein_error_term3(int n, const Rational& alpha) {
  if (n < 2) throw std::invalid_argument("stein_error_term3: n must be >= 2");
  require_alpha_at_least_one(alpha, "stein_error_term3");

  Rational total(0);
  const auto pi = jack_distribution(n, alpha);
  for (std::size_t i = 0; i < pi.index.size(); ++i)
    total += pi.probs[i] * conditional_sums(pi.index[i], alpha).t;

  ThirdMomentReport rep;
  rep.raw_abs_third = total;
  rep.normalized =
      total.to_double() / std::pow((alpha * choose2(n)).to_double(), 1.5);
  return rep;
}

TailBoundReport tail_bound_check(int n, const Rational& alpha) {
  if (n < 1) throw std::invalid_argument("tail_bound_check: n must be >= 1");
  if (alpha.sign() <= 0)
    throw std::invalid_argument("tail_bound_check: alpha must be positive");

  TailBoundReport rep;
  rep.n = n;
  rep.alpha = alpha;
  double a = alpha.to_double();
  rep.row_threshold = 2.0 * std::numbers::e * std::sqrt(n / a);
  rep.col_threshold = 2.0 * std::numbers::e * std::sqrt(n * a);
  rep.row_bound = a * n * static_cast<double>(n) * std::exp2(-2.0 * rep.row_threshold);
  rep.col_bound = n * static_cast<double>(n) / a * std::exp2(-2.0 * rep.col_threshold);

  int row_min = static_cast<int>(std::ceil(rep.row_threshold));
  int col_min = static_cast<int>(std::ceil(rep.col_threshold));
  const auto pi = jack_distribution(n, alpha);
  for (std::size_t i = 0; i < pi.index.size(); ++i) {
    if (pi.index[i].part(1) >= row_min) rep.row_tail += pi.probs[i];
    if (pi.index[i].num_parts() >= col_min) rep.col_tail += pi.probs[i];
  }
  rep.row_ok = rep.row_tail.to_double() <= rep.row_bound;
  rep.col_ok = rep.col_tail.to_double() <= rep.col_bound;
  return rep;
}

namespace {

// atoms of the raw-W distribution: exact probability per distinct raw value
std::map<Rational, Rational> raw_atoms(const DistOverPartitions& pi) {
  std::map<Rational, Rational> atoms;
  for (std::size_t i = 0; i < pi.index.size(); ++i) {
    Rational raw = w_raw(pi.index[i], pi.alpha);
    auto [it, inserted] = atoms.emplace(raw, pi.probs[i]);
    if (!inserted) it->second += pi.probs[i];
  }
  return atoms;
}

}  // namespace

double kolmogorov_distance(int n, const Rational& alpha) {
  if (n < 2) throw std::invalid_argument("kolmogorov_distance: n must be >= 2");
  require_alpha_at_least_one(alpha, "kolmogorov_distance");

  double inv_sigma = 1.0 / std::sqrt((alpha * choose2(n)).to_double());
  Rational cdf(0);
  double dist = 0.0;
  for (const auto& [raw, p] : raw_atoms(jack_distribution(n, alpha))) {
    double phi = normal_cdf(raw.to_double() * inv_sigma);
    double below = cdf.to_double();
    cdf += p;
    double at = cdf.to_double();
    dist = std::max({dist, std::fabs(at - phi), std::fabs(phi - below)});
  }
  return dist;
}

SteinReport stein_upper_bound(int n, const Rational& alpha) {
  if (n < 2) throw std::invalid_argument("stein_upper_bound: n must be >= 2");
  require_alpha_at_least_one(alpha, "stein_upper_bound");

  SteinReport rep;
  rep.n = n;
  rep.alpha = alpha;
  rep.tau = Rational(2, n);

  Rational scale = alpha * choose2(n);
  Rational quarter_n(n, 4);
  const auto pi = jack_distribution(n, alpha);

  // group exact conditional sums by the raw W value
  struct Group {
    Rational prob;
    Rational prob_q;  // sum pi(lambda) q(lambda)
  };
  std::map<Rational, Group> groups;
  Rational term1_lambda(0), term3_raw(0);
  for (std::size_t i = 0; i < pi.index.size(); ++i) {
    auto sums = conditional_sums(pi.index[i], alpha);
    Rational q = sums.q / scale;
    Rational v = Rational(-1) + quarter_n * q;
    term1_lambda += pi.probs[i] * v * v;
    term3_raw += pi.probs[i] * sums.t;
    auto& g = groups[w_raw(pi.index[i], alpha)];
    g.prob += pi.probs[i];
    g.prob_q += pi.probs[i] * q;
  }
  Rational term1_w(0);
  for (const auto& [raw, g] : groups) {
    Rational v = Rational(-1) + quarter_n * (g.prob_q / g.prob);
    term1_w += g.prob * v * v;
  }

  rep.term1_lambda = term1_lambda;
  rep.term1_w_grouped = term1_w;
  if (n >= 5) rep.term1_formula = stein_error_term1(n, alpha).formula;
  rep.term3_raw = term3_raw;
  rep.term3 = term3_raw.to_double() / std::pow(scale.to_double(), 1.5);

  double inv_tau = n / 2.0;
  double packaging = std::pow(2.0 * std::numbers::pi, -0.25);
  rep.bound = 2.0 * std::sqrt(term1_w.to_double()) +
              packaging * std::sqrt(inv_tau * rep.term3);
  rep.bound_lambda = 2.0 * std::sqrt(term1_lambda.to_double()) +
                     packaging * std::sqrt(inv_tau * rep.term3);
  rep.kolmogorov = kolmogorov_distance(n, alpha);
  return rep;
}

}  // namespace jackstein
