#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jackstein/stein.hpp"
#include "jackstein/verify.hpp"
#include "oracles.hpp"

using namespace jackstein;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

const std::vector<Rational> kAlphas = {Rational(1), Rational(3, 2), Rational(2), Rational(3)};

}  // namespace

TEST_CASE("raw W values") {
  for (const auto& a : kAlphas) CHECK(w_raw(P({3}), a) == Rational(3) * a);
  for (int n = 2; n <= 8; ++n)
    CHECK(w_raw(Partition(std::vector<int>(n, 1)), Rational(1)) == -choose2(n));
  CHECK(w_raw(P({2, 1}), Rational(1)) == Rational(0));
  CHECK_THROWS_AS(w_statistic(P({1}), Rational(1)), std::invalid_argument);

  // at alpha = 1, raw / C(n,2) is the transposition character ratio
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> t = {2};
    for (int i = 2; i < n; ++i) t.push_back(1);
    Partition transp(std::move(t));
    for (const auto& lam : enumerate_partitions(n)) {
      Rational character(static_cast<long long>(oracles::mn_character(lam, transp)));
      Rational dim(static_cast<long long>(oracles::syt_count(lam)));
      CHECK(w_raw(lam, Rational(1)) / choose2(n) == character / dim);
    }
  }
}

TEST_CASE("normal cdf") {
  CHECK(normal_cdf(0.0) == 0.5);
  double oracle = oracles::normal_cdf_quadrature(1.96);
  CHECK(std::fabs(normal_cdf(1.96) - oracle) < 1e-12);
  CHECK(std::fabs(normal_cdf(1.96) - 0.9750021049) < 1e-9);
  // the Mills-ratio bound phi(8)/8 dominates the tail at -8
  double tail_bound = std::exp(-32.0) / (8.0 * std::sqrt(2.0 * 3.14159265358979323846));
  CHECK(normal_cdf(-8.0) < tail_bound);
  CHECK(normal_cdf(-8.0) < 1e-15);
  for (double x : {0.1, 0.73, 1.5, 2.0, 3.25, 5.0})
    CHECK(std::fabs(normal_cdf(-x) - (1.0 - normal_cdf(x))) < 1e-15);
  CHECK_THROWS_AS(normal_cdf(std::nan("")), std::invalid_argument);
}

TEST_CASE("conditional mean is a scalar multiple of W") {
  CHECK(conditional_mean_eigencheck(3, Rational(2)).max_abs_diff == Rational(0));
  CHECK(conditional_mean_eigencheck(8, Rational(1)).max_abs_diff == Rational(0));
  for (int n = 2; n <= 8; ++n)
    for (const auto& a : kAlphas)
      CHECK(conditional_mean_eigencheck(n, a).max_abs_diff == Rational(0));
}

TEST_CASE("theta columns are eigenvectors of both chains") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& a : {Rational(3, 2), Rational(1)}) {
      auto theta = jack_theta_table(n, a);
      auto m = m_chain(n, a);
      auto l = l_chain(n, a, theta);
      for (const auto& nu : theta.index)
        CHECK(general_eigencheck(nu, m, l, theta).max_abs_diff == Rational(0));
    }
  }
  // spot value: the transposition column recovers eigenvalue 1 - 2/n
  {
    int n = 6;
    Rational a(2);
    auto theta = jack_theta_table(n, a);
    int hook = theta.index_of(P({n - 1, 1}));
    int nu_col = theta.index_of(P({2, 1, 1, 1, 1}));
    Rational eig_l = z_stat(P({2, 1, 1, 1, 1})) /
                     (a.pow(n - 5) * factorial(n)) * theta.values[hook][nu_col];
    Rational beta = a * Rational(n - 1) / (a * Rational(n - 1) + Rational(1));
    CHECK(Rational(1) + beta * (eig_l - Rational(1)) == Rational(1) - Rational(2, n));
  }
}

TEST_CASE("moments through the chain and directly") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& a : kAlphas) {
      Rational scale = a * choose2(n);
      for (int r = 0; r <= 6; ++r) {
        auto rep = moments(n, a, r);
        CHECK(rep.via_chain == rep.direct);
        if (r == 1) CHECK(rep.direct == Rational(0));
        if (r == 2) {
          CHECK(rep.normalized_exact.value() == Rational(1));
        }
        if (r == 3)
          CHECK(rep.normalized_squared ==
                (a - Rational(1)) * (a - Rational(1)) / scale);
      }
    }
  }
}

TEST_CASE("conditional second moment closed form") {
  {
    auto theta = jack_theta_table(4, Rational(2));
    auto l = l_chain(4, Rational(2), theta);
    CHECK(conditional_second_moment(P({2, 1, 1}), theta) ==
          conditional_second_moment_direct(P({2, 1, 1}), l));
  }
  {
    auto theta = jack_theta_table(5, Rational(1));
    auto l = l_chain(5, Rational(1), theta);
    CHECK(conditional_second_moment(P({5}), theta) ==
          conditional_second_moment_direct(P({5}), l));
  }
  // averaging the conditional second moment over the measure gives E(W^2) = 1
  for (int n = 4; n <= 7; ++n) {
    for (const auto& a : {Rational(1), Rational(2)}) {
      auto theta = jack_theta_table(n, a);
      auto pi = jack_distribution(n, a);
      Rational total(0);
      for (std::size_t i = 0; i < pi.index.size(); ++i)
        total += pi.probs[i] * conditional_second_moment(pi.index[i], theta);
      CHECK(total == Rational(1));
    }
  }
  auto theta3 = jack_theta_table(3, Rational(2));
  CHECK_THROWS_AS(conditional_second_moment(P({2, 1}), theta3), std::invalid_argument);
}

TEST_CASE("squared error term closed form") {
  auto rep = stein_error_term1(6, Rational(1));
  CHECK(rep.computed == Rational(1, 10));
  CHECK(rep.formula == Rational(1, 10));

  rep = stein_error_term1(5, Rational(2));
  CHECK(rep.computed == rep.formula);

  // alpha = 1 reduction: (3n - 6) / (4 n (n-1))
  for (int n = 5; n <= 10; ++n) {
    auto r1 = stein_error_term1(n, Rational(1));
    CHECK(r1.formula == Rational(3 * n - 6) / Rational(4L * n * (n - 1)));
    CHECK(r1.computed == r1.formula);
  }
  CHECK_THROWS_AS(stein_error_term1(4, Rational(1)), std::invalid_argument);
}

TEST_CASE("third moment of the step") {
  auto rep = stein_error_term3(2, Rational(1));
  CHECK(rep.raw_abs_third == Rational(4));  // two-state chain by hand
  CHECK(rep.normalized == doctest::Approx(4.0));

  // single-box move bound: |raw* - raw| <= alpha (lambda_1 + 1) + lambda'_1 + 1
  for (int n = 2; n <= 6; ++n) {
    for (const auto& a : {Rational(1), Rational(2)}) {
      for (const auto& lam : enumerate_partitions(n)) {
        Rational raw_l = w_raw(lam, a);
        Rational limit = a * Rational(lam.part(1) + 1) + Rational(lam.num_parts() + 1);
        for (const auto& [rho, p] : m_transition_row(lam, a)) {
          if (p.is_zero()) continue;
          CHECK((w_raw(rho, a) - raw_l).abs() <= limit);
        }
      }
    }
  }
}

TEST_CASE("tail bounds") {
  auto rep = tail_bound_check(9, Rational(1));
  CHECK(rep.row_tail == Rational(0));  // threshold exceeds n
  CHECK(rep.row_ok);
  CHECK(rep.col_ok);

  rep = tail_bound_check(12, Rational(2));
  CHECK(rep.row_ok);
  CHECK(rep.col_ok);

  // conjugate tail duality: P_alpha(lambda'_1 >= t) = P_{1/alpha}(lambda_1 >= t)
  for (int n = 1; n <= 12; ++n) {
    for (const auto& a : {Rational(2), Rational(3, 2)}) {
      auto pi_a = jack_distribution(n, a);
      auto pi_inv = jack_distribution(n, a.inverse());
      for (int t = 1; t <= n + 1; ++t) {
        Rational lhs(0), rhs(0);
        for (std::size_t i = 0; i < pi_a.index.size(); ++i)
          if (pi_a.index[i].num_parts() >= t) lhs += pi_a.probs[i];
        for (std::size_t i = 0; i < pi_inv.index.size(); ++i)
          if (pi_inv.index[i].part(1) >= t) rhs += pi_inv.probs[i];
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("kolmogorov distance") {
  double expected = normal_cdf(1.0) - 0.5;
  CHECK(std::fabs(kolmogorov_distance(2, Rational(1)) - expected) < 1e-15);
  CHECK(kolmogorov_distance(2, Rational(1)) == doctest::Approx(0.3413).epsilon(1e-3));

  for (int n = 2; n <= 12; ++n)
    CHECK(kolmogorov_distance(n, Rational(1)) <= 40.1 * std::pow(n, -0.25));
}

TEST_CASE("stein bound dominates the exact distance") {
  for (const auto& a : {Rational(1), Rational(2)}) {
    for (int n = 2; n <= 10; ++n) {
      auto rep = stein_upper_bound(n, a);
      CHECK(rep.term1_w_grouped <= rep.term1_lambda);  // Jensen direction
      CHECK(rep.bound >= rep.kolmogorov);
      CHECK(rep.bound_lambda >= rep.bound);
      if (n >= 5) CHECK(rep.term1_lambda == rep.term1_formula.value());
      CHECK(rep.tau == Rational(2, n));
    }
  }
}

TEST_CASE("w duality across alpha inversion") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& a : {Rational(3, 2), Rational(2), Rational(3)})
      CHECK(check_w_duality(n, a).empty());
}

TEST_CASE("distance decreases along the coarse grid at alpha one") {
  double previous = 1.0;
  for (int n : {5, 10, 15, 20, 25, 30}) {
    double d = kolmogorov_distance(n, Rational(1));
    CHECK(d < previous);
    previous = d;
  }
}

TEST_CASE("scaled bound stays bounded over the sweep") {
  double reference = 0.0;
  for (int n = 6; n <= 14; ++n) {
    auto rep = stein_upper_bound(n, Rational(1));
    double scaled = rep.bound * std::pow(n, 0.25);
    if (n == 6) reference = scaled;
    CHECK(scaled <= 2.0 * reference);
  }
}

TEST_CASE("third moment scaling stays bounded at alpha one") {
  double reference = 0.0;
  for (int n = 4; n <= 12; ++n) {
    auto rep = stein_error_term3(n, Rational(1));
    double scaled = rep.normalized * std::pow(n, 1.5);
    if (n == 4) reference = scaled;
    CHECK(scaled <= 2.0 * reference);
  }
}
