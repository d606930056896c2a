#include "jackstein/verify.hpp"

#include <map>
#include <stdexcept>

#include "jackstein/io.hpp"
#include "jackstein/stein.hpp"

namespace jackstein {

bool VerifySuiteResult::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string check_theta_orthogonality_rows(const ThetaTable& t) {
  const std::size_t count = t.index.size();
  std::vector<Rational> weight(count);
  for (std::size_t j = 0; j < count; ++j)
    weight[j] = z_stat(t.index[j]) * t.alpha.pow(t.index[j].num_parts());
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t l = r; l < count; ++l) {
      Rational s(0);
      for (std::size_t j = 0; j < count; ++j)
        s += weight[j] * t.values[r][j] * t.values[l][j];
      Rational expected =
          (r == l) ? c_product(t.index[r], t.alpha) * c_prime_product(t.index[r], t.alpha)
                   : Rational(0);
      if (s != expected)
        return "rho=" + t.index[r].str() + " lambda=" + t.index[l].str() + " got " +
               s.str() + " expected " + expected.str();
    }
  }
  return {};
}

std::string check_theta_orthogonality_cols(const ThetaTable& t) {
  const std::size_t count = t.index.size();
  std::vector<Rational> cc(count);
  for (std::size_t r = 0; r < count; ++r)
    cc[r] = c_product(t.index[r], t.alpha) * c_prime_product(t.index[r], t.alpha);
  for (std::size_t m = 0; m < count; ++m) {
    for (std::size_t v = m; v < count; ++v) {
      Rational s(0);
      for (std::size_t r = 0; r < count; ++r)
        s += t.values[r][m] * t.values[r][v] / cc[r];
      Rational expected =
          (m == v) ? Rational(1) / (z_stat(t.index[m]) * t.alpha.pow(t.index[m].num_parts()))
                   : Rational(0);
      if (s != expected)
        return "mu=" + t.index[m].str() + " nu=" + t.index[v].str() + " got " + s.str() +
               " expected " + expected.str();
    }
  }
  return {};
}

std::string check_theta_special_values(const ThetaTable& t) {
  int n = t.n;
  const Rational& a = t.alpha;
  const std::size_t count = t.index.size();
  const std::size_t ones_col = count - 1;

  for (std::size_t i = 0; i < count; ++i)
    if (t.values[i][ones_col] != Rational(1))
      return "coefficient of p_(1^n) in J_" + t.index[i].str() + " is " +
             t.values[i][ones_col].str();

  // single row shape: theta^{(n)}_mu = (n!/z_mu) alpha^{n-l(mu)}
  for (std::size_t j = 0; j < count; ++j) {
    const Partition& mu = t.index[j];
    Rational expected = factorial(n) / z_stat(mu) * a.pow(n - mu.num_parts());
    if (t.values[0][j] != expected)
      return "row [" + std::to_string(n) + "] mu=" + mu.str() + " got " +
             t.values[0][j].str() + " expected " + expected.str();
  }

  if (n >= 2) {
    // transposition column: theta^lambda_(2,1^{n-2}) = alpha n(lambda') - n(lambda)
    std::vector<int> q = {2};
    for (int i = 2; i < n; ++i) q.push_back(1);
    Partition transp(std::move(q));
    int tj = 0;
    for (std::size_t j = 0; j < count; ++j)
      if (t.index[j] == transp) tj = static_cast<int>(j);
    for (std::size_t i = 0; i < count; ++i) {
      Rational expected = w_raw(t.index[i], a);
      if (t.values[i][tj] != expected)
        return "transposition column lambda=" + t.index[i].str() + " got " +
               t.values[i][tj].str() + " expected " + expected.str();
    }

    // hook row: theta^{(n-1,1)}_mu
    int hook_row = 0;
    Partition hook(std::vector<int>{n - 1, 1});
    for (std::size_t i = 0; i < count; ++i)
      if (t.index[i] == hook) hook_row = static_cast<int>(i);
    for (std::size_t j = 0; j < count; ++j) {
      const Partition& mu = t.index[j];
      Rational expected = a.pow(n - mu.num_parts()) * factorial(n) / z_stat(mu) *
                          ((a * Rational(n - 1) + Rational(1)) * Rational(mu.multiplicity(1)) -
                           Rational(n)) /
                          (a * Rational(n) * Rational(n - 1));
      if (t.values[hook_row][j] != expected)
        return "hook row mu=" + mu.str() + " got " + t.values[hook_row][j].str() +
               " expected " + expected.str();
    }
  }
  return {};
}

std::string check_row_sums(const TransitionMatrix& m) {
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    Rational s(0);
    for (const auto& v : m.rows[i]) s += v;
    if (s != Rational(1))
      return "row " + m.index[i].str() + " sums to " + s.str();
  }
  return {};
}

std::string check_chain_signs(const TransitionMatrix& m) {
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t j = 0; j < m.rows[i].size(); ++j) {
      if (m.kind == ChainKind::L && i == j) continue;  // diagonal sign is open
      if (m.rows[i][j].sign() < 0)
        return "entry (" + m.index[i].str() + "," + m.index[j].str() + ") = " +
               m.rows[i][j].str();
    }
  }
  return {};
}

std::string check_reversibility(const TransitionMatrix& m, const DistOverPartitions& pi) {
  const std::size_t count = m.index.size();
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (pi.probs[i] * m.rows[i][j] != pi.probs[j] * m.rows[j][i])
        return "pair (" + m.index[i].str() + "," + m.index[j].str() + ")";
  return {};
}

std::string check_offdiagonal_ratio(const TransitionMatrix& m_matrix,
                                    const TransitionMatrix& l_matrix) {
  int n = m_matrix.n;
  const Rational& a = m_matrix.alpha;
  Rational lhs_scale = a * Rational(n - 1);
  Rational rhs_scale = a * Rational(n - 1) + Rational(1);
  const std::size_t count = m_matrix.index.size();
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j) continue;
      if (l_matrix.rows[i][j] * lhs_scale != m_matrix.rows[i][j] * rhs_scale)
        return "pair (" + m_matrix.index[i].str() + "," + m_matrix.index[j].str() + ")";
    }
  return {};
}

std::string check_toy_lumping(int n, const Rational& alpha) {
  auto toy = t_chain_toy(n, alpha);
  auto lumped = k_chain(n, alpha);
  auto pos = [&](const Partition& p) { return lumped.index_of(p); };
  std::vector<int> type_of(toy.perms.size());
  for (std::size_t i = 0; i < toy.perms.size(); ++i)
    type_of[i] = pos(cycle_type(toy.perms[i]));

  const std::size_t classes = lumped.index.size();
  for (std::size_t i = 0; i < toy.perms.size(); ++i) {
    std::vector<Rational> sums(classes, Rational(0));
    for (std::size_t j = 0; j < toy.perms.size(); ++j)
      sums[type_of[j]] += toy.rows[i][j];
    for (std::size_t c = 0; c < classes; ++c)
      if (sums[c] != lumped.rows[type_of[i]][c])
        return "perm index " + std::to_string(i) + " class " + lumped.index[c].str() +
               " got " + sums[c].str() + " expected " + lumped.rows[type_of[i]][c].str();
  }
  return {};
}

std::string check_growth_coherence(int max_n, const Rational& alpha) {
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& lam : enumerate_partitions(n)) {
      Rational up(0);
      for (const auto& [big, p] : up_transition(lam, alpha)) up += p;
      if (up != Rational(1)) return "up from " + lam.str() + " sums to " + up.str();
      if (n >= 1) {
        Rational down(0);
        for (const auto& [small, p] : down_transition(lam, alpha)) down += p;
        if (down != Rational(1))
          return "down from " + lam.str() + " sums to " + down.str();
      }
    }
  }
  return {};
}

std::string check_measure_duality(int n, const Rational& alpha) {
  Rational inv = alpha.inverse();
  for (const auto& lam : enumerate_partitions(n)) {
    if (jack_measure(lam, alpha) != jack_measure(lam.conjugate(), inv))
      return "lambda=" + lam.str();
  }
  return {};
}

std::string check_w_duality(int n, const Rational& alpha) {
  // raw at 1/alpha of the conjugate is -raw/alpha, so the normalized W laws
  // mirror each other once the measures match.
  Rational inv = alpha.inverse();
  for (const auto& lam : enumerate_partitions(n)) {
    if (w_raw(lam.conjugate(), inv) * alpha != -w_raw(lam, alpha))
      return "lambda=" + lam.str();
  }
  return {};
}

RationalMatrix fixture_m3(const Rational& a) {
  Rational z(0), one(1), two(2), three(3), seven(7);
  return {
      {one / (two * a + one), two * a / (two * a + one), z},
      {(a + two) / (three * (a + one) * (two * a + one)),
       two * (a * a + seven * a + one) / (three * (a + two) * (two * a + one)),
       a * (two * a + one) / (three * (a + one) * (a + two))},
      {z, two / (a + two), a / (a + two)},
  };
}

RationalMatrix fixture_l3(const Rational& a) {
  Rational z(0), one(1), two(2), four(4), six(6), eleven(11);
  return {
      {z, one, z},
      {(a + two) / (six * a * (a + one)),
       (two * a * a + eleven * a - four) / (six * a * (a + two)),
       (two * a + one) * (two * a + one) / (six * (a + one) * (a + two))},
      {z, (two * a + one) / (a * (a + two)), (a * a - one) / (a * (a + two))},
  };
}

RationalMatrix fixture_k3(const Rational& a) {
  // printed with rows/columns ordered [(1^3), (2,1), (3)]; flipped here to
  // the canonical order [(3), (2,1), (1^3)]
  Rational z(0), one(1), two(2), three(3);
  return {
      {one - one / a, one / a, z},
      {two / three, (a - one) / (three * a), one / (three * a)},
      {z, one, z},
  };
}

RationalMatrix fixture_t3(const Rational& a) {
  Rational z(0), one(1), three(3);
  Rational third = one / three;
  Rational split = one / (three * a);
  Rational hold2 = (a - one) / (three * a);  // transpositions
  Rational hold3 = one - one / a;            // 3-cycles
  // rows/columns as printed: id, (12), (13), (23), (123), (132)
  RationalMatrix printed = {
      {z, third, third, third, z, z},
      {split, hold2, z, z, third, third},
      {split, z, hold2, z, third, third},
      {split, z, z, hold2, third, third},
      {z, split, split, split, hold3, z},
      {z, split, split, split, z, hold3},
  };
  // lexicographic one-line order is id, (23), (12), (123), (132), (13)
  const int to_lex[6] = {0, 2, 5, 1, 3, 4};
  RationalMatrix out(6, std::vector<Rational>(6, z));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out[to_lex[i]][to_lex[j]] = printed[i][j];
  return out;
}

std::string check_n3_fixtures(const Rational& alpha) {
  auto theta = jack_theta_table(3, alpha);
  struct Case {
    const char* name;
    RationalMatrix got;
    RationalMatrix expected;
  };
  std::vector<Case> cases;
  cases.push_back({"M", m_chain(3, alpha).rows, fixture_m3(alpha)});
  cases.push_back({"L", l_chain(3, alpha, theta).rows, fixture_l3(alpha)});
  cases.push_back({"K", k_chain(3, alpha).rows, fixture_k3(alpha)});
  cases.push_back({"T", t_chain_toy(3, alpha).rows, fixture_t3(alpha)});
  for (const auto& c : cases) {
    for (std::size_t i = 0; i < c.expected.size(); ++i)
      for (std::size_t j = 0; j < c.expected[i].size(); ++j)
        if (c.got[i][j] != c.expected[i][j])
          return std::string(c.name) + " entry (" + std::to_string(i) + "," +
                 std::to_string(j) + ") got " + c.got[i][j].str() + " expected " +
                 c.expected[i][j].str();
  }
  return {};
}

namespace {

Partition ones_then(std::vector<int> head, int n) {
  int used = 0;
  for (int p : head) used += p;
  for (int i = used; i < n; ++i) head.push_back(1);
  return Partition(std::move(head));
}

}  // namespace

std::string check_two_step_from_identity(int n, const Rational& a) {
  if (n < 5) return "needs n >= 5";
  auto dist = chain_step_distribution(k_chain(n, a), ones_then({}, n), 2);
  Rational pairs = choose2(n);
  Rational nn = Rational(n) * Rational(n - 1);
  struct Expect {
    Partition target;
    Rational value;
  };
  std::vector<Expect> expected;
  expected.push_back({ones_then({}, n), Rational(1) / (a * pairs)});
  expected.push_back({ones_then({2}, n), (a - Rational(1)) / (a * pairs)});
  expected.push_back({ones_then({3}, n), Rational(4) * Rational(n - 2) / nn});
  expected.push_back({ones_then({2, 2}, n), Rational(n - 2) * Rational(n - 3) / nn});
  for (const auto& e : expected)
    if (dist.prob(e.target) != e.value)
      return "target " + e.target.str() + " got " + dist.prob(e.target).str() +
             " expected " + e.value.str();
  return {};
}

std::string check_three_step_from_identity(int n, const Rational& a) {
  if (n < 5) return "needs n >= 5";
  auto dist = chain_step_distribution(k_chain(n, a), ones_then({}, n), 3);
  Rational nr(n);
  Rational expected = Rational(2) *
                      (Rational(3) * a * nr * nr + a * nr + Rational(2) * a * a -
                       Rational(16) * a + Rational(2)) /
                      (a * a * nr * nr * Rational(n - 1) * Rational(n - 1));
  Rational got = dist.prob(ones_then({2}, n));
  if (got != expected) return "got " + got.str() + " expected " + expected.str();
  return {};
}

Rational min_l_diagonal(const TransitionMatrix& l_matrix) {
  Rational best = l_matrix.rows[0][0];
  for (std::size_t i = 1; i < l_matrix.rows.size(); ++i)
    if (l_matrix.rows[i][i] < best) best = l_matrix.rows[i][i];
  return best;
}

VerifySuiteResult run_verify_suite(int max_n, const std::vector<Rational>& alphas) {
  if (max_n > 10)
    throw std::invalid_argument(
        "run_verify_suite: exact cap is n <= 10; larger sweeps belong to the "
        "clt/measure subcommands");
  if (max_n < 2) throw std::invalid_argument("run_verify_suite: max_n must be >= 2");
  for (const auto& a : alphas)
    if (a < Rational(1))
      throw std::invalid_argument("run_verify_suite: alphas must be >= 1");

  VerifySuiteResult out;
  auto add = [&out](std::string name, std::string witness) {
    CheckResult c;
    c.name = std::move(name);
    c.pass = witness.empty();
    c.witness = std::move(witness);
    out.checks.push_back(std::move(c));
  };

  for (const auto& a : alphas) {
    std::string at = " alpha=" + a.str();
    if (max_n >= 3) add("fixture-matrices-n3" + at, check_n3_fixtures(a));
    add("growth-coherence n<=" + std::to_string(max_n) + at,
        check_growth_coherence(max_n, a));
    add("toy-chain-lumping n<=" + std::to_string(std::min(5, max_n)) + at, [&] {
      for (int n = 2; n <= std::min(5, max_n); ++n)
        if (auto w = check_toy_lumping(n, a); !w.empty())
          return "n=" + std::to_string(n) + ": " + w;
      return std::string{};
    }());

    for (int n = 2; n <= max_n; ++n) {
      std::string tag = " n=" + std::to_string(n) + at;
      auto theta = jack_theta_table(n, a);
      auto m_matrix = m_chain(n, a);
      auto l_matrix = l_chain(n, a, theta);
      auto k_matrix = k_chain(n, a);
      auto pi = jack_distribution(n, a);

      add("theta-orthogonality-rows" + tag, check_theta_orthogonality_rows(theta));
      add("theta-orthogonality-columns" + tag, check_theta_orthogonality_cols(theta));
      add("theta-special-values" + tag, check_theta_special_values(theta));
      add("branching-adjoint-expansion" + tag, [&] {
        auto res = verify_p1perp_pieri(n, a);
        return res.max_abs_diff.is_zero()
                   ? std::string{}
                   : res.witness + " residual " + res.max_abs_diff.str();
      }());
      add("chain-row-sums" + tag, [&] {
        if (auto w = check_row_sums(m_matrix); !w.empty()) return "M: " + w;
        if (auto w = check_row_sums(l_matrix); !w.empty()) return "L: " + w;
        if (auto w = check_row_sums(k_matrix); !w.empty()) return "K: " + w;
        return std::string{};
      }());
      add("chain-entry-signs" + tag, [&] {
        if (auto w = check_chain_signs(m_matrix); !w.empty()) return "M: " + w;
        if (auto w = check_chain_signs(l_matrix); !w.empty()) return "L: " + w;
        if (auto w = check_chain_signs(k_matrix); !w.empty()) return "K: " + w;
        return std::string{};
      }());
      add("reversibility-downup" + tag, check_reversibility(m_matrix, pi));
      add("reversibility-theta-chain" + tag, check_reversibility(l_matrix, pi));
      add("reversibility-metropolis" + tag,
          check_reversibility(k_matrix, k_stationary(n, a)));
      add("offdiagonal-ratio" + tag, check_offdiagonal_ratio(m_matrix, l_matrix));
      add("metropolis-spectral-identity r<=3" + tag, [&] {
        for (int r = 0; r <= 3; ++r) {
          auto res = hanlon_identity_check(n, a, r, theta);
          if (!res.max_abs_diff.is_zero())
            return "r=" + std::to_string(r) + " " + res.witness + " residual " +
                   res.max_abs_diff.str();
        }
        return std::string{};
      }());
      add("conditional-mean-eigenvector" + tag, [&] {
        auto res = conditional_mean_eigencheck(n, a);
        return res.max_abs_diff.is_zero()
                   ? std::string{}
                   : res.witness + " residual " + res.max_abs_diff.str();
      }());
      if (n <= 6) {
        add("theta-column-eigenvectors" + tag, [&] {
          for (const auto& nu : theta.index) {
            auto res = general_eigencheck(nu, m_matrix, l_matrix, theta);
            if (!res.max_abs_diff.is_zero())
              return res.witness + " residual " + res.max_abs_diff.str();
          }
          return std::string{};
        }());
      }
      if (n >= 4) {
        add("conditional-second-moment-closed-form" + tag, [&] {
          for (const auto& lam : theta.index) {
            Rational closed = conditional_second_moment(lam, theta);
            Rational direct = conditional_second_moment_direct(lam, l_matrix);
            if (closed != direct)
              return "lambda=" + lam.str() + " closed " + closed.str() + " direct " +
                     direct.str();
          }
          return std::string{};
        }());
      }
      if (n >= 5) {
        add("squared-error-term-closed-form" + tag, [&] {
          auto rep = stein_error_term1(n, a);
          return rep.computed == rep.formula
                     ? std::string{}
                     : "computed " + rep.computed.str() + " formula " + rep.formula.str();
        }());
        add("two-step-from-identity" + tag, check_two_step_from_identity(n, a));
        add("three-step-from-identity" + tag, check_three_step_from_identity(n, a));
      }
      add("moment-equalities r<=6" + tag, [&] {
        Rational scale = a * choose2(n);
        for (int r = 0; r <= 6; ++r) {
          auto rep = moments(n, a, r);
          if (rep.via_chain != rep.direct)
            return "r=" + std::to_string(r) + " chain " + rep.via_chain.str() +
                   " direct " + rep.direct.str();
          if (r == 1 && rep.direct != Rational(0)) return std::string("mean not zero");
          if (r == 2 && rep.direct != scale) return std::string("variance not one");
          if (r == 3 && rep.normalized_squared !=
                            (a - Rational(1)) * (a - Rational(1)) / scale)
            return std::string("third moment mismatch");
        }
        return std::string{};
      }());
      add("tail-bounds" + tag, [&] {
        auto rep = tail_bound_check(n, a);
        if (!rep.row_ok)
          return "row tail " + rep.row_tail.str() + " bound " + format_double(rep.row_bound);
        if (!rep.col_ok)
          return "col tail " + rep.col_tail.str() + " bound " + format_double(rep.col_bound);
        return std::string{};
      }());
      add("measure-duality" + tag, check_measure_duality(n, a));
      add("w-duality" + tag, check_w_duality(n, a));

      out.notes.push_back("min diagonal of the theta chain" + tag + ": " +
                          min_l_diagonal(l_matrix).str() +
                          " (sign recorded, never asserted)");
    }
  }
  return out;
}

}  // namespace jackstein
