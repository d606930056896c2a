#include "jackstein/chains.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jackstein {

namespace {

void require_alpha_at_least_one(const Rational& alpha, const char* who) {
  if (alpha < Rational(1))
    throw std::invalid_argument(
        std::string(who) +
        ": requires alpha >= 1; for alpha < 1 use the conjugation duality "
        "(run at 1/alpha and conjugate all shapes)");
}

std::map<Partition, int> position_map(const std::vector<Partition>& index) {
  std::map<Partition, int> pos;
  for (std::size_t i = 0; i < index.size(); ++i) pos[index[i]] = static_cast<int>(i);
  return pos;
}

}  // namespace

const Rational& DistOverPartitions::prob(const Partition& p) const {
  for (std::size_t i = 0; i < index.size(); ++i)
    if (index[i] == p) return probs[i];
  throw std::invalid_argument("DistOverPartitions: " + p.str() + " not of degree " +
                              std::to_string(n));
}

int TransitionMatrix::index_of(const Partition& p) const {
  for (std::size_t i = 0; i < index.size(); ++i)
    if (index[i] == p) return static_cast<int>(i);
  throw std::invalid_argument("TransitionMatrix: " + p.str() + " not of degree " +
                              std::to_string(n));
}

Rational jack_measure(const Partition& lambda, const Rational& alpha) {
  if (alpha.sign() <= 0)
    throw std::invalid_argument("jack_measure: alpha must be positive");
  int n = lambda.size();
  return alpha.pow(n) * factorial(n) /
         (c_product(lambda, alpha) * c_prime_product(lambda, alpha));
}

DistOverPartitions jack_distribution(int n, const Rational& alpha) {
  if (n < 0) throw std::invalid_argument("jack_distribution: n must be >= 0");
  if (alpha.sign() <= 0)
    throw std::invalid_argument("jack_distribution: alpha must be positive");
  DistOverPartitions d;
  d.n = n;
  d.alpha = alpha;
  d.index = enumerate_partitions(n);
  d.probs.reserve(d.index.size());
  for (const auto& lam : d.index) d.probs.push_back(jack_measure(lam, alpha));
  return d;
}

std::vector<std::pair<Partition, Rational>> up_transition(const Partition& lambda,
                                                          const Rational& alpha) {
  if (alpha.sign() <= 0)
    throw std::invalid_argument("up_transition: alpha must be positive");
  Rational c_lam = c_product(lambda, alpha);
  std::vector<std::pair<Partition, Rational>> out;
  for (auto& big : addable_shapes(lambda)) {
    Rational p = psi_prime(big, lambda, alpha) * c_lam / c_product(big, alpha);
    out.emplace_back(std::move(big), std::move(p));
  }
  return out;
}

std::vector<std::pair<Partition, Rational>> down_transition(const Partition& lambda,
                                                            const Rational& alpha) {
  if (alpha.sign() <= 0)
    throw std::invalid_argument("down_transition: alpha must be positive");
  if (lambda.size() == 0)
    throw std::invalid_argument("down_transition: empty partition has no boxes");
  Rational cp_lam = c_prime_product(lambda, alpha);
  Rational denom = alpha * Rational(lambda.size());
  std::vector<std::pair<Partition, Rational>> out;
  for (auto& small : removable_shapes(lambda)) {
    Rational p = psi_prime(lambda, small, alpha) * cp_lam /
                 (denom * c_prime_product(small, alpha));
    out.emplace_back(std::move(small), std::move(p));
  }
  return out;
}

std::vector<std::pair<Partition, Rational>> m_transition_row(const Partition& lambda,
                                                             const Rational& alpha) {
  int n = lambda.size();
  if (n < 2) throw std::invalid_argument("m_transition_row: |lambda| must be >= 2");
  require_alpha_at_least_one(alpha, "m_transition_row");

  std::map<Partition, Rational> acc;
  for (const auto& tau : removable_shapes(lambda)) {
    Rational w = psi_prime(lambda, tau, alpha) * c_product(tau, alpha) /
                 c_prime_product(tau, alpha);
    for (const auto& rho : addable_shapes(tau)) {
      Rational term = w * psi_prime(rho, tau, alpha);
      auto [it, inserted] = acc.emplace(rho, term);
      if (!inserted) it->second += term;
    }
  }
  Rational front = c_prime_product(lambda, alpha) / (alpha * Rational(n));
  std::vector<std::pair<Partition, Rational>> out;
  out.reserve(acc.size());
  for (auto& [rho, v] : acc)
    out.emplace_back(rho, front * v / c_product(rho, alpha));
  return out;
}

TransitionMatrix m_chain(int n, const Rational& alpha) {
  if (n < 2) throw std::invalid_argument("m_chain: n must be >= 2");
  require_alpha_at_least_one(alpha, "m_chain");
  TransitionMatrix t;
  t.n = n;
  t.alpha = alpha;
  t.kind = ChainKind::M;
  t.index = enumerate_partitions(n);
  auto pos = position_map(t.index);
  t.rows.assign(t.index.size(), std::vector<Rational>(t.index.size(), Rational(0)));
  for (std::size_t i = 0; i < t.index.size(); ++i)
    for (const auto& [rho, p] : m_transition_row(t.index[i], alpha))
      t.rows[i][pos.at(rho)] = p;
  return t;
}

TransitionMatrix l_chain(int n, const Rational& alpha, const ThetaTable& theta) {
  if (n < 2) throw std::invalid_argument("l_chain: n must be >= 2");
  require_alpha_at_least_one(alpha, "l_chain");
  if (theta.n != n || theta.alpha != alpha)
    throw std::invalid_argument("l_chain: theta table does not match (n, alpha)");

  TransitionMatrix t;
  t.n = n;
  t.alpha = alpha;
  t.kind = ChainKind::L;
  t.index = theta.index;
  const std::size_t count = t.index.size();

  int hook_idx = theta.index_of(Partition(std::vector<int>{n - 1, 1}));

  std::vector<Rational> mu_weight(count);  // z_mu^2 alpha^{2 l(mu)} theta^{(n-1,1)}_mu
  for (std::size_t j = 0; j < count; ++j) {
    Rational z = z_stat(t.index[j]);
    mu_weight[j] = z * z * alpha.pow(2 * t.index[j].num_parts()) * theta.values[hook_idx][j];
  }
  Rational nf = alpha.pow(n) * factorial(n);

  t.rows.assign(count, std::vector<Rational>(count, Rational(0)));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t r = 0; r < count; ++r) {
      Rational s(0);
      for (std::size_t j = 0; j < count; ++j) {
        if (theta.values[i][j].is_zero() || theta.values[r][j].is_zero()) continue;
        s += mu_weight[j] * theta.values[i][j] * theta.values[r][j];
      }
      t.rows[i][r] = s / (c_product(t.index[r], alpha) *
                          c_prime_product(t.index[r], alpha) * nf);
    }
  }
  return t;
}

TransitionMatrix l_chain(int n, const Rational& alpha) {
  return l_chain(n, alpha, jack_theta_table(n, alpha));
}

TransitionMatrix k_chain(int n, const Rational& alpha) {
  if (n < 2) throw std::invalid_argument("k_chain: n must be >= 2");
  require_alpha_at_least_one(alpha, "k_chain");

  TransitionMatrix t;
  t.n = n;
  t.alpha = alpha;
  t.kind = ChainKind::K;
  t.index = enumerate_partitions(n);
  auto pos = position_map(t.index);
  const std::size_t count = t.index.size();
  t.rows.assign(count, std::vector<Rational>(count, Rational(0)));

  Rational pairs = choose2(n);
  for (std::size_t i = 0; i < count; ++i) {
    const Partition& mu = t.index[i];
    auto& row = t.rows[i];

    // hold: every transposition changes the cycle count, so the diagonal is
    // exactly the Metropolis rejection mass (alpha - 1) n(mu') / (alpha C(n,2))
    row[i] += (alpha - Rational(1)) * Rational(n_stat(mu.conjugate())) / (alpha * pairs);

    std::vector<int> distinct;
    for (int p : mu.parts())
      if (distinct.empty() || distinct.back() != p) distinct.push_back(p);

    // merges: two cycles of lengths a and b fuse into one of length a+b;
    // a*b transpositions realize each unordered pair of cycles
    for (std::size_t ai = 0; ai < distinct.size(); ++ai) {
      for (std::size_t bi = ai; bi < distinct.size(); ++bi) {
        int a = distinct[ai], b = distinct[bi];
        long ways;
        if (a == b) {
          long m = mu.multiplicity(a);
          if (m < 2) continue;
          ways = m * (m - 1) / 2 * static_cast<long>(a) * b;
        } else {
          ways = static_cast<long>(mu.multiplicity(a)) * mu.multiplicity(b) *
                 static_cast<long>(a) * b;
        }
        std::vector<int> q = mu.parts();
        q.erase(std::find(q.begin(), q.end(), a));
        q.erase(std::find(q.begin(), q.end(), b));
        q.push_back(a + b);
        std::sort(q.rbegin(), q.rend());
        row[pos.at(Partition(std::move(q)))] += Rational(ways) / pairs;
      }
    }

    // splits: a cycle of length c breaks into (a, c-a); c transpositions if
    // the halves differ, c/2 if a = c - a; each accepted with extra 1/alpha
    for (int c : distinct) {
      if (c < 2) continue;
      long mult = mu.multiplicity(c);
      for (int a = 1; 2 * a <= c; ++a) {
        long ways = (2 * a == c) ? c / 2 : c;
        std::vector<int> q = mu.parts();
        q.erase(std::find(q.begin(), q.end(), c));
        q.push_back(a);
        q.push_back(c - a);
        std::sort(q.rbegin(), q.rend());
        row[pos.at(Partition(std::move(q)))] +=
            Rational(mult * ways) / (alpha * pairs);
      }
    }
  }
  return t;
}

DistOverPartitions k_stationary(int n, const Rational& alpha) {
  if (n < 1) throw std::invalid_argument("k_stationary: n must be >= 1");
  require_alpha_at_least_one(alpha, "k_stationary");
  DistOverPartitions d;
  d.n = n;
  d.alpha = alpha;
  d.index = enumerate_partitions(n);
  Rational total(0);
  for (const auto& mu : d.index) {
    Rational w = factorial(n) / (z_stat(mu) * alpha.pow(mu.num_parts()));
    d.probs.push_back(w);
    total += w;
  }
  for (auto& p : d.probs) p /= total;
  return d;
}

Partition cycle_type(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j] - 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

ToyMetropolisChain t_chain_toy(int n, const Rational& alpha) {
  if (n < 2 || n > 5)
    throw std::invalid_argument("t_chain_toy: n must be in [2, 5] (state-space guard)");
  require_alpha_at_least_one(alpha, "t_chain_toy");

  ToyMetropolisChain t;
  t.n = n;
  t.alpha = alpha;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::map<std::vector<int>, int> pos;
  do {
    pos[p] = static_cast<int>(t.perms.size());
    t.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  Rational pairs = choose2(n);
  const std::size_t count = t.perms.size();
  t.rows.assign(count, std::vector<Rational>(count, Rational(0)));
  for (std::size_t i = 0; i < count; ++i) {
    const auto& x = t.perms[i];
    int cx = cycle_type(x).num_parts();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        std::vector<int> y = x;
        std::swap(y[a], y[b]);  // y = x * (a b)
        int cy = cycle_type(y).num_parts();
        if (cy == cx - 1) {
          t.rows[i][pos.at(y)] += Rational(1) / pairs;
        } else {
          t.rows[i][pos.at(y)] += Rational(1) / (alpha * pairs);
        }
      }
    }
    t.rows[i][i] = (alpha - Rational(1)) * Rational(n_stat(cycle_type(x).conjugate())) /
                   (alpha * pairs);
  }
  return t;
}

DistOverPartitions chain_step_distribution(const TransitionMatrix& chain,
                                           const Partition& start, int steps) {
  if (steps < 0)
    throw std::invalid_argument("chain_step_distribution: steps must be >= 0");
  if (start.size() != chain.n)
    throw std::invalid_argument("chain_step_distribution: start has wrong size");
  const std::size_t count = chain.index.size();
  std::vector<Rational> v(count, Rational(0));
  v[chain.index_of(start)] = Rational(1);
  for (int s = 0; s < steps; ++s) {
    std::vector<Rational> next(count, Rational(0));
    for (std::size_t i = 0; i < count; ++i) {
      if (v[i].is_zero()) continue;
      for (std::size_t j = 0; j < count; ++j) {
        if (chain.rows[i][j].is_zero()) continue;
        next[j] += v[i] * chain.rows[i][j];
      }
    }
    v = std::move(next);
  }
  DistOverPartitions d;
  d.n = chain.n;
  d.alpha = chain.alpha;
  d.index = chain.index;
  d.probs = std::move(v);
  return d;
}

IdentityResidual hanlon_identity_check(int n, const Rational& alpha, int r,
                                       const ThetaTable& theta) {
  if (n < 2) throw std::invalid_argument("hanlon_identity_check: n must be >= 2");
  require_alpha_at_least_one(alpha, "hanlon_identity_check");
  if (r < 0) throw std::invalid_argument("hanlon_identity_check: r must be >= 0");
  if (theta.n != n || theta.alpha != alpha)
    throw std::invalid_argument("hanlon_identity_check: theta table mismatch");

  auto chain = k_chain(n, alpha);
  Partition ones(std::vector<int>(n, 1));
  auto lhs = chain_step_distribution(chain, ones, r);

  const std::size_t count = theta.index.size();
  Rational scale = alpha.pow(n) * factorial(n);
  Rational denom = alpha * choose2(n);

  IdentityResidual res;
  res.max_abs_diff = Rational(0);
  for (std::size_t mj = 0; mj < count; ++mj) {
    Rational rhs(0);
    for (std::size_t ri = 0; ri < count; ++ri) {
      const Partition& rho = theta.index[ri];
      Rational eig = (alpha * Rational(n_stat(rho.conjugate())) - Rational(n_stat(rho))) / denom;
      rhs += theta.values[ri][mj] /
             (c_product(rho, alpha) * c_prime_product(rho, alpha)) *
             eig.pow(static_cast<unsigned>(r));
    }
    rhs *= scale;
    Rational diff = (lhs.probs[mj] - rhs).abs();
    if (diff > res.max_abs_diff) {
      res.max_abs_diff = diff;
      res.witness = "mu=" + theta.index[mj].str();
    }
  }
  if (res.max_abs_diff.is_zero()) res.witness.clear();
  return res;
}

}  // namespace jackstein
