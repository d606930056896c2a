#include "jackstein/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jackstein {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::optional<Partition> Partition::parse(std::string_view text) {
  auto skip_ws = [&](std::size_t& i) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  std::size_t i = 0;
  skip_ws(i);
  if (i >= text.size() || text[i] != '[') return std::nullopt;
  ++i;
  std::vector<int> parts;
  skip_ws(i);
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws(i);
      std::size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i) return std::nullopt;
      long v = std::stol(std::string(text.substr(i, j - i)));
      i = j;
      long e = 1;
      skip_ws(i);
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws(i);
        j = i;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == i) return std::nullopt;
        e = std::stol(std::string(text.substr(i, j - i)));
        i = j;
        skip_ws(i);
      }
      if (v < 1 || e < 1 || v > 1000000 || e > 1000000) return std::nullopt;
      for (long k = 0; k < e; ++k) parts.push_back(static_cast<int>(v));
      if (i >= text.size()) return std::nullopt;
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ']') {
        ++i;
        break;
      }
      return std::nullopt;
    }
  }
  skip_ws(i);
  if (i != text.size()) return std::nullopt;
  for (std::size_t k = 0; k + 1 < parts.size(); ++k)
    if (parts[k] < parts[k + 1]) return std::nullopt;
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ']';
  return s;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> conj(parts_[0], 0);
  for (int col = 1; col <= parts_[0]; ++col) {
    int cnt = 0;
    for (int p : parts_)
      if (p >= col) ++cnt;
    conj[col - 1] = cnt;
  }
  return Partition(std::move(conj));
}

int Partition::multiplicity(int part_size) const {
  int cnt = 0;
  for (int p : parts_)
    if (p == part_size) ++cnt;
  return cnt;
}

bool operator<(const Partition& a, const Partition& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  // canonical within a size: reverse-lexicographic, largest first
  return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                      a.parts_.begin(), a.parts_.end());
}

CellStats arm_leg(const Partition& lambda, int row, int col) {
  if (!lambda.contains_cell(row, col))
    throw std::out_of_range("arm_leg: cell (" + std::to_string(row) + "," +
                            std::to_string(col) + ") outside diagram of " + lambda.str());
  CellStats s;
  s.arm = lambda.part(row) - col;
  int below = 0;
  for (int i = row + 1; lambda.part(i) >= col; ++i) ++below;
  s.leg = below;
  return s;
}

long n_stat(const Partition& lambda) {
  long total = 0;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size(); ++i) total += static_cast<long>(i) * p[i];
  return total;
}

Rational z_stat(const Partition& lambda) {
  Rational z(1);
  const auto& p = lambda.parts();
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    int m = static_cast<int>(j - i);
    z *= Rational(static_cast<long long>(p[i])).pow(m) * factorial(m);
    i = j;
  }
  return z;
}

namespace {

void require_positive_alpha(const Rational& alpha, const char* who) {
  if (alpha.sign() <= 0)
    throw std::invalid_argument(std::string(who) + ": alpha must be positive");
}

Rational cell_product(const Partition& lambda, const Rational& alpha, const Rational& plus) {
  Rational prod(1);
  Partition conj = lambda.conjugate();
  for (int row = 1; row <= lambda.num_parts(); ++row) {
    for (int col = 1; col <= lambda.part(row); ++col) {
      int arm = lambda.part(row) - col;
      int leg = conj.part(col) - row;
      prod *= alpha * Rational(arm) + Rational(leg) + plus;
    }
  }
  return prod;
}

}  // namespace

Rational c_product(const Partition& lambda, const Rational& alpha) {
  require_positive_alpha(alpha, "c_product");
  return cell_product(lambda, alpha, Rational(1));
}

Rational c_prime_product(const Partition& lambda, const Rational& alpha) {
  require_positive_alpha(alpha, "c_prime_product");
  return cell_product(lambda, alpha, alpha);
}

Rational dim_alpha(const Partition& lambda, const Rational& alpha) {
  require_positive_alpha(alpha, "dim_alpha");
  int n = lambda.size();
  return factorial(n) * alpha.pow(n) / c_prime_product(lambda, alpha);
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    gen_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  gen_partitions(n, n, prefix, out);
  return out;
}

Rational partition_count(int n) {
  if (n < 0) throw std::invalid_argument("partition_count: n must be >= 0");
  // Euler's pentagonal recurrence: p(n) = sum_k (-1)^{k-1} [p(n-g_k) + p(n-g_{-k})]
  std::vector<Rational> p(n + 1);
  p[0] = Rational(1);
  for (int m = 1; m <= n; ++m) {
    Rational total(0);
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      Rational sign((k % 2) ? 1 : -1);
      if (g1 <= m) total += sign * p[m - g1];
      if (g2 <= m) total += sign * p[m - g2];
    }
    p[m] = total;
  }
  return p[n];
}

Dominance dominance_compare(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size())
    throw std::invalid_argument("dominance_compare: partitions of different sizes");
  long sum_mu = 0, sum_nu = 0;
  bool mu_leq = true, nu_leq = true;
  int len = std::max(mu.num_parts(), nu.num_parts());
  for (int i = 1; i <= len; ++i) {
    sum_mu += mu.part(i);
    sum_nu += nu.part(i);
    if (sum_mu > sum_nu) mu_leq = false;
    if (sum_nu > sum_mu) nu_leq = false;
  }
  if (mu_leq) return Dominance::less_or_equal;
  if (nu_leq) return Dominance::greater;
  return Dominance::incomparable;
}

Rational psi_prime(const Partition& lambda, const Partition& tau, const Rational& alpha) {
  require_positive_alpha(alpha, "psi_prime");
  if (lambda.size() != tau.size() + 1)
    throw std::invalid_argument("psi_prime: |lambda| - |tau| must be 1");
  int box_row = 0;
  for (int i = 1; i <= lambda.num_parts(); ++i) {
    if (lambda.part(i) == tau.part(i)) continue;
    if (lambda.part(i) == tau.part(i) + 1 && box_row == 0) {
      box_row = i;
    } else {
      throw std::invalid_argument("psi_prime: not a single-box skew");
    }
  }
  if (box_row == 0) throw std::invalid_argument("psi_prime: not a single-box skew");

  int box_col = lambda.part(box_row);
  // Cells above the new box in its column; for each, arms agree between
  // lambda and tau and legs drop by one.
  Rational prod(1);
  for (int i = 1; i < box_row; ++i) {
    Rational arm(lambda.part(i) - box_col);
    Rational leg_lambda(box_row - i);
    Rational leg_tau(box_row - 1 - i);
    prod *= (alpha * arm + leg_lambda + Rational(1)) / (alpha * arm + leg_lambda + alpha);
    prod *= (alpha * arm + leg_tau + alpha) / (alpha * arm + leg_tau + Rational(1));
  }
  return prod;
}

std::vector<Partition> addable_shapes(const Partition& lambda) {
  std::vector<Partition> out;
  const auto& p = lambda.parts();
  for (int row = 1; row <= lambda.num_parts() + 1; ++row) {
    if (row == 1 || lambda.part(row) < lambda.part(row - 1)) {
      std::vector<int> q = p;
      if (row <= lambda.num_parts())
        q[row - 1] += 1;
      else
        q.push_back(1);
      out.emplace_back(std::move(q));
    }
  }
  return out;
}

std::vector<Partition> removable_shapes(const Partition& lambda) {
  std::vector<Partition> out;
  const auto& p = lambda.parts();
  for (int row = 1; row <= lambda.num_parts(); ++row) {
    if (row == lambda.num_parts() || lambda.part(row) > lambda.part(row + 1)) {
      std::vector<int> q = p;
      q[row - 1] -= 1;
      if (q[row - 1] == 0) q.erase(q.begin() + (row - 1));
      out.emplace_back(std::move(q));
    }
  }
  return out;
}

}  // namespace jackstein
