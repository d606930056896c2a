#include "jackstein/theta.hpp"

#include <map>
#include <stdexcept>

namespace jackstein {

int ThetaTable::index_of(const Partition& p) const {
  for (std::size_t i = 0; i < index.size(); ++i)
    if (index[i] == p) return static_cast<int>(i);
  throw std::invalid_argument("ThetaTable: partition " + p.str() + " not of degree " +
                              std::to_string(n));
}

const Rational& ThetaTable::theta(const Partition& lambda, const Partition& mu) const {
  return values[index_of(lambda)][index_of(mu)];
}

PowerSumExpr ThetaTable::jack_in_power_sums(const Partition& lambda) const {
  PowerSumExpr f;
  f.degree = n;
  int li = index_of(lambda);
  for (std::size_t j = 0; j < index.size(); ++j) f.add(index[j], values[li][j]);
  return f;
}

RationalMatrix p_to_m_expansion(int n) {
  if (n < 1) throw std::invalid_argument("p_to_m_expansion: n must be >= 1");
  auto index = enumerate_partitions(n);
  std::map<Partition, int> pos;
  for (std::size_t i = 0; i < index.size(); ++i) pos[index[i]] = static_cast<int>(i);

  RationalMatrix rows(index.size(), std::vector<Rational>(index.size(), Rational(0)));
  for (std::size_t mi = 0; mi < index.size(); ++mi) {
    // expand p_mu by multiplying one power sum at a time in the monomial basis
    std::map<Partition, Rational> acc;
    acc[Partition()] = Rational(1);
    for (int r : index[mi].parts()) {
      std::map<Partition, Rational> next;
      for (const auto& [lam, c] : acc) {
        // p_r * m_lam: bump one distinct part value u (or u = 0, a new part)
        // to u + r; the resulting monomial count is the multiplicity of
        // u + r in the target.
        std::vector<int> values = {0};
        for (int p : lam.parts())
          if (values.back() != p) values.push_back(p);
        for (int u : values) {
          std::vector<int> q = lam.parts();
          if (u == 0) {
            q.push_back(r);
          } else {
            for (auto& x : q)
              if (x == u) {
                x = u + r;
                break;
              }
          }
          std::sort(q.rbegin(), q.rend());
          Partition target(std::move(q));
          Rational add = c * Rational(target.multiplicity(u + r));
          auto [it, inserted] = next.emplace(target, add);
          if (!inserted) it->second += add;
        }
      }
      acc = std::move(next);
    }
    for (const auto& [lam, c] : acc) rows[mi][pos.at(lam)] = c;
  }
  return rows;
}

namespace {

// exact Gauss-Jordan inverse
RationalMatrix invert(RationalMatrix a) {
  std::size_t n = a.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("invert: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

MonomialToPowerSum m_to_p_expansion(int n) {
  MonomialToPowerSum out;
  out.n = n;
  out.matrix = invert(p_to_m_expansion(n));
  return out;
}

ThetaTable jack_theta_table(int n, const Rational& alpha) {
  if (n < 1) throw std::invalid_argument("jack_theta_table: n must be >= 1");
  if (alpha.sign() <= 0)
    throw std::invalid_argument("jack_theta_table: alpha must be positive");

  ThetaTable table;
  table.n = n;
  table.alpha = alpha;
  table.index = enumerate_partitions(n);
  const std::size_t count = table.index.size();

  auto m_to_p = m_to_p_expansion(n).matrix;
  std::vector<Rational> weight(count);  // z_mu alpha^{l(mu)}
  for (std::size_t j = 0; j < count; ++j)
    weight[j] = z_stat(table.index[j]) * alpha.pow(table.index[j].num_parts());
  auto inner = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t j = 0; j < count; ++j)
      if (!a[j].is_zero() && !b[j].is_zero()) s += a[j] * b[j] * weight[j];
    return s;
  };

  // Gram-Schmidt from the canonical list's tail (dominance-smallest) up.
  RationalMatrix basis_p(count), basis_m(count);
  std::vector<Rational> norm(count);
  for (std::size_t step = 0; step < count; ++step) {
    std::size_t i = count - 1 - step;
    std::vector<Rational> vp = m_to_p[i];
    std::vector<Rational> vm(count, Rational(0));
    vm[i] = Rational(1);
    for (std::size_t j = i + 1; j < count; ++j) {
      Rational coef = inner(vp, basis_p[j]) / norm[j];
      if (coef.is_zero()) continue;
      for (std::size_t k = 0; k < count; ++k) {
        vp[k] -= coef * basis_p[j][k];
        vm[k] -= coef * basis_m[j][k];
      }
    }
    norm[i] = inner(vp, vp);
    if (norm[i].sign() <= 0)
      throw std::logic_error("jack_theta_table: non-positive self inner product");
    basis_p[i] = std::move(vp);
    basis_m[i] = std::move(vm);
  }

  // Rescale so the coefficient of p_{(1^n)} is exactly 1 (the column of
  // (1^n) is the last canonical index).
  const std::size_t ones = count - 1;
  table.values.resize(count);
  table.monomial.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (basis_p[i][ones].is_zero())
      throw std::logic_error("jack_theta_table: vanishing p_{(1^n)} coefficient");
    Rational scale = basis_p[i][ones].inverse();
    table.values[i].resize(count);
    table.monomial[i].resize(count);
    for (std::size_t j = 0; j < count; ++j) {
      table.values[i][j] = basis_p[i][j] * scale;
      table.monomial[i][j] = basis_m[i][j] * scale;
    }
  }
  return table;
}

PieriResidual verify_p1perp_pieri(int n, const Rational& alpha) {
  if (n < 2) throw std::invalid_argument("verify_p1perp_pieri: n must be >= 2");
  ThetaTable upper = jack_theta_table(n, alpha);
  ThetaTable lower = jack_theta_table(n - 1, alpha);

  PieriResidual res;
  res.max_abs_diff = Rational(0);
  for (const auto& lambda : upper.index) {
    auto lhs_opt = p1_perp(upper.jack_in_power_sums(lambda), alpha);
    PowerSumExpr lhs = *lhs_opt;

    PowerSumExpr rhs;
    rhs.degree = n - 1;
    Rational cpl = c_prime_product(lambda, alpha);
    for (const auto& tau : removable_shapes(lambda)) {
      Rational w = cpl * psi_prime(lambda, tau, alpha) / c_prime_product(tau, alpha);
      PowerSumExpr jt = lower.jack_in_power_sums(tau);
      for (const auto& [mu, c] : jt.coeffs) rhs.add(mu, w * c);
    }

    for (const auto& mu : lower.index) {
      Rational diff = (lhs.coeff(mu) - rhs.coeff(mu)).abs();
      if (diff > res.max_abs_diff) {
        res.max_abs_diff = diff;
        res.witness = "lambda=" + lambda.str() + " mu=" + mu.str();
      }
    }
  }
  if (res.max_abs_diff.is_zero()) res.witness.clear();
  return res;
}

}  // namespace jackstein
