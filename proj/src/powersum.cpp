#include "jackstein/powersum.hpp"

#include <stdexcept>

namespace jackstein {

void PowerSumExpr::add(const Partition& mu, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

Rational alpha_inner(const PowerSumExpr& f, const PowerSumExpr& g, const Rational& alpha) {
  if (alpha.sign() <= 0) throw std::invalid_argument("alpha_inner: alpha must be positive");
  if (f.degree != g.degree)
    throw std::invalid_argument("alpha_inner: degree mismatch");
  Rational total(0);
  for (const auto& [mu, fc] : f.coeffs) {
    auto it = g.coeffs.find(mu);
    if (it == g.coeffs.end()) continue;
    total += fc * it->second * z_stat(mu) * alpha.pow(mu.num_parts());
  }
  return total;
}

std::optional<PowerSumExpr> p1_perp(const PowerSumExpr& f, const Rational& alpha) {
  if (f.degree == 0) return std::nullopt;
  PowerSumExpr out;
  out.degree = f.degree - 1;
  for (const auto& [mu, c] : f.coeffs) {
    int m1 = mu.multiplicity(1);
    if (m1 == 0) continue;
    std::vector<int> q = mu.parts();
    q.pop_back();  // parts are weakly decreasing, so last part is a 1
    out.add(Partition(std::move(q)), alpha * Rational(m1) * c);
  }
  return out;
}

PowerSumExpr multiply_by_p1(const PowerSumExpr& f) {
  PowerSumExpr out;
  out.degree = f.degree + 1;
  for (const auto& [mu, c] : f.coeffs) {
    std::vector<int> q = mu.parts();
    q.push_back(1);
    out.add(Partition(std::move(q)), c);
  }
  return out;
}

}  // namespace jackstein
