#include "jackstein/sampling.hpp"

#include <stdexcept>

namespace jackstein {

Rational draw_u53(SampleRng& rng) {
  unsigned long long bits = rng() >> 11;  // top 53 bits
  mpz_class num(static_cast<unsigned long>(bits >> 32));
  num <<= 32;
  num += static_cast<unsigned long>(bits & 0xffffffffULL);
  mpz_class den(1);
  den <<= 53;
  return Rational(mpq_class(num, den));
}

GrowthSampler::GrowthSampler(Rational alpha) : alpha_(std::move(alpha)) {
  if (alpha_.sign() <= 0)
    throw std::invalid_argument("GrowthSampler: alpha must be positive");
}

const GrowthSampler::CumulativeTable& GrowthSampler::up_table(const Partition& from) {
  auto it = up_tables_.find(from);
  if (it != up_tables_.end()) return it->second;
  CumulativeTable table = up_transition(from, alpha_);
  Rational cum(0);
  for (auto& [shape, p] : table) {
    cum += p;
    p = cum;
  }
  return up_tables_.emplace(from, std::move(table)).first->second;
}

const GrowthSampler::CumulativeTable& GrowthSampler::down_table(const Partition& from) {
  auto it = down_tables_.find(from);
  if (it != down_tables_.end()) return it->second;
  CumulativeTable table = down_transition(from, alpha_);
  Rational cum(0);
  for (auto& [shape, p] : table) {
    cum += p;
    p = cum;
  }
  return down_tables_.emplace(from, std::move(table)).first->second;
}

const Partition& GrowthSampler::pick(const CumulativeTable& table, SampleRng& rng) {
  Rational u = draw_u53(rng);
  for (const auto& [shape, cum] : table)
    if (u < cum) return shape;
  return table.back().first;  // cumulative total is exactly 1 and u < 1
}

GrowthPath GrowthSampler::grow(int n, SampleRng& rng) {
  if (n < 0) throw std::invalid_argument("GrowthSampler::grow: n must be >= 0");
  GrowthPath path;
  path.shapes.reserve(n + 1);
  path.shapes.emplace_back();
  for (int k = 0; k < n; ++k)
    path.shapes.push_back(pick(up_table(path.shapes.back()), rng));
  return path;
}

std::pair<Partition, Partition> GrowthSampler::exchangeable_pair(int n, SampleRng& rng) {
  if (n < 2)
    throw std::invalid_argument("GrowthSampler::exchangeable_pair: n must be >= 2");
  if (alpha_ < Rational(1))
    throw std::invalid_argument(
        "GrowthSampler::exchangeable_pair: requires alpha >= 1; for alpha < 1 "
        "use the conjugation duality");
  Partition lambda = grow(n, rng).final_shape();
  Partition tau = pick(down_table(lambda), rng);
  Partition star = pick(up_table(tau), rng);
  return {std::move(lambda), std::move(star)};
}

}  // namespace jackstein
