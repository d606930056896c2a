#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "jackstein/chains.hpp"
#include "jackstein/partition.hpp"
#include "jackstein/rational.hpp"

namespace jackstein {

// Growth trajectory from the empty shape: consecutive shapes differ by one
// box and the final shape is Jack_alpha distributed.
struct GrowthPath {
  std::vector<Partition> shapes;  // shapes[k] has size k
  const Partition& final_shape() const { return shapes.back(); }
};

// The generator behind every sampler. std::mt19937_64 is pinned by the
// C++ standard, so seeded runs are reproducible across platforms and
// library versions; uniform draws below avoid std::uniform_* distributions
// for the same reason.
using SampleRng = std::mt19937_64;

// Uniform draw from {0, 1, ..., 2^53 - 1} / 2^53 as an exact rational, so
// selection against exact cumulative probabilities needs no floating point.
Rational draw_u53(SampleRng& rng);

// Sequential exact sampler for Jack_alpha measure (alpha > 0): walks up the
// partition growth graph with locally computed box-addition probabilities.
// Per-shape transition tables are memoized, so repeated sampling is cheap.
class GrowthSampler {
 public:
  explicit GrowthSampler(Rational alpha);

  GrowthPath grow(int n, SampleRng& rng);

  // lambda from Jack_alpha by growth, lambda* by one M_alpha step
  // (down one level, then up), giving an exchangeable pair. alpha >= 1.
  std::pair<Partition, Partition> exchangeable_pair(int n, SampleRng& rng);

  const Rational& alpha() const { return alpha_; }

 private:
  using CumulativeTable = std::vector<std::pair<Partition, Rational>>;
  const CumulativeTable& up_table(const Partition& from);
  const CumulativeTable& down_table(const Partition& from);
  static const Partition& pick(const CumulativeTable& table, SampleRng& rng);

  Rational alpha_;
  std::map<Partition, CumulativeTable> up_tables_;
  std::map<Partition, CumulativeTable> down_tables_;
};

}  // namespace jackstein
