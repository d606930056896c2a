#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jackstein/rational.hpp"

namespace jackstein {

// Integer partition: weakly decreasing positive parts. The empty partition
// is the unique partition of 0. Everything in this library is indexed by
// partitions, in the canonical order defined below.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Text forms "[3,2]", "[2,1^3]", "[]". Exponent shorthand is accepted on
  // input only; str() always prints the plain comma-separated form.
  static std::optional<Partition> parse(std::string_view text);
  std::string str() const;

  int size() const { return size_; }                       // |lambda|
  int num_parts() const { return static_cast<int>(parts_.size()); }  // l(lambda)
  const std::vector<int>& parts() const { return parts_; }
  // 1-based part access; rows beyond l(lambda) are 0.
  int part(int row) const {
    return (row >= 1 && row <= num_parts()) ? parts_[row - 1] : 0;
  }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  int multiplicity(int part_size) const;
  // Appends/removes with re-validation; used by corner enumeration.
  bool contains_cell(int row, int col) const {
    return row >= 1 && col >= 1 && part(row) >= col;
  }

  // Total order: by size, then canonical order within a size (so ordered
  // maps over partitions of fixed n iterate in canonical order).
  friend bool operator<(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct CellStats {
  int arm = 0;
  int leg = 0;
};

// Arm and leg of the cell (row, col), 1-based. Throws std::out_of_range for
// cells outside the diagram.
CellStats arm_leg(const Partition& lambda, int row, int col);

// n(lambda) = sum (i-1) * lambda_i.
long n_stat(const Partition& lambda);

// z_lambda = prod i^{m_i} m_i!, the centralizer size of the cycle type.
Rational z_stat(const Partition& lambda);

// c_lambda(alpha)  = prod over cells (alpha*arm + leg + 1)
// c'_lambda(alpha) = prod over cells (alpha*arm + leg + alpha)
// Both require alpha > 0.
Rational c_product(const Partition& lambda, const Rational& alpha);
Rational c_prime_product(const Partition& lambda, const Rational& alpha);

// dim_alpha(lambda) = n! alpha^n / c'_lambda(alpha); at alpha = 1 this is
// the number of standard Young tableaux of shape lambda.
Rational dim_alpha(const Partition& lambda, const Rational& alpha);

// All partitions of n, each exactly once, in canonical order:
// reverse-lexicographic, largest first. This linearly extends dominance
// (dominance-larger shapes come first) and is the single index order used
// by every matrix and distribution in the library.
std::vector<Partition> enumerate_partitions(int n);

// Number of partitions of n via the pentagonal-number recurrence.
Rational partition_count(int n);

enum class Dominance { less_or_equal, greater, incomparable };

// Dominance comparison of two partitions of the same size (throws on size
// mismatch). Equal partitions compare less_or_equal.
Dominance dominance_compare(const Partition& mu, const Partition& nu);

// psi'_{lambda/tau}(alpha) for a single-box skew tau subset lambda,
// |lambda| - |tau| = 1: the branching weight
//   prod over cells s in (column of the new box minus its row) of
//   (alpha a_lambda(s) + l_lambda(s) + 1)/(alpha a_lambda(s) + l_lambda(s) + alpha)
// * (alpha a_tau(s) + l_tau(s) + alpha)/(alpha a_tau(s) + l_tau(s) + 1).
// Empty products give 1. Throws if (lambda, tau) is not a single-box skew.
Rational psi_prime(const Partition& lambda, const Partition& tau, const Rational& alpha);

// Shapes obtained by adding one box (in increasing row order).
std::vector<Partition> addable_shapes(const Partition& lambda);
// Shapes obtained by removing one box.
std::vector<Partition> removable_shapes(const Partition& lambda);

}  // namespace jackstein
