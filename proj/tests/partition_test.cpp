#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jackstein/partition.hpp"
#include "jackstein/rational.hpp"
#include "oracles.hpp"

using namespace jackstein;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(2, -6).str() == "-1/3");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational::parse("3/4").value() == Rational(3, 4));
  CHECK(Rational::parse("  -12 ").value() == Rational(-12));
  CHECK(Rational::parse("6/4").value().str() == "3/2");
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("x"));
  CHECK(!Rational::parse("1.5"));
  CHECK(Rational(3, 2).pow(3) == Rational(27, 8));
  CHECK(Rational(-1, 2).abs() == Rational(1, 2));
  CHECK(Rational(5, 3).inverse() == Rational(3, 5));
  CHECK(factorial(5) == Rational(120));
  CHECK(choose2(10) == Rational(45));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("partition parse and print") {
  CHECK(Partition::parse("[3,2]").value() == P({3, 2}));
  CHECK(Partition::parse("[2,1^3]").value() == P({2, 1, 1, 1}));
  CHECK(Partition::parse("[]").value() == Partition());
  CHECK(Partition::parse("[ 4 , 2^2 , 1 ]").value() == P({4, 2, 2, 1}));
  CHECK(!Partition::parse("[1,2]"));  // must be weakly decreasing
  CHECK(!Partition::parse("[0]"));
  CHECK(!Partition::parse("3,2"));
  CHECK(!Partition::parse("[3,2] x"));
  CHECK(P({3, 2}).str() == "[3,2]");
  CHECK(Partition().str() == "[]");
  CHECK_THROWS_AS(P({2, 3}), std::invalid_argument);
}

TEST_CASE("conjugation") {
  CHECK(P({3, 2}).conjugate() == P({2, 2, 1}));
  CHECK(P({5}).conjugate() == P({1, 1, 1, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
  for (int n = 0; n <= 12; ++n)
    for (const auto& lam : enumerate_partitions(n))
      CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("arm and leg") {
  auto s = arm_leg(P({3, 2}), 1, 1);
  CHECK(s.arm == 2);
  CHECK(s.leg == 1);
  s = arm_leg(P({3, 2}), 1, 3);
  CHECK(s.arm == 0);
  CHECK(s.leg == 0);
  s = arm_leg(P({1, 1, 1}), 1, 1);
  CHECK(s.arm == 0);
  CHECK(s.leg == 2);
  CHECK_THROWS_AS(arm_leg(P({3, 2}), 2, 3), std::out_of_range);
  CHECK_THROWS_AS(arm_leg(P({3, 2}), 0, 1), std::out_of_range);
}

TEST_CASE("n_stat and its conjugate identity") {
  CHECK(n_stat(P({3})) == 0);
  CHECK(n_stat(P({1, 1, 1})) == 3);
  CHECK(n_stat(P({2, 1})) == 1);
  for (int n = 0; n <= 12; ++n) {
    for (const auto& lam : enumerate_partitions(n)) {
      long binom_sum = 0;
      for (int p : lam.parts()) binom_sum += static_cast<long>(p) * (p - 1) / 2;
      CHECK(n_stat(lam.conjugate()) == binom_sum);
    }
  }
}

TEST_CASE("z statistic") {
  CHECK(z_stat(P({1, 1, 1, 1})) == factorial(4));
  CHECK(z_stat(P({7})) == Rational(7));
  CHECK(z_stat(P({2, 1})) == Rational(2));
  CHECK(z_stat(Partition()) == Rational(1));
}

TEST_CASE("deformed hook products") {
  Rational a(2);
  CHECK(c_product(P({1}), a) == Rational(1));
  CHECK(c_prime_product(P({1}), a) == a);
  CHECK(c_product(P({2}), Rational(2)) == Rational(3));
  CHECK(c_prime_product(P({2}), Rational(2)) == Rational(8));

  // at alpha = 1 both products equal the hook-length product
  Rational hooks(1);
  Partition lam({3, 2});
  Partition conj = lam.conjugate();
  for (int row = 1; row <= lam.num_parts(); ++row)
    for (int col = 1; col <= lam.part(row); ++col)
      hooks *= Rational((lam.part(row) - col) + (conj.part(col) - row) + 1);
  CHECK(hooks == Rational(24));  // hook lengths 4,3,1,2,1
  CHECK(c_product(lam, Rational(1)) == hooks);
  CHECK(c_prime_product(lam, Rational(1)) == hooks);
  CHECK(c_product(lam, Rational(1)) * c_prime_product(lam, Rational(1)) == Rational(576));

  CHECK_THROWS_AS(c_product(lam, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(c_prime_product(lam, Rational(-2)), std::invalid_argument);
}

TEST_CASE("conjugation swaps the two hook products") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& alpha : {Rational(1), Rational(3, 2), Rational(2)}) {
      Rational inv = alpha.inverse();
      for (const auto& lam : enumerate_partitions(n)) {
        CHECK(c_product(lam, alpha) ==
              c_prime_product(lam.conjugate(), inv) * alpha.pow(n));
      }
    }
  }
}

TEST_CASE("enumeration order") {
  auto p3 = enumerate_partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == P({3}));
  CHECK(p3[1] == P({2, 1}));
  CHECK(p3[2] == P({1, 1, 1}));

  auto p0 = enumerate_partitions(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0] == Partition());

  CHECK(enumerate_partitions(5).size() == 7);
  for (int n = 0; n <= 40; ++n)
    CHECK(Rational(static_cast<long long>(enumerate_partitions(n).size())) ==
          partition_count(n));
}

TEST_CASE("canonical order refines dominance") {
  for (int n = 2; n <= 12; ++n) {
    auto list = enumerate_partitions(n);
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j < list.size(); ++j) {
        if (i == j) continue;
        auto cmp = dominance_compare(list[i], list[j]);
        if (cmp == Dominance::less_or_equal)
          CHECK(j < i);  // the dominating shape comes first
      }
    }
  }
}

TEST_CASE("dominance comparison") {
  CHECK(dominance_compare(P({2, 1}), P({3})) == Dominance::less_or_equal);
  CHECK(dominance_compare(P({3}), P({2, 1})) == Dominance::greater);
  CHECK(dominance_compare(P({3, 3}), P({4, 1, 1})) == Dominance::incomparable);
  CHECK(dominance_compare(P({2, 1}), P({2, 1})) == Dominance::less_or_equal);
  CHECK_THROWS_AS(dominance_compare(P({2}), P({3})), std::invalid_argument);
}

TEST_CASE("branching weight psi'") {
  for (int n = 2; n <= 6; ++n)
    CHECK(psi_prime(P({n}), P({n - 1}), Rational(2)) == Rational(1));

  for (const auto& a : {Rational(1), Rational(3, 2), Rational(2)}) {
    Rational expected = Rational(2) * a * (a + Rational(2)) /
                        ((Rational(2) * a + Rational(1)) * (a + Rational(1)));
    CHECK(psi_prime(P({2, 1}), P({2}), a) == expected);
  }
  CHECK(psi_prime(P({2, 1}), P({2}), Rational(1)) == Rational(1));

  // positivity scan at alpha = 1
  for (int n = 1; n <= 8; ++n)
    for (const auto& lam : enumerate_partitions(n))
      for (const auto& tau : removable_shapes(lam))
        CHECK(psi_prime(lam, tau, Rational(1)).sign() > 0);

  CHECK_THROWS_AS(psi_prime(P({3, 1}), P({2}), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(psi_prime(P({2, 2}), P({3}), Rational(1)), std::invalid_argument);
}

TEST_CASE("dimension at alpha") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> col(n, 1);
    CHECK(dim_alpha(Partition(col), Rational(1)) == Rational(1));
    for (const auto& lam : enumerate_partitions(n))
      CHECK(dim_alpha(lam, Rational(1)) ==
            Rational(static_cast<long long>(oracles::syt_count(lam))));
  }
  CHECK(dim_alpha(P({2, 1}), Rational(1)) == Rational(2));
  for (const auto& a : {Rational(1), Rational(5, 3), Rational(4)})
    CHECK(dim_alpha(P({1}), a) == Rational(1));
}

TEST_CASE("corner enumeration") {
  auto added = addable_shapes(P({2, 1}));
  REQUIRE(added.size() == 3);
  CHECK(added[0] == P({3, 1}));
  CHECK(added[1] == P({2, 2}));
  CHECK(added[2] == P({2, 1, 1}));
  auto removed = removable_shapes(P({2, 1}));
  REQUIRE(removed.size() == 2);
  CHECK(removed[0] == P({1, 1}));
  CHECK(removed[1] == P({2}));
  CHECK(addable_shapes(Partition()).size() == 1);
  CHECK(removable_shapes(Partition()).empty());
}
