#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bitset>
#include <vector>

#include "digitsum/digits.hpp"

using digitsum::Base;
using digitsum::Integer;
using digitsum::make_rational;
using digitsum::Natural;
using digitsum::Rational;

TEST_CASE("base validation") {
  CHECK_THROWS_AS(Base(1), std::invalid_argument);
  CHECK_THROWS_AS(Base(0), std::invalid_argument);
  CHECK_THROWS_AS(Base(-7), std::invalid_argument);
  CHECK(Base(2).value() == 2);
}

TEST_CASE("digits canonical form") {
  CHECK(digitsum::digits(0, Base(2)).digits.empty());
  CHECK(digitsum::digits(14, Base(3)).digits == std::vector<int>{2, 1, 1});
  CHECK(digitsum::digits(9, Base(3)).digits == std::vector<int>{0, 0, 1});
  CHECK_THROWS_AS(digitsum::digits(Natural(-1), Base(2)),
                  std::invalid_argument);
}

TEST_CASE("digits round-trip on random values") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240811UL);
  for (int b : {2, 3, 7, 10}) {
    for (int i = 0; i < 10000; ++i) {
      const Natural n = rng.get_z_bits(1 + i % 192);
      const auto dv = digitsum::digits(n, Base(b));
      if (!dv.digits.empty()) CHECK(dv.digits.back() != 0);
      CHECK(dv.value() == n);
    }
  }
}

TEST_CASE("digit_sum") {
  for (int b : {2, 3, 5, 10}) {
    CHECK(digitsum::digit_sum(0, Base(b)) == 0);
    for (unsigned p = 0; p <= 10; ++p) {
      CHECK(digitsum::digit_sum(digitsum::integer_pow(Integer(b), p),
                                Base(b)) == 1);
    }
  }
  CHECK(digitsum::digit_sum(14, Base(3)) == 4);
}

TEST_CASE("cumulative digit sum, naive oracle values") {
  CHECK(digitsum::cumulative_digit_sum_naive(0, Base(2)) == 0);
  CHECK(digitsum::cumulative_digit_sum_naive(5, Base(3)) == 6);
  CHECK(digitsum::cumulative_digit_sum_naive(8, Base(2)) == 12);
}

TEST_CASE("fast cumulative digit sum matches frozen values") {
  CHECK(digitsum::cumulative_digit_sum(10, Base(2)) == 15);
  CHECK(digitsum::cumulative_digit_sum(6, Base(2)) == 7);
  CHECK(digitsum::cumulative_digit_sum(0, Base(7)) == 0);
}

TEST_CASE("fast cumulative digit sum equals the naive oracle") {
  for (int b = 2; b <= 6; ++b) {
    Natural running = 0;
    for (long n = 0; n <= 2000; ++n) {
      CHECK(digitsum::cumulative_digit_sum(n, Base(b)) == running);
      running += digitsum::digit_sum(n, Base(b));
    }
    CHECK(digitsum::cumulative_digit_sum_naive(1500, Base(b)) ==
          digitsum::cumulative_digit_sum(1500, Base(b)));
  }
}

TEST_CASE("cumulative digit sum at random large arguments") {
  // Independent consistency: S_b(N) - S_b(N-1) = s_b(N-1) far beyond any
  // range the oracle can reach.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(7UL);
  for (int b : {2, 3, 10}) {
    for (int i = 0; i < 200; ++i) {
      const Natural n = rng.get_z_bits(200) + 1;
      CHECK(digitsum::cumulative_digit_sum(n, Base(b)) -
                digitsum::cumulative_digit_sum(n - 1, Base(b)) ==
            digitsum::digit_sum(n - 1, Base(b)));
    }
  }
}

TEST_CASE("power closed form S_b(b^n) = n b^n (b-1)/2") {
  for (int b = 2; b <= 10; ++b) {
    for (unsigned n = 0; n <= 12; ++n) {
      const Integer bn = digitsum::integer_pow(Integer(b), n);
      CHECK(digitsum::cumulative_digit_sum(bn, Base(b)) ==
            Integer(n) * bn * (b - 1) / 2);
    }
  }
}

TEST_CASE("base-multiply identity S_b(bm) = b S_b(m) + b(b-1)m/2") {
  for (int b = 2; b <= 10; ++b) {
    for (long m = 0; m <= 2000; ++m) {
      CHECK(digitsum::cumulative_digit_sum(Natural(b) * m, Base(b)) ==
            b * digitsum::cumulative_digit_sum(m, Base(b)) +
                Integer(b) * (b - 1) * m / 2);
    }
  }
}

TEST_CASE("block sums") {
  CHECK(digitsum::block_sum(7, 7, Base(2)) == 0);
  CHECK(digitsum::block_sum(2, 5, Base(3)) == 5);
  CHECK(digitsum::block_sum(0, 100, Base(4)) ==
        digitsum::cumulative_digit_sum(100, Base(4)));
  CHECK_THROWS_AS(digitsum::block_sum(5, 2, Base(3)), std::invalid_argument);
}

TEST_CASE("average digit sums") {
  CHECK(digitsum::average_digit_sum(0, 4, Base(2)) == Rational(1));
  CHECK(digitsum::average_digit_sum(2, 5, Base(3)) == make_rational(5, 3));
  for (int b : {2, 3, 5}) {
    for (unsigned n = 1; n <= 6; ++n) {
      const Integer bn = digitsum::integer_pow(Integer(b), n);
      CHECK(digitsum::average_digit_sum(0, bn, Base(b)) ==
            make_rational(Integer(n) * (b - 1), 2));
    }
  }
  CHECK_THROWS_AS(digitsum::average_digit_sum(3, 3, Base(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(digitsum::average_digit_sum(4, 3, Base(2)),
                  std::invalid_argument);
}

TEST_CASE("complementation: s_b(j b^p - r - 1) + s_b(r) is independent of r") {
  for (int b = 2; b <= 6; ++b) {
    for (int j = 1; j <= b; ++j) {
      for (unsigned p = 0; p <= 5; ++p) {
        const Integer top = Integer(j) * digitsum::integer_pow(Integer(b), p);
        const Integer expected = Integer(b - 1) * p + j - 1;
        for (Integer r = 0; r < top; ++r) {
          REQUIRE(digitsum::digit_sum(top - r - 1, Base(b)) +
                      digitsum::digit_sum(r, Base(b)) ==
                  expected);
        }
      }
    }
  }
}

TEST_CASE("single-power estimate s_b(n + b^k) <= s_b(n) + 1") {
  for (int b = 2; b <= 6; ++b) {
    for (long n = 0; n <= 5000; ++n) {
      const Natural s_n = digitsum::digit_sum(n, Base(b));
      for (unsigned k = 0; k <= 8; ++k) {
        REQUIRE(digitsum::digit_sum(
                    Natural(n) + digitsum::integer_pow(Integer(b), k),
                    Base(b)) <= s_n + 1);
      }
    }
  }
}

TEST_CASE("add_power_bound_check") {
  CHECK(digitsum::add_power_bound_check(17, {}, Base(3)));
  CHECK(digitsum::add_power_bound_check(1, {0}, Base(2)));
  for (int b : {2, 3, 5}) {
    // b - 1 plus one: carries collapse, bound is slack but holds.
    CHECK(digitsum::add_power_bound_check(b - 1, {0}, Base(b)));
  }
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(99UL);
  for (int i = 0; i < 2000; ++i) {
    const Natural n = rng.get_z_bits(40);
    std::vector<unsigned long> powers;
    for (unsigned j = 0; j < i % 7; ++j) {
      powers.push_back(mpz_class(rng.get_z_bits(4)).get_ui());
    }
    CHECK(digitsum::add_power_bound_check(n, powers, Base(2 + i % 5)));
  }
}

TEST_CASE("digit dominance examples") {
  CHECK(digitsum::digit_dominates(1, 10, Base(3)));
  CHECK_FALSE(digitsum::digit_dominates(4, 10, Base(3)));
  CHECK(digitsum::digit_dominates(0, 7, Base(2)));
  CHECK_FALSE(digitsum::digit_dominates(7, 0, Base(2)));
}

TEST_CASE("digit dominance is a partial order on 0..500") {
  for (int b : {2, 3, 5}) {
    constexpr int kLimit = 501;
    std::vector<std::bitset<kLimit>> below(kLimit);
    for (int n = 0; n < kLimit; ++n) {
      for (int m = 0; m < kLimit; ++m) {
        below[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] =
            digitsum::digit_dominates(n, m, Base(b));
      }
    }
    for (int n = 0; n < kLimit; ++n) {
      REQUIRE(below[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)]);
      for (int m = 0; m < kLimit; ++m) {
        if (!below[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]) {
          continue;
        }
        if (below[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]) {
          REQUIRE(n == m);  // antisymmetry
        }
        // transitivity: everything above m is above n
        REQUIRE((below[static_cast<std::size_t>(m)] &
                 ~below[static_cast<std::size_t>(n)])
                    .none());
      }
    }
  }
}
