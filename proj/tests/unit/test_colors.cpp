#include <algorithm>

#include "helpers.hpp"
#include "support/oracles.hpp"
#include "zonocube/error.hpp"

using namespace zonocube;
using testing::S;
using testing::Sets;

TEST_CASE("color sets are canonical and ordered lexicographically") {
  CHECK(ColorSet::from_unordered({3, 1, 2}) == S("123"));
  CHECK_THROWS_AS(ColorSet::from_sequence({2, 1}), InvalidArgument);
  CHECK_THROWS_AS(ColorSet::from_sequence({0}), InvalidArgument);
  CHECK(S("12") < S("13"));
  CHECK(S("123") < S("13"));
  CHECK(S("") < S("1"));
  CHECK(S("135").label() == "135");
  CHECK(ColorSet{}.label() == "0");
  CHECK(ColorSet({2, 11}).label() == "2,11");
  CHECK(S("246").count_above(3) == 2);
  CHECK(S("246").count_below(3) == 1);
  CHECK(ColorSet::interval(2, 4) == S("234"));
  CHECK((S("123") - S("2")) == S("13"));
}

TEST_CASE("parity rule examples") {
  CHECK(parity(6, S("24")) == Parity::even);
  CHECK(parity(1, S("2")) == Parity::odd);
  CHECK(parity(4, S("123")) == Parity::even);
  CHECK(oracle::column_sign({1, 2, 3, 4}) == 1);
  for (int n = 1; n <= 7; ++n) {
    for (ColorSet J : all_subsets(ColorSet::upto(n - 1))) CHECK(parity(n, J) == Parity::even);
  }
}

TEST_CASE("packets list K - i lexicographically") {
  CHECK(packet(S("123")) == Sets("12 13 23"));
  CHECK(packet(S("123456")) == Sets("12345 12346 12356 12456 13456 23456"));
  auto rev = packet(S("1234"));
  std::reverse(rev.begin(), rev.end());
  CHECK(rev == Sets("234 134 124 123"));
}

TEST_CASE("binomials") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial_upto(6, 4) == 57);
  CHECK(binomial_upto(7, 5) == 120);
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= n; ++d) {
      CHECK(binomial_upto(n, d) == binomial_upto(n - 1, d) + binomial_upto(n - 1, d - 1));
      CHECK(grassmannian(ColorSet::upto(n), d).size() == binomial(n, d));
    }
  }
}

TEST_CASE("separation blocks") {
  CHECK(separation_blocks(S("135"), S("246")) == 6);
  CHECK_FALSE(is_r_separated(S("135"), S("246"), 3));
  CHECK(separation_blocks(S("2"), S("13")) == 3);
  CHECK(is_r_separated(S("2"), S("13"), 2));
  CHECK_FALSE(is_r_separated(S("2"), S("13"), 1));
  CHECK(separation_blocks(S("13"), S("1345")) <= 1);
  CHECK(is_r_separated(S("13"), S("1345"), 0));
  CHECK(separation_blocks(S("24"), S("24")) == 0);
}

TEST_CASE("separation blocks agree with the alternating chain oracle") {
  for (int n = 1; n <= 7; ++n) {
    auto all = all_subsets(ColorSet::upto(n));
    for (ColorSet X : all) {
      for (ColorSet Y : all) {
        int m = separation_blocks(X, Y);
        REQUIRE(m == oracle::longest_alternation(X, Y));
        for (int r = 0; r <= 4; ++r) {
          REQUIRE(is_r_separated(X, Y, r) == oracle::r_separated(X, Y, r));
          if (is_r_separated(X, Y, r)) REQUIRE(is_r_separated(X, Y, r + 1));
        }
        REQUIRE(is_r_separated(X, Y, 0) == (X.subset_of(Y) || Y.subset_of(X)));
        REQUIRE(m == separation_blocks(Y, X));
      }
    }
  }
}

TEST_CASE("weak separation") {
  CHECK(is_weakly_k_separated(S("15"), S("234"), 1));
  CHECK_FALSE(is_weakly_k_separated(S("15"), S("3"), 1));
  CHECK_FALSE(is_weakly_k_separated(S("25"), S("136"), 3));
  CHECK_THROWS_AS(is_weakly_k_separated(S("1"), S("2"), 2), InvalidArgument);
  for (int n = 1; n <= 6; ++n) {
    auto all = all_subsets(ColorSet::upto(n));
    for (ColorSet X : all) {
      for (ColorSet Y : all) {
        if (X.size() != Y.size()) continue;
        for (int k : {1, 3}) REQUIRE(is_weakly_k_separated(X, Y, k) == is_r_separated(X, Y, k + 1));
      }
    }
  }
}

TEST_CASE("interval rank and peripheral sets") {
  CHECK(interval_rank(S("135")) == 3);
  CHECK(interval_rank(S("")) == 0);
  CHECK(interval_rank(S("1234")) == 1);
  CHECK_FALSE(is_peripheral(S("135"), 6, 4));
  for (int d = 1; d <= 4; ++d) CHECK(is_peripheral(S(""), 6, d));
  CHECK_FALSE(is_peripheral(S(""), 6, 0));
  auto per = peripheral_sets(6, 4);
  CHECK(per.size() == 52);
  std::vector<ColorSet> inner;
  for (ColorSet X : all_subsets(ColorSet::upto(6))) {
    if (!is_peripheral(X, 6, 4)) inner.push_back(X);
  }
  std::sort(inner.begin(), inner.end());
  CHECK(inner == Sets("1246 1346 135 1356 136 146 235 24 245 246 25 35"));
}
