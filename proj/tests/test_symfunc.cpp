// Tests for the elementary symmetric machinery, checked against a direct
// subset-enumeration oracle plus hand-derived fixed values.

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "symfunc.hpp"

using shc::Int;
using shc::Multiset;
using shc::Rat;

namespace {

Multiset random_multiset(shc_test::TestRng& rng, long maxSize, long maxEntry) {
  long n = rng.range(1, maxSize);
  Multiset X;
  for (long i = 0; i < n; ++i) X.push_back(Int(rng.range(1, maxEntry)));
  return X;
}

}  // namespace

TEST_CASE("elementary symmetric values on the worked example") {
  Multiset L = {3, 2, 1};
  CHECK(shc::elem_sym(L, 0) == 1);
  CHECK(shc::elem_sym(L, 1) == 6);
  CHECK(shc::elem_sym(L, 2) == 11);
  CHECK(shc::elem_sym(L, 3) == 6);
  CHECK(shc::elem_sym(L, 4) == 0);
  CHECK_THROWS_AS(shc::elem_sym(L, -1), std::invalid_argument);
  CHECK_THROWS_AS(shc::elem_sym(Multiset{}, 0), std::invalid_argument);
}

TEST_CASE("prefix table agrees with subset enumeration") {
  shc_test::TestRng rng(101);
  for (int trial = 0; trial < 80; ++trial) {
    Multiset X = random_multiset(rng, 8, 9);
    for (long k = 0; k <= static_cast<long>(X.size()); ++k) {
      CHECK(shc::elem_sym(X, k) == shc_test::oracle_elem_sym(X, k));
    }
  }
}

TEST_CASE("leave-one-out values agree with enumeration on the reduced multiset") {
  shc_test::TestRng rng(102);
  for (int trial = 0; trial < 60; ++trial) {
    Multiset X = random_multiset(rng, 7, 9);
    for (int pos = 1; pos <= static_cast<int>(X.size()); ++pos) {
      Multiset reduced;
      for (size_t i = 0; i < X.size(); ++i)
        if (static_cast<int>(i) != pos - 1) reduced.push_back(X[i]);
      for (long k = 0; k <= static_cast<long>(X.size()); ++k) {
        CHECK(shc::elem_sym_without(X, pos, k) == shc_test::oracle_elem_sym(reduced, k));
      }
    }
  }
  CHECK_THROWS_AS(shc::elem_sym_without(Multiset{1, 2}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(shc::elem_sym_without(Multiset{1, 2}, 3, 1), std::invalid_argument);
}

TEST_CASE("symmetric means divide by the subset count") {
  Multiset L = {3, 2, 1};
  CHECK(shc::elem_sym_mean(L, 1) == Rat(2));        // 6 / C(3,1)
  CHECK(shc::elem_sym_mean(L, 2) == Rat(11, 3));    // 11 / C(3,2)
  CHECK(shc::elem_sym_mean(L, 3) == Rat(6));        // 6 / C(3,3)
  CHECK_THROWS_AS(shc::elem_sym_mean(L, 0), std::invalid_argument);
  CHECK_THROWS_AS(shc::elem_sym_mean(L, 4), std::invalid_argument);
}

TEST_CASE("pivot recursion holds on random multisets") {
  shc_test::TestRng rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    Multiset X = random_multiset(rng, 8, 9);
    for (long k = 1; k <= static_cast<long>(X.size()); ++k) {
      int pos = static_cast<int>(rng.range(1, static_cast<long>(X.size())));
      CHECK(shc::check_recursion(X, k, pos));
    }
  }
}

TEST_CASE("weighted identity holds for arbitrary excluded sets") {
  shc_test::TestRng rng(104);
  for (int trial = 0; trial < 40; ++trial) {
    Multiset X = random_multiset(rng, 7, 9);
    const int n = static_cast<int>(X.size());
    for (long k = 1; k <= n; ++k) {
      std::vector<int> phi;
      for (int i = 1; i <= n; ++i)
        if (rng.range(0, 1) == 1) phi.push_back(i);
      CHECK(shc::check_weighted_identity(X, k, phi));
    }
  }
}

TEST_CASE("ratio sequence ends in zero and matches the enumeration oracle") {
  Multiset L = {3, 2, 1};
  std::vector<Rat> seq = shc::ratio_sequence(L);
  REQUIRE(seq.size() == 4);
  CHECK(seq[0] == Rat(6));
  CHECK(seq[1] == Rat(11, 6));
  CHECK(seq[2] == Rat(6, 11));
  CHECK(seq[3] == Rat(0));

  shc_test::TestRng rng(105);
  for (int trial = 0; trial < 40; ++trial) {
    Multiset X = random_multiset(rng, 8, 9);
    std::vector<Rat> ratios = shc::ratio_sequence(X);
    REQUIRE(ratios.size() == X.size() + 1);
    for (long t = 0; t < static_cast<long>(X.size()); ++t) {
      CHECK(ratios[static_cast<size_t>(t)] == shc_test::oracle_delivery_time(X, t));
    }
    CHECK(ratios.back() == 0);
  }
  CHECK_THROWS_AS(shc::ratio_sequence(Multiset{1, 0}), std::invalid_argument);
}

TEST_CASE("ratio sequence is strictly decreasing for positive occupancies") {
  shc_test::TestRng rng(106);
  for (int trial = 0; trial < 60; ++trial) {
    Multiset X = random_multiset(rng, 9, 9);
    CHECK(shc::strictly_decreasing(shc::ratio_sequence(X)));
  }
}

TEST_CASE("log-concavity and mean chains hold for positive multisets") {
  shc_test::TestRng rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    Multiset X = random_multiset(rng, 8, 9);
    CHECK(shc::check_log_concavity(X));
    CHECK(shc::check_maclaurin_chain(X));
  }
}

TEST_CASE("monotonicity and convexity predicates") {
  using V = std::vector<Rat>;
  CHECK(shc::strictly_decreasing(V{Rat(2), Rat(1, 2), Rat(0)}));
  CHECK_FALSE(shc::strictly_decreasing(V{Rat(2), Rat(2), Rat(0)}));
  CHECK_FALSE(shc::strictly_decreasing(V{Rat(1), Rat(2)}));
  CHECK(shc::strictly_decreasing(V{}));
  CHECK(shc::strictly_decreasing(V{Rat(5)}));

  CHECK(shc::discretely_convex(V{Rat(2), Rat(1, 2), Rat(0)}));
  CHECK(shc::discretely_convex(V{Rat(18, 11), Rat(12, 11), Rat(6, 11), Rat(0)}));
  CHECK_FALSE(shc::discretely_convex(V{Rat(0), Rat(1), Rat(0)}));
  CHECK(shc::discretely_convex(V{Rat(1), Rat(0), Rat(1)}));
  CHECK(shc::discretely_convex(V{}));
  CHECK(shc::discretely_convex(V{Rat(1), Rat(7)}));
}
