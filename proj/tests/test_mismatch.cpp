// Tests for mismatched delivery: placement built for one occupancy vector
// serving another. Covers the padded schedule, the exact delay formula, the
// permutation converse (always equal), leader combinatorics, and byte-exact
// decoding including empty caches.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "combinatorics.hpp"
#include "delivery.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "exact.hpp"
#include "mismatch.hpp"
#include "model.hpp"
#include "oracles.hpp"
#include "placement.hpp"
#include "symfunc.hpp"

using shc::Demand;
using shc::Int;
using shc::Library;
using shc::MismatchScenario;
using shc::Multiset;
using shc::Rat;
using shc::Topology;

namespace {

MismatchScenario random_scenario(shc_test::TestRng& rng, long maxSize, long maxEntry,
                                 bool allowZeroRealized) {
  long n = rng.range(1, maxSize);
  Multiset assumed;
  std::vector<Int> realized;
  for (long i = 0; i < n; ++i) {
    assumed.push_back(Int(rng.range(1, maxEntry)));
    realized.push_back(Int(rng.range(allowZeroRealized ? 0 : 1, maxEntry)));
  }
  long t = rng.range(0, n);
  return MismatchScenario::create(assumed, realized, t);
}

std::vector<Rat> to_rats(const std::vector<Int>& v) {
  std::vector<Rat> out;
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("scenario construction validates its inputs") {
  CHECK_THROWS_AS(MismatchScenario::create({2, 1}, {Int(1)}, 1), std::invalid_argument);
  CHECK_THROWS_AS(MismatchScenario::create({2, 1}, {Int(1), Int(-1)}, 1), std::invalid_argument);
  CHECK_THROWS_AS(MismatchScenario::create({2, 1}, {Int(1), Int(1)}, 3), std::invalid_argument);
  CHECK_THROWS_AS(MismatchScenario::create({2, 1}, {Int(1), Int(1)}, -1), std::invalid_argument);

  MismatchScenario scn = MismatchScenario::create({2, 1, 1}, {Int(1), Int(2), Int(1)}, 1);
  CHECK(scn.lambda() == 3);
  CHECK(scn.realized_users() == 4);
}

TEST_CASE("worked mismatch example: counts, delay, converse, schedule") {
  MismatchScenario scn = MismatchScenario::create({2, 1, 1}, {Int(1), Int(2), Int(1)}, 1);

  CHECK(shc::clique_count_mismatch(scn, {1, 2}, 2) == 4);
  CHECK(shc::clique_count_mismatch(scn, {1, 2}, 1) == 1);
  CHECK(shc::clique_count_mismatch(scn, {1, 3}, 3) == 2);
  CHECK(shc::clique_count_mismatch(scn, {2, 3}, 2) == 2);

  CHECK(shc::delivery_time_mismatch(scn) == Rat(2));
  CHECK(shc::converse_mismatch(scn) == Rat(2));

  shc::LeaderAssignment la = shc::leaders(scn);
  CHECK(la.leaders == std::vector<int>{2, 3});
  CHECK(la.perSetLeader.at({1, 2}) == 2);
  CHECK(la.perSetLeader.at({1, 3}) == 3);
  CHECK(la.perSetLeader.at({2, 3}) == 2);

  Demand demand = shc::realized_worst_case(scn, 4);
  Library lib = Library::random(4, 64, 4, 7);
  shc::MismatchDelivery md = shc::schedule_mismatch(scn, demand, lib);
  CHECK(md.transmissions.size() == 8);
  CHECK(md.report.numTransmissions == 8);
  CHECK(md.report.T == Rat(2));
  CHECK(md.report.decode_ok());

  // Padding means some messages carry fewer real constituents than |Q|.
  bool sawPadding = false;
  for (const shc::Transmission& tx : md.transmissions) {
    long real = 0;
    for (const shc::Constituent& c : tx.parts)
      if (!c.empty) ++real;
    CHECK(real >= 1);
    if (real < static_cast<long>(tx.Q.size())) sawPadding = true;
  }
  CHECK(sawPadding);
}

TEST_CASE("matched occupancies reduce to the plain scheme") {
  shc_test::TestRng rng(701);
  for (int trial = 0; trial < 10; ++trial) {
    long n = rng.range(1, 4);
    Multiset L;
    for (long i = 0; i < n; ++i) L.push_back(Int(rng.range(1, 3)));
    Topology topo = Topology::create(L);
    long K = shc::int_to_long(topo.K);
    for (long t = 0; t <= n; ++t) {
      MismatchScenario scn = MismatchScenario::create(L, L, t);
      CHECK(shc::delivery_time_mismatch(scn) == shc::delivery_time(topo, Rat(t)));
      if (t == n || K == 0) continue;
      Demand demand = shc::realized_worst_case(scn, K);
      Library lib = Library::random(K, 20, shc::int_to_long(shc::subpacketize(topo, t)),
                                    900 + static_cast<uint64_t>(trial));
      shc::MismatchDelivery md = shc::schedule_mismatch(scn, demand, lib);
      CHECK(Rat(md.report.numTransmissions) ==
            shc_test::oracle_elem_sym<Rat>(to_rats(L), t + 1));
      for (const shc::Transmission& tx : md.transmissions)
        for (const shc::Constituent& c : tx.parts) CHECK(!c.empty);
      CHECK(md.report.decode_ok());
    }
  }
}

TEST_CASE("scheme delay equals the permutation converse on random scenarios") {
  shc_test::TestRng rng(702);
  for (int trial = 0; trial < 50; ++trial) {
    MismatchScenario scn = random_scenario(rng, 4, 3, true);
    CHECK(shc::delivery_time_mismatch(scn) == shc::converse_mismatch(scn));
  }
}

TEST_CASE("equal total occupancy is never faster than a matched system") {
  // When the realized counts are a permutation-free reshuffle of the same
  // total, the mismatch delay is at least the matched delay of the realized
  // vector.
  shc_test::TestRng rng(703);
  int checked = 0;
  while (checked < 25) {
    long n = rng.range(2, 4);
    Multiset assumed;
    std::vector<Int> realized;
    long total = 0;
    for (long i = 0; i < n; ++i) {
      long v = rng.range(1, 4);
      assumed.push_back(Int(v));
      total += v;
    }
    // Random composition of the same total with positive parts.
    long rest = total;
    for (long i = 0; i < n - 1; ++i) {
      long hi = rest - (n - 1 - i);
      long v = rng.range(1, hi);
      realized.push_back(Int(v));
      rest -= v;
    }
    realized.push_back(Int(rest));
    for (long t = 0; t <= n; ++t) {
      MismatchScenario scn = MismatchScenario::create(assumed, realized, t);
      Multiset realizedL(realized.begin(), realized.end());
      Topology realizedTopo = Topology::create(realizedL);
      CHECK(shc::delivery_time_mismatch(scn) >= shc::delivery_time(realizedTopo, Rat(t)));
    }
    ++checked;
  }
}

TEST_CASE("leader spectrum: the j-th ranked cache leads C(lambda-j, t) sets") {
  shc_test::TestRng rng(704);
  for (int trial = 0; trial < 30; ++trial) {
    MismatchScenario scn = random_scenario(rng, 5, 3, true);
    if (scn.t >= scn.lambda()) continue;
    shc::LeaderAssignment la = shc::leaders(scn);
    const int lambda = scn.lambda();
    const long t = scn.t;
    CHECK(static_cast<long>(la.leaders.size()) == lambda - t);
    // Count the sets each global leader actually leads.
    std::map<int, long> ledSets;
    for (const auto& [Q, leader] : la.perSetLeader) ledSets[leader]++;
    CHECK(static_cast<long>(la.perSetLeader.size()) ==
          shc::int_to_long(shc::binomial(lambda, t + 1)));
    for (size_t j = 0; j < la.leaders.size(); ++j) {
      long expect = shc::int_to_long(
          shc::binomial(lambda - static_cast<long>(j) - 1, t));
      CHECK(ledSets[la.leaders[j]] == expect);
    }
    // Every per-set leader maximizes the clique count within its set.
    for (const auto& [Q, leader] : la.perSetLeader) {
      Int best = shc::clique_count_mismatch(scn, Q, leader);
      for (int lam : Q) CHECK(shc::clique_count_mismatch(scn, Q, lam) <= best);
    }
  }
  MismatchScenario degenerate = MismatchScenario::create({1, 1}, {Int(1), Int(1)}, 2);
  CHECK_THROWS_AS(shc::leaders(degenerate), std::invalid_argument);
}

TEST_CASE("rational delay formulas agree with the integer path") {
  shc_test::TestRng rng(705);
  for (int trial = 0; trial < 30; ++trial) {
    MismatchScenario scn = random_scenario(rng, 4, 4, true);
    std::vector<Rat> assumed = to_rats(scn.assumed.L);
    std::vector<Rat> realized = to_rats(scn.realized);
    CHECK(shc::mismatch_delay_formula(realized, assumed, scn.t) ==
          shc::delivery_time_mismatch(scn));
  }
  for (int trial = 0; trial < 20; ++trial) {
    long n = rng.range(1, 4);
    Multiset L;
    for (long i = 0; i < n; ++i) L.push_back(Int(rng.range(1, 5)));
    Topology topo = Topology::create(L);
    for (long t = 0; t < n; ++t) {
      CHECK(shc::perfect_delay_formula(to_rats(L), t) == shc::delivery_time(topo, Rat(t)));
    }
  }
  CHECK_THROWS_AS(shc::perfect_delay_formula({Rat(1), Rat(-1)}, 1), std::invalid_argument);
  CHECK_THROWS_AS(shc::mismatch_delay_formula({Rat(1)}, {Rat(1), Rat(1)}, 1),
                  std::invalid_argument);
}

TEST_CASE("empty realized caches are served around, not through") {
  MismatchScenario scn = MismatchScenario::create({2, 2}, {Int(0), Int(3)}, 1);
  CHECK(scn.realized_users() == 3);
  Demand demand = shc::realized_worst_case(scn, 3);
  CHECK(demand.users[0].empty());
  CHECK(demand.users[1] == std::vector<int>{1, 2, 3});
  Library lib = Library::random(3, 31, shc::int_to_long(shc::subpacketize(
                                            Topology::create({2, 2}), 1)),
                                11);
  shc::MismatchDelivery md = shc::schedule_mismatch(scn, demand, lib);
  CHECK(md.report.decode_ok());
  // Only the populated cache needs service: count = max(0*2, 3*2) per the
  // single 2-set, normalized by e_1 = 4.
  CHECK(md.report.numTransmissions == 6);
  CHECK(md.report.T == Rat(3, 2));
  CHECK(shc::delivery_time_mismatch(scn) == Rat(3, 2));
}

TEST_CASE("random mismatched deliveries decode byte-exactly") {
  shc_test::TestRng rng(706);
  for (int trial = 0; trial < 200; ++trial) {
    MismatchScenario scn = random_scenario(rng, 4, 3, true);
    long users = shc::int_to_long(scn.realized_users());
    if (users == 0) continue;
    long N = users + rng.range(0, 2);
    std::vector<long> d;
    for (long u = 0; u < users; ++u) d.push_back(rng.range(1, N));
    Demand demand = shc::realized_demand(scn, d);
    long S = shc::int_to_long(shc::subpacketize(scn.assumed, scn.t));
    Library lib = Library::random(N, rng.range(1, 40), S,
                                  1000 + static_cast<uint64_t>(trial));
    shc::MismatchDelivery md = shc::schedule_mismatch(scn, demand, lib);
    CHECK(md.report.decode_ok());
    CHECK(md.report.T == shc::delivery_time_mismatch(scn));
  }
}

TEST_CASE("realized demand construction validates") {
  MismatchScenario scn = MismatchScenario::create({2, 1}, {Int(2), Int(1)}, 1);
  CHECK_THROWS_AS(shc::realized_demand(scn, {1, 2}), std::invalid_argument);  // wrong count
  CHECK_THROWS_AS(shc::realized_demand(scn, {1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(shc::realized_worst_case(scn, 2), std::invalid_argument);  // N < users
  Demand ok = shc::realized_worst_case(scn, 3);
  CHECK(ok.users[0] == std::vector<int>{1, 2});
  CHECK(ok.users[1] == std::vector<int>{3});
  CHECK(ok.cacheOfUser == std::vector<int>{1, 1, 2});
}

TEST_CASE("converse enumeration honors its cap") {
  Multiset big(11, Int(1));
  std::vector<Int> realized(11, Int(1));
  MismatchScenario scn = MismatchScenario::create(big, realized, 1);
  CHECK_THROWS_AS(shc::converse_mismatch(scn), shc::resource_limit_error);
  // The forward formula has no such cap.
  CHECK(shc::delivery_time_mismatch(scn) > 0);
}
