// Topology mismatch: placement follows an assumed occupancy vector while
// delivery faces the realized one. Padded clique schedule, its exact
// delivery time, the matching permutation converse (the two are equal for
// every scenario), and the leader combinatorics of the padded schedule.
#pragma once

#include <map>
#include <vector>

#include "delivery.hpp"
#include "exact.hpp"
#include "model.hpp"
#include "placement.hpp"

namespace shc {

// Placement is built from `assumed`; `realized` is what delivery actually
// faces. Realized occupancies may be zero (empty caches transmit nothing);
// the totals need not match.
struct MismatchScenario {
  Topology assumed;
  std::vector<Int> realized;
  long t = 0;

  static MismatchScenario create(Multiset assumed, std::vector<Int> realized, long t);

  int lambda() const { return assumed.lambda(); }
  Int realized_users() const;
};

// Number of wanted subfiles with tau = Q minus lam for cache lam's realized
// users: L_lam * prod of assumed occupancies over Q minus lam.
Int clique_count_mismatch(const MismatchScenario& scn, const std::vector<int>& Q, int lam);

// Exact time of the padded schedule: sum over (t+1)-sets Q of the largest
// per-cache count above, normalized by e_t(assumed).
Rat delivery_time_mismatch(const MismatchScenario& scn);

// Best permutation lower bound: max over ordered (Lambda-t)-tuples sigma of
// caches of sum_i L_{sigma(i)} * e_t(assumed restricted to the labels not
// yet visited), normalized by e_t(assumed). Equals delivery_time_mismatch
// exactly. Capped at 10 caches.
Rat converse_mismatch(const MismatchScenario& scn);

// Same two quantities over arbitrary non-negative rational occupancies
// (used by the stochastic module, where the assumed vector holds means).
Rat mismatch_delay_formula(const std::vector<Rat>& realized, const std::vector<Rat>& assumed,
                           long t);
// e_{t+1}/e_t over a positive rational occupancy vector.
Rat perfect_delay_formula(const std::vector<Rat>& occupancies, long t);

struct LeaderAssignment {
  std::vector<int> leaders;                 // global order, Lambda - t entries
  std::map<std::vector<int>, int> perSetLeader;  // each (t+1)-set -> its leader
};

// Per-set leader: the cache maximizing its clique count (ties to the lowest
// label). The global order lists caches by realized/assumed occupancy ratio,
// best first; exactly Lambda - t of them lead at least one set.
LeaderAssignment leaders(const MismatchScenario& scn);

// Demand over the realized users (contiguous per-cache blocks; empty caches
// get empty blocks).
Demand realized_demand(const MismatchScenario& scn, std::vector<long> d);
// Distinct files 1..(realized user count); requires N at least that large.
Demand realized_worst_case(const MismatchScenario& scn, long N);

struct MismatchDelivery {
  std::vector<Transmission> transmissions;
  DeliveryReport report;
};

// The padded clique schedule: per (t+1)-set Q emit the maximal per-cache
// count of messages, with exhausted caches contributing empty constituents.
// Decodes byte-exactly for every realized user.
MismatchDelivery schedule_mismatch(const MismatchScenario& scn, const Demand& demand,
                                   const Library& lib);

}  // namespace shc
