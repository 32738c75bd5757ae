// Independent brute-force verifiers for the converse machinery: the
// permutation-indexed lower-bound functional over explicit subfile-size
// profiles, coefficient recomputation by exhaustive averaging over distinct
// demands and permutations, exhaustive tau* search, and the feasibility /
// value check of the regular placement point. Everything here enumerates
// from first principles and never calls the closed forms it is meant to
// check (closed forms appear only on the comparison side of tests).
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "delivery.hpp"
#include "exact.hpp"
#include "model.hpp"
#include "placement.hpp"

namespace shc {

// Fraction of each (unit-size) file stored exclusively by each cache subset.
struct SubfileSizeProfile {
  // (file index, ascending label subset) -> fraction of the file.
  std::map<std::pair<long, std::vector<int>>, Rat> sizes;

  // Profile of a built placement, replicated for files 1..N: each tau class
  // holds (class size)/S of every file.
  static SubfileSizeProfile from_placement(const PlacementSpec& spec, long N);

  // Stored fraction; zero for absent entries.
  Rat size(long file, const std::vector<int>& tau) const;

  // True iff the fractions of each file in 1..N sum to exactly 1.
  bool fully_partitions(long N) const;
};

// The permutation-indexed lower-bound functional: walking the caches in
// sigma order, each user of the current cache contributes the fractions of
// its requested file stored outside the caches visited so far (the current
// one included).
Rat t_lb_sigma(const SubfileSizeProfile& profile, const Demand& demand,
               const std::vector<int>& sigma);

// Recomputes the coefficient of a single subfile-size variable by exhaustive
// averaging: over all distinct-file demands and all cache permutations,
// count how often |W^{(1)}_tau| appears in the functional above (a user's
// term counts iff its cache precedes every element of tau in sigma), weight
// by w_sigma^(p), average over demands, and scale by N. Must equal the
// closed-form coefficient. Enumeration caps: Lambda <= 4, K <= 6, N <= 8.
Rat brute_force_coefficient(const Topology& topo, long N, long p, const std::vector<int>& tau);

// Exhaustive argmin of the tilde coefficient over all j-subsets of the
// descending-sorted occupancies; ties resolve toward the stated tau* form.
// Capped at Lambda <= 6.
std::vector<int> brute_force_tau_star(const Topology& topo, long p, long j);

// Checks the regular placement point: its profile is feasible (fractions
// sum to 1, per-cache load equals the memory share exactly) and its
// objective value at p = t equals the regular lower bound. Lambda <= 5.
bool verify_lp_point(const Topology& topo, long t);

// Full weighted average over all permutations at parameter p:
// sum_sigma w_sigma^(p) * t_lb_sigma(...). Never exceeds the achievable
// delivery time. Capped at Lambda <= 8.
Rat weighted_sigma_bound(const PlacementSpec& spec, const Demand& demand, long p);

}  // namespace shc
