#pragma once
// Topology and memory-allocation data model: the cache occupancy vector with
// its canonical (descending) internal order, exact per-cache memory shares
// for an integer budget, fractional-budget splitting between the two
// neighbouring integer budgets, and the degrees-of-freedom metric.

#include <vector>

#include "exact.hpp"
#include "symfunc.hpp"

namespace shc {

// A network of Lambda caches; L[i] users are attached to cache label i+1.
// All occupancies are strictly positive here; zero-occupancy realizations
// appear only in the topology-mismatch analyses.
struct Topology {
  Multiset L;                 // caller's label order (labels 1..lambda())
  Int K;                      // total users, sum of L
  std::vector<int> sortPerm;  // sortPerm[i] = user label of the (i+1)-th
                              // largest occupancy (stable descending sort)

  static Topology create(Multiset occupancies);

  int lambda() const { return static_cast<int>(L.size()); }
  const Int& occupancy(int label) const { return L[static_cast<size_t>(label - 1)]; }
  Multiset sorted_desc() const;
};

// Normalized total memory budget t (0 <= t <= Lambda) and library size N.
struct CacheBudget {
  Rat t;
  Int N;
};

// Throws std::invalid_argument unless 0 <= t <= Lambda and N >= 1.
void validate_budget(const Topology& topo, const CacheBudget& budget);

// Per-cache memory shares (fraction of the library), in caller label order.
struct MemoryAllocation {
  std::vector<Rat> gamma;
  Rat t;  // sum of gamma, equal to the budget
};

// A fractional budget t expressed as the exact convex combination
// t = alpha*floor(t) + (1-alpha)*ceil(t), alpha = ceil(t) - t.
struct MemoryShare {
  Rat alpha;
  long floorBudget;
  long ceilBudget;
};

// Share for cache `lab`: gamma_lab = L_lab * e_{t-1}(L minus lab) / e_t(L).
// Requires integer t in {0..Lambda}. The shares always sum to exactly t.
MemoryAllocation allocate(const Topology& topo, long t);

// Exact split of a fractional budget; for integer t, alpha = 1 and both
// integer budgets equal t. Requires 0 <= t <= lambda.
MemoryShare split_budget(const Rat& t, int lambda);

// Allocation for any rational budget: the alpha-weighted combination of the
// two neighbouring integer-budget allocations.
MemoryAllocation allocate_fractional(const Topology& topo, const Rat& t);

// Degrees of freedom: (K - sum of gamma_lab * L_lab) / T. Requires T > 0.
Rat dof(const Topology& topo, const MemoryAllocation& alloc, const Rat& T);

}  // namespace shc
