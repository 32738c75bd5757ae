#include "model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shc {

Topology Topology::create(Multiset occupancies) {
  if (occupancies.empty())
    throw std::invalid_argument("topology needs at least one cache");
  for (const Int& l : occupancies) {
    if (l < 1)
      throw std::invalid_argument("every cache must serve at least one user");
  }
  Topology topo;
  topo.L = std::move(occupancies);
  topo.K = 0;
  for (const Int& l : topo.L) topo.K += l;
  topo.sortPerm.resize(topo.L.size());
  std::iota(topo.sortPerm.begin(), topo.sortPerm.end(), 1);
  std::stable_sort(topo.sortPerm.begin(), topo.sortPerm.end(), [&](int a, int b) {
    return topo.L[static_cast<size_t>(a - 1)] > topo.L[static_cast<size_t>(b - 1)];
  });
  return topo;
}

Multiset Topology::sorted_desc() const {
  Multiset out;
  out.reserve(L.size());
  for (int lab : sortPerm) out.push_back(L[static_cast<size_t>(lab - 1)]);
  return out;
}

void validate_budget(const Topology& topo, const CacheBudget& budget) {
  if (budget.t < 0 || budget.t > topo.lambda())
    throw std::invalid_argument("budget t must lie in [0, cache count]");
  if (budget.N < 1) throw std::invalid_argument("library size must be positive");
}

MemoryAllocation allocate(const Topology& topo, long t) {
  const int n = topo.lambda();
  if (t < 0 || t > n) throw std::invalid_argument("budget t must lie in {0..cache count}");
  MemoryAllocation out;
  out.t = Rat(t);
  out.gamma.reserve(static_cast<size_t>(n));
  if (t == 0) {
    out.gamma.assign(static_cast<size_t>(n), Rat(0));
    return out;
  }
  Int et = elem_sym(topo.L, t);
  for (int lab = 1; lab <= n; ++lab) {
    Int num = topo.occupancy(lab) * elem_sym_without(topo.L, lab, t - 1);
    out.gamma.push_back(make_rat(num, et));
  }
  return out;
}

MemoryShare split_budget(const Rat& t, int lambda) {
  if (t < 0 || t > lambda)
    throw std::invalid_argument("budget t must lie in [0, cache count]");
  MemoryShare share;
  share.floorBudget = int_to_long(rat_floor(t));
  share.ceilBudget = int_to_long(rat_ceil(t));
  share.alpha = (share.floorBudget == share.ceilBudget) ? Rat(1) : Rat(share.ceilBudget) - t;
  return share;
}

MemoryAllocation allocate_fractional(const Topology& topo, const Rat& t) {
  MemoryShare share = split_budget(t, topo.lambda());
  if (share.floorBudget == share.ceilBudget) return allocate(topo, share.floorBudget);
  MemoryAllocation lo = allocate(topo, share.floorBudget);
  MemoryAllocation hi = allocate(topo, share.ceilBudget);
  MemoryAllocation out;
  out.t = t;
  out.gamma.reserve(lo.gamma.size());
  for (size_t i = 0; i < lo.gamma.size(); ++i)
    out.gamma.push_back(share.alpha * lo.gamma[i] + (1 - share.alpha) * hi.gamma[i]);
  return out;
}

Rat dof(const Topology& topo, const MemoryAllocation& alloc, const Rat& T) {
  if (T <= 0) throw std::invalid_argument("degrees of freedom undefined for T <= 0");
  if (alloc.gamma.size() != topo.L.size())
    throw std::invalid_argument("allocation does not match topology");
  Rat cached(0);
  for (size_t i = 0; i < alloc.gamma.size(); ++i)
    cached += alloc.gamma[i] * Rat(topo.L[i]);
  return (Rat(topo.K) - cached) / T;
}

}  // namespace shc
