#include "exhaustive.hpp"

#include <algorithm>
#include <stdexcept>

#include "bounds.hpp"
#include "combinatorics.hpp"
#include "errors.hpp"
#include "symfunc.hpp"

namespace shc {

namespace {

std::vector<int> canonical_subset(int lambda, std::vector<int> tau) {
  std::sort(tau.begin(), tau.end());
  for (size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] < 1 || tau[i] > lambda)
      throw std::invalid_argument("cache label out of range");
    if (i > 0 && tau[i] == tau[i - 1])
      throw std::invalid_argument("duplicate cache label in subset");
  }
  return tau;
}

void validate_permutation(const std::vector<int>& sigma, int lambda) {
  if (static_cast<int>(sigma.size()) != lambda)
    throw std::invalid_argument("sigma must be a permutation of all cache labels");
  std::vector<bool> seen(static_cast<size_t>(lambda) + 1, false);
  for (int lab : sigma) {
    if (lab < 1 || lab > lambda || seen[static_cast<size_t>(lab)])
      throw std::invalid_argument("sigma must be a permutation of all cache labels");
    seen[static_cast<size_t>(lab)] = true;
  }
}

}  // namespace

SubfileSizeProfile SubfileSizeProfile::from_placement(const PlacementSpec& spec, long N) {
  if (N < 1) throw std::invalid_argument("library size must be positive");
  SubfileSizeProfile profile;
  for (const auto& [tau, count] : spec.tauCount) {
    const Rat share = make_rat(Int(count), Int(spec.S));
    for (long n = 1; n <= N; ++n) profile.sizes[{n, tau}] = share;
  }
  return profile;
}

Rat SubfileSizeProfile::size(long file, const std::vector<int>& tau) const {
  auto it = sizes.find({file, tau});
  return it == sizes.end() ? Rat(0) : it->second;
}

bool SubfileSizeProfile::fully_partitions(long N) const {
  std::map<long, Rat> totals;
  for (const auto& [key, share] : sizes) totals[key.first] += share;
  if (static_cast<long>(totals.size()) != N) return false;
  for (const auto& [file, total] : totals) {
    if (file < 1 || file > N) return false;
    if (total != Rat(1)) return false;
  }
  return true;
}

Rat t_lb_sigma(const SubfileSizeProfile& profile, const Demand& demand,
               const std::vector<int>& sigma) {
  const int lambda = static_cast<int>(demand.users.size());
  validate_permutation(sigma, lambda);

  Rat total(0);
  std::vector<int> visited;  // ascending prefix of sigma
  for (int lab : sigma) {
    visited.insert(std::upper_bound(visited.begin(), visited.end(), lab), lab);
    for (int user : demand.users[static_cast<size_t>(lab - 1)]) {
      const long file = demand.d[static_cast<size_t>(user - 1)];
      for (const auto& [key, share] : profile.sizes) {
        if (key.first != file) continue;
        if (intersection_size(key.second, visited) == 0) total += share;
      }
    }
  }
  return total;
}

Rat brute_force_coefficient(const Topology& topo, long N, long p,
                            const std::vector<int>& tau) {
  const int lambda = topo.lambda();
  const long K = int_to_long(topo.K);
  if (lambda > 4 || K > 6 || N > 8)
    throw resource_limit_error("exhaustive averaging is capped at 4 caches, 6 users, 8 files");
  if (N < K) throw std::invalid_argument("distinct demands need at least as many files as users");
  if (p < 0 || p > lambda)
    throw std::invalid_argument("parameter p must lie in {0..cache count}");
  const std::vector<int> phi = canonical_subset(lambda, tau);

  // Weights share the fixed denominator (Lambda-p)! * p! * e_p(L); summing
  // integer numerators keeps the whole average exact and cheap.
  const Int weightDen = factorial(static_cast<unsigned long>(lambda - p)) *
                        factorial(static_cast<unsigned long>(p)) * elem_sym(topo.L, p);

  const Demand shape = Demand::contiguous(topo, std::vector<long>(static_cast<size_t>(K), 1));

  // For each permutation: its weight numerator, plus the position of every
  // cache label inside it.
  struct PermInfo {
    Int weightNum;
    std::vector<int> position;  // position[lab-1] = index of lab in sigma
  };
  std::vector<PermInfo> perms;
  for_each_permutation(lambda, [&](const std::vector<int>& sigma) {
    PermInfo info;
    info.weightNum = 1;
    for (long k = 0; k < p; ++k)
      info.weightNum *= topo.occupancy(sigma[static_cast<size_t>(lambda - p + k)]);
    info.position.resize(static_cast<size_t>(lambda));
    for (int pos = 0; pos < lambda; ++pos)
      info.position[static_cast<size_t>(sigma[static_cast<size_t>(pos)] - 1)] = pos;
    perms.push_back(std::move(info));
  });

  // A user's term features |W^{(1)}_tau| iff it requests file 1 and its
  // cache comes strictly before every element of tau in sigma.
  Int accumulated(0);
  Int demandCount(0);
  for_each_k_permutation(static_cast<int>(N), static_cast<int>(K),
                         [&](const std::vector<int>& files) {
                           ++demandCount;
                           for (const PermInfo& info : perms) {
                             long appearances = 0;
                             for (long u = 1; u <= K; ++u) {
                               if (files[static_cast<size_t>(u - 1)] != 1) continue;
                               const int cache = shape.cacheOfUser[static_cast<size_t>(u - 1)];
                               const int cachePos =
                                   info.position[static_cast<size_t>(cache - 1)];
                               bool valid = true;
                               for (int v : phi) {
                                 if (info.position[static_cast<size_t>(v - 1)] <= cachePos) {
                                   valid = false;
                                   break;
                                 }
                               }
                               if (valid) ++appearances;
                             }
                             accumulated += info.weightNum * Int(appearances);
                           }
                         });

  return make_rat(Int(N) * accumulated, demandCount * weightDen);
}

std::vector<int> brute_force_tau_star(const Topology& topo, long p, long j) {
  const int lambda = topo.lambda();
  if (lambda > 6) throw resource_limit_error("exhaustive tau* search is capped at 6 caches");
  if (p < 0 || p > lambda)
    throw std::invalid_argument("parameter p must lie in {0..cache count}");
  if (j < 0 || j > lambda)
    throw std::invalid_argument("subset size j must lie in {0..cache count}");

  const Multiset sorted = topo.sorted_desc();
  const std::vector<int> stated = tau_star(topo, p, j);
  const Rat statedValue = tilde_coefficient_over(sorted, p, stated);

  std::vector<int> best;
  Rat bestValue;
  bool first = true;
  for_each_k_subset(lambda, static_cast<int>(j), [&](const std::vector<int>& cand) {
    const Rat value = tilde_coefficient_over(sorted, p, cand);
    if (first || value < bestValue) {
      best = cand;
      bestValue = value;
      first = false;
    }
  });
  if (bestValue == statedValue) return stated;
  return best;
}

bool verify_lp_point(const Topology& topo, long t) {
  if (topo.lambda() > 5)
    throw resource_limit_error("placement-point verification is capped at 5 caches");
  if (t < 0 || t > topo.lambda())
    throw std::invalid_argument("budget t must lie in {0..cache count}");

  const PlacementSpec spec = build_placement(topo, t);
  const MemoryAllocation alloc = allocate(topo, t);
  if (!verify_placement(spec, alloc)) return false;

  // Fractions of the regular point, and its objective value at p = t.
  Rat massTotal(0);
  Rat objective(0);
  for (const auto& [tau, count] : spec.tauCount) {
    const Rat a = make_rat(Int(count), Int(spec.S));
    massTotal += a;
    objective += coefficient(topo, t, tau) * a;
  }
  if (massTotal != Rat(1)) return false;
  return objective == lower_bound_regular(topo, t).value;
}

Rat weighted_sigma_bound(const PlacementSpec& spec, const Demand& demand, long p) {
  const int lambda = spec.topo.lambda();
  if (lambda > 8)
    throw resource_limit_error("full permutation averaging is capped at 8 caches");

  long maxFile = 1;
  for (long f : demand.d) maxFile = std::max(maxFile, f);
  const SubfileSizeProfile profile = SubfileSizeProfile::from_placement(spec, maxFile);

  Rat total(0);
  for_each_permutation(lambda, [&](const std::vector<int>& sigma) {
    total += weight(sigma, p, spec.topo) * t_lb_sigma(profile, demand, sigma);
  });
  return total;
}

}  // namespace shc
