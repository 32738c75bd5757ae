#include "mismatch.hpp"

#include <algorithm>
#include <stdexcept>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "symfunc.hpp"

namespace shc {

namespace {

constexpr int kMaxConverseLambda = 10;

void validate_q(const MismatchScenario& scn, const std::vector<int>& Q) {
  if (static_cast<long>(Q.size()) != scn.t + 1)
    throw std::invalid_argument("Q must contain exactly t+1 cache labels");
  int prev = 0;
  for (int lab : Q) {
    if (lab < 1 || lab > scn.lambda())
      throw std::invalid_argument("cache label out of range");
    if (lab <= prev) throw std::invalid_argument("label set must be strictly ascending");
    prev = lab;
  }
}

// Caches ordered by realized/assumed occupancy ratio, best first, ties by
// label. Within any clique the leader is the member earliest in this order.
std::vector<int> ratio_order(const MismatchScenario& scn) {
  std::vector<int> order(static_cast<size_t>(scn.lambda()));
  for (int lab = 1; lab <= scn.lambda(); ++lab) order[static_cast<size_t>(lab - 1)] = lab;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    // L_a / Lbar_a > L_b / Lbar_b, compared by cross-multiplication.
    const Int lhs = scn.realized[static_cast<size_t>(a - 1)] * scn.assumed.occupancy(b);
    const Int rhs = scn.realized[static_cast<size_t>(b - 1)] * scn.assumed.occupancy(a);
    if (lhs != rhs) return lhs > rhs;
    return a < b;
  });
  return order;
}

}  // namespace

MismatchScenario MismatchScenario::create(Multiset assumed, std::vector<Int> realized, long t) {
  if (assumed.size() != realized.size())
    throw std::invalid_argument("assumed and realized vectors must have the same length");
  for (const Int& v : realized)
    if (v < 0) throw std::invalid_argument("realized occupancies must be non-negative");
  MismatchScenario scn;
  scn.assumed = Topology::create(std::move(assumed));  // enforces entries >= 1
  scn.realized = std::move(realized);
  if (t < 0 || t > scn.lambda())
    throw std::invalid_argument("budget t must lie in {0..cache count}");
  scn.t = t;
  return scn;
}

Int MismatchScenario::realized_users() const {
  Int total(0);
  for (const Int& v : realized) total += v;
  return total;
}

Int clique_count_mismatch(const MismatchScenario& scn, const std::vector<int>& Q, int lam) {
  validate_q(scn, Q);
  if (!contains_label(Q, lam)) throw std::invalid_argument("lam must be a member of Q");
  Int prod = scn.realized[static_cast<size_t>(lam - 1)];
  for (int mu : Q)
    if (mu != lam) prod *= scn.assumed.occupancy(mu);
  return prod;
}

Rat delivery_time_mismatch(const MismatchScenario& scn) {
  Int total(0);
  for_each_k_subset(scn.lambda(), static_cast<int>(scn.t) + 1, [&](const std::vector<int>& Q) {
    Int best(0);
    for (int lam : Q) {
      Int prod = scn.realized[static_cast<size_t>(lam - 1)];
      for (int mu : Q)
        if (mu != lam) prod *= scn.assumed.occupancy(mu);
      if (prod > best) best = prod;
    }
    total += best;
  });
  return make_rat(total, elem_sym(scn.assumed.L, scn.t));
}

Rat converse_mismatch(const MismatchScenario& scn) {
  const int n = scn.lambda();
  if (n > kMaxConverseLambda)
    throw resource_limit_error("the permutation converse is capped at " +
                               std::to_string(kMaxConverseLambda) + " caches");
  const long t = scn.t;
  const uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);

  // eTable[mask] = e_t of the assumed occupancies restricted to mask.
  std::vector<Int> eTable(static_cast<size_t>(full) + 1);
  {
    std::vector<std::vector<Int>> ek(static_cast<size_t>(full) + 1);
    ek[0].assign(static_cast<size_t>(t) + 1, Int(0));
    ek[0][0] = 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
      const int bit = __builtin_ctz(mask);
      const uint32_t rest = mask & (mask - 1);
      const Int& x = scn.assumed.occupancy(bit + 1);
      auto& cur = ek[mask];
      cur = ek[rest];
      for (long k = t; k >= 1; --k)
        cur[static_cast<size_t>(k)] += x * cur[static_cast<size_t>(k - 1)];
    }
    for (uint32_t mask = 0; mask <= full; ++mask)
      eTable[mask] = ek[mask][static_cast<size_t>(t)];
  }

  // best[visited] = max over the remaining choices of the numerator sum;
  // tuples stop after Lambda - t picks.
  const int picks = n - static_cast<int>(t);
  std::vector<Int> best(static_cast<size_t>(full) + 1, Int(0));
  std::vector<bool> done(static_cast<size_t>(full) + 1, false);
  auto solve = [&](auto&& self, uint32_t visited, int depth) -> const Int& {
    if (done[visited]) return best[visited];
    done[visited] = true;
    if (depth == picks) return best[visited];
    Int value(0);
    for (int lab = 1; lab <= n; ++lab) {
      const uint32_t bit = 1u << (lab - 1);
      if (visited & bit) continue;
      const uint32_t nextVisited = visited | bit;
      Int cand = scn.realized[static_cast<size_t>(lab - 1)] * eTable[full ^ nextVisited] +
                 self(self, nextVisited, depth + 1);
      if (cand > value) value = std::move(cand);
    }
    best[visited] = std::move(value);
    return best[visited];
  };
  return make_rat(solve(solve, 0, 0), elem_sym(scn.assumed.L, t));
}

Rat mismatch_delay_formula(const std::vector<Rat>& realized, const std::vector<Rat>& assumed,
                           long t) {
  if (realized.size() != assumed.size())
    throw std::invalid_argument("assumed and realized vectors must have the same length");
  const int n = static_cast<int>(assumed.size());
  if (n == 0) throw std::invalid_argument("occupancy vector is empty");
  if (t < 0 || t > n) throw std::invalid_argument("budget t must lie in {0..cache count}");
  for (const Rat& v : assumed)
    if (v <= 0) throw std::invalid_argument("assumed occupancies must be positive");
  for (const Rat& v : realized)
    if (v < 0) throw std::invalid_argument("realized occupancies must be non-negative");

  const std::vector<Rat> e = elem_sym_prefix(assumed, t);
  // Within a clique the maximizer is the best realized/assumed ratio; the
  // clique's own assumed product is a common positive factor.
  std::vector<Rat> ratio(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    ratio[static_cast<size_t>(i)] = realized[static_cast<size_t>(i)] / assumed[static_cast<size_t>(i)];

  Rat total(0);
  for_each_k_subset(n, static_cast<int>(t) + 1, [&](const std::vector<int>& Q) {
    Rat prod(1);
    const Rat* best = nullptr;
    for (int lab : Q) {
      prod *= assumed[static_cast<size_t>(lab - 1)];
      const Rat& r = ratio[static_cast<size_t>(lab - 1)];
      if (best == nullptr || r > *best) best = &r;
    }
    total += prod * (*best);
  });
  return total / e[static_cast<size_t>(t)];
}

Rat perfect_delay_formula(const std::vector<Rat>& occupancies, long t) {
  const int n = static_cast<int>(occupancies.size());
  if (n == 0) throw std::invalid_argument("occupancy vector is empty");
  if (t < 0 || t > n) throw std::invalid_argument("budget t must lie in {0..cache count}");
  for (const Rat& v : occupancies)
    if (v <= 0) throw std::invalid_argument("occupancies must be positive");
  const std::vector<Rat> e = elem_sym_prefix(occupancies, t + 1);
  return e[static_cast<size_t>(t + 1)] / e[static_cast<size_t>(t)];
}

LeaderAssignment leaders(const MismatchScenario& scn) {
  if (scn.t >= scn.lambda())
    throw std::invalid_argument("leaders are defined only for t below the cache count");
  const std::vector<int> order = ratio_order(scn);
  std::vector<int> position(static_cast<size_t>(scn.lambda()) + 1, 0);
  for (int pos = 0; pos < scn.lambda(); ++pos)
    position[static_cast<size_t>(order[static_cast<size_t>(pos)])] = pos;

  LeaderAssignment out;
  out.leaders.assign(order.begin(),
                     order.begin() + (scn.lambda() - static_cast<int>(scn.t)));
  for_each_k_subset(scn.lambda(), static_cast<int>(scn.t) + 1,
                    [&](const std::vector<int>& Q) {
                      int leader = Q.front();
                      for (int lab : Q)
                        if (position[static_cast<size_t>(lab)] <
                            position[static_cast<size_t>(leader)])
                          leader = lab;
                      out.perSetLeader[Q] = leader;
                    });
  return out;
}

Demand realized_demand(const MismatchScenario& scn, std::vector<long> d) {
  const long total = int_to_long(scn.realized_users());
  if (static_cast<long>(d.size()) != total)
    throw std::invalid_argument("demand length must equal the realized user count");
  for (long f : d)
    if (f < 1) throw std::invalid_argument("file indices are 1-based");
  Demand dem;
  dem.d = std::move(d);
  dem.users.resize(static_cast<size_t>(scn.lambda()));
  dem.cacheOfUser.resize(static_cast<size_t>(total));
  int user = 1;
  for (int lab = 1; lab <= scn.lambda(); ++lab) {
    const long occ = int_to_long(scn.realized[static_cast<size_t>(lab - 1)]);
    for (long i = 0; i < occ; ++i, ++user) {
      dem.users[static_cast<size_t>(lab - 1)].push_back(user);
      dem.cacheOfUser[static_cast<size_t>(user - 1)] = lab;
    }
  }
  return dem;
}

Demand realized_worst_case(const MismatchScenario& scn, long N) {
  const long total = int_to_long(scn.realized_users());
  if (N < total)
    throw std::invalid_argument("distinct demands need at least as many files as users");
  std::vector<long> d(static_cast<size_t>(total));
  for (long i = 0; i < total; ++i) d[static_cast<size_t>(i)] = i + 1;
  return realized_demand(scn, std::move(d));
}

MismatchDelivery schedule_mismatch(const MismatchScenario& scn, const Demand& demand,
                                   const Library& lib) {
  const PlacementSpec spec = build_placement(scn.assumed, scn.t);
  if (lib.S != spec.S)
    throw std::invalid_argument("library was sliced for a different placement");
  if (static_cast<int>(demand.users.size()) != scn.lambda())
    throw std::invalid_argument("demand does not match the scenario");
  for (int lab = 1; lab <= scn.lambda(); ++lab)
    if (Int(static_cast<long>(demand.users[static_cast<size_t>(lab - 1)].size())) !=
        scn.realized[static_cast<size_t>(lab - 1)])
      throw std::invalid_argument("demand does not match the realized occupancies");
  for (long f : demand.d)
    if (f < 1 || f > lib.N) throw std::invalid_argument("demanded file outside the library");

  MismatchDelivery out;
  for_each_k_subset(scn.lambda(), static_cast<int>(scn.t) + 1,
                    [&](const std::vector<int>& Q) {
    // Per member: its complement class size and its own message count.
    std::vector<std::vector<int>> taus(Q.size());
    std::vector<long> cnt(Q.size()), quota(Q.size());
    long pmax = 0;
    for (size_t qi = 0; qi < Q.size(); ++qi) {
      for (int mu : Q)
        if (mu != Q[qi]) taus[qi].push_back(mu);
      cnt[qi] = spec.tauCount.at(taus[qi]);
      quota[qi] =
          int_to_long(scn.realized[static_cast<size_t>(Q[qi] - 1)] * Int(cnt[qi]));
      pmax = std::max(pmax, quota[qi]);
    }
    for (long j = 1; j <= pmax; ++j) {
      Transmission tx;
      tx.Q = Q;
      tx.j = j;
      tx.payload.assign(lib.subfileLength, 0);
      for (size_t qi = 0; qi < Q.size(); ++qi) {
        if (j > quota[qi]) {  // this cache's wanted list is exhausted
          tx.parts.push_back(Constituent{0, SubfileId{}, true});
          continue;
        }
        const long idx = j - 1;
        const int user =
            demand.users[static_cast<size_t>(Q[qi] - 1)][static_cast<size_t>(idx / cnt[qi])];
        const long m = idx % cnt[qi] + 1;
        tx.parts.push_back(Constituent{user, SubfileId{taus[qi], m}, false});
        const long ord = spec.ordinal(taus[qi], m);
        for (size_t b = 0; b < lib.subfileLength; ++b)
          tx.payload[b] ^= lib.slice(demand.d[static_cast<size_t>(user - 1)], ord)[b];
      }
      out.transmissions.push_back(std::move(tx));
    }
  });

  const auto recovered = decode(spec, demand, out.transmissions, lib);
  out.report.numTransmissions = Int(static_cast<long>(out.transmissions.size()));
  out.report.S = Int(spec.S);
  out.report.T = make_rat(out.report.numTransmissions, out.report.S);
  for (int user = 1; user <= demand.num_users(); ++user) {
    const long file = demand.d[static_cast<size_t>(user - 1)];
    out.report.perUserDecodeOk.push_back(recovered[static_cast<size_t>(user - 1)] ==
                                         lib.padded[static_cast<size_t>(file - 1)]);
  }
  return out;
}

}  // namespace shc
