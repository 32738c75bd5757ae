#include "delivery.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "combinatorics.hpp"
#include "errors.hpp"

namespace shc {

namespace {

void xor_into(uint8_t* dst, const uint8_t* src, size_t len) {
  for (size_t i = 0; i < len; ++i) dst[i] ^= src[i];
}

}  // namespace

Demand Demand::contiguous(const Topology& topo, std::vector<long> d) {
  const long K = int_to_long(topo.K);
  if (static_cast<long>(d.size()) != K)
    throw std::invalid_argument("demand length must equal the number of users");
  for (long f : d)
    if (f < 1) throw std::invalid_argument("file indices are 1-based");
  Demand dem;
  dem.d = std::move(d);
  dem.users.resize(static_cast<size_t>(topo.lambda()));
  dem.cacheOfUser.resize(static_cast<size_t>(K));
  int user = 1;
  for (int lab = 1; lab <= topo.lambda(); ++lab) {
    long occ = int_to_long(topo.occupancy(lab));
    for (long i = 0; i < occ; ++i, ++user) {
      dem.users[static_cast<size_t>(lab - 1)].push_back(user);
      dem.cacheOfUser[static_cast<size_t>(user - 1)] = lab;
    }
  }
  return dem;
}

Demand Demand::worst_case(const Topology& topo, long N) {
  const long K = int_to_long(topo.K);
  if (N < K)
    throw std::invalid_argument("distinct demands need at least as many files as users");
  std::vector<long> d(static_cast<size_t>(K));
  std::iota(d.begin(), d.end(), 1L);
  return contiguous(topo, std::move(d));
}

std::vector<Transmission> schedule(const PlacementSpec& spec, const Demand& demand,
                                   const Library& lib) {
  const Topology& topo = spec.topo;
  if (demand.num_users() != int_to_long(topo.K))
    throw std::invalid_argument("demand does not match the topology");
  if (lib.S != spec.S)
    throw std::invalid_argument("library was sliced for a different placement");
  for (long f : demand.d)
    if (f < 1 || f > lib.N) throw std::invalid_argument("demanded file outside the library");

  std::vector<Transmission> txs;
  const int r = static_cast<int>(spec.t) + 1;  // no cliques when t = #caches
  for_each_k_subset(topo.lambda(), r, [&](const std::vector<int>& Q) {
    const long P = int_to_long(product_over(topo.L, Q));
    // tau = Q minus lab, and the per-user slice of each cache's wanted list.
    std::vector<std::vector<int>> taus(Q.size());
    std::vector<long> cnt(Q.size());
    for (size_t qi = 0; qi < Q.size(); ++qi) {
      for (int mu : Q)
        if (mu != Q[qi]) taus[qi].push_back(mu);
      cnt[qi] = spec.tauCount.at(taus[qi]);
    }
    for (long j = 1; j <= P; ++j) {
      Transmission tx;
      tx.Q = Q;
      tx.j = j;
      tx.payload.assign(lib.subfileLength, 0);
      for (size_t qi = 0; qi < Q.size(); ++qi) {
        // Slot j of cache Q[qi]'s wanted list, sorted by (user, counter).
        const long idx = j - 1;
        const int user =
            demand.users[static_cast<size_t>(Q[qi] - 1)][static_cast<size_t>(idx / cnt[qi])];
        const long m = idx % cnt[qi] + 1;
        tx.parts.push_back(Constituent{user, SubfileId{taus[qi], m}, false});
        const long ord = spec.ordinal(taus[qi], m);
        xor_into(tx.payload.data(), lib.slice(demand.d[static_cast<size_t>(user - 1)], ord),
                 lib.subfileLength);
      }
      txs.push_back(std::move(tx));
    }
  });
  return txs;
}

std::vector<std::vector<uint8_t>> decode(const PlacementSpec& spec, const Demand& demand,
                                         const std::vector<Transmission>& txs,
                                         const Library& lib) {
  // Each scheduled (user, missing subfile) pair is served by exactly one
  // transmission; index them all up front.
  std::map<std::pair<int, long>, std::pair<size_t, size_t>> carrier;
  for (size_t ti = 0; ti < txs.size(); ++ti) {
    for (size_t pi = 0; pi < txs[ti].parts.size(); ++pi) {
      const Constituent& part = txs[ti].parts[pi];
      if (part.empty) continue;
      carrier.emplace(std::make_pair(part.user, spec.ordinal(part.sf.tau, part.sf.m)),
                      std::make_pair(ti, pi));
    }
  }

  const size_t len = lib.subfileLength;
  std::vector<std::vector<uint8_t>> out;
  out.reserve(static_cast<size_t>(demand.num_users()));
  for (int user = 1; user <= demand.num_users(); ++user) {
    const int lab = demand.cacheOfUser[static_cast<size_t>(user - 1)];
    const long file = demand.d[static_cast<size_t>(user - 1)];
    std::vector<uint8_t> buf(static_cast<size_t>(spec.S) * len, 0);
    for (long ord = 0; ord < spec.S; ++ord) {
      uint8_t* dst = buf.data() + static_cast<size_t>(ord) * len;
      if (spec.cache_stores(lab, ord)) {
        const uint8_t* src = lib.slice(file, ord);
        std::copy(src, src + len, dst);
        continue;
      }
      auto it = carrier.find({user, ord});
      if (it == carrier.end())
        throw decode_failure(user, spec.subfiles[static_cast<size_t>(ord)].to_string(),
                             "no transmission carries it");
      const Transmission& tx = txs[it->second.first];
      std::copy(tx.payload.begin(), tx.payload.end(), dst);
      // Peel off the interfering constituents from the cached copies.
      for (size_t pi = 0; pi < tx.parts.size(); ++pi) {
        if (pi == it->second.second || tx.parts[pi].empty) continue;
        const Constituent& other = tx.parts[pi];
        const long otherOrd = spec.ordinal(other.sf.tau, other.sf.m);
        if (!spec.cache_stores(lab, otherOrd))
          throw decode_failure(user, spec.subfiles[static_cast<size_t>(ord)].to_string(),
                               "interfering subfile " + other.sf.to_string() +
                                   " is not in cache " + std::to_string(lab));
        xor_into(dst, lib.slice(demand.d[static_cast<size_t>(other.user - 1)], otherOrd), len);
      }
    }
    out.push_back(std::move(buf));
  }
  return out;
}

DeliveryReport deliver_report(const PlacementSpec& spec, const Demand& demand,
                              const Library& lib) {
  const auto txs = schedule(spec, demand, lib);
  const auto recovered = decode(spec, demand, txs, lib);
  DeliveryReport rep;
  rep.numTransmissions = Int(static_cast<long>(txs.size()));
  rep.S = Int(spec.S);
  rep.T = make_rat(rep.numTransmissions, rep.S);
  for (int user = 1; user <= demand.num_users(); ++user) {
    const long file = demand.d[static_cast<size_t>(user - 1)];
    rep.perUserDecodeOk.push_back(recovered[static_cast<size_t>(user - 1)] ==
                                  lib.padded[static_cast<size_t>(file - 1)]);
  }
  return rep;
}

Rat delivery_time(const Topology& topo, const Rat& t) {
  validate_budget(topo, CacheBudget{t, Int(1)});
  if (rat_is_integer(t)) {
    const long ti = int_to_long(Int(t.get_num()));
    return make_rat(elem_sym(topo.L, ti + 1), elem_sym(topo.L, ti));
  }
  const MemoryShare share = split_budget(t, topo.lambda());
  const Rat lo =
      make_rat(elem_sym(topo.L, share.floorBudget + 1), elem_sym(topo.L, share.floorBudget));
  const Rat hi =
      make_rat(elem_sym(topo.L, share.ceilBudget + 1), elem_sym(topo.L, share.ceilBudget));
  return share.alpha * lo + (Rat(1) - share.alpha) * hi;
}

TwoRoundReport schedule_fractional(const Topology& topo, const Rat& t,
                                   const std::vector<long>& d,
                                   const std::vector<std::vector<uint8_t>>& payloads) {
  validate_budget(topo, CacheBudget{t, Int(static_cast<long>(payloads.size()))});
  if (payloads.empty()) throw std::invalid_argument("library is empty");
  const size_t fileLen = payloads[0].size();
  if (fileLen == 0) throw std::invalid_argument("files must be non-empty");
  for (const auto& p : payloads)
    if (p.size() != fileLen) throw std::invalid_argument("files must share one length");
  const Demand demand = Demand::contiguous(topo, d);
  for (long f : d)
    if (f > static_cast<long>(payloads.size()))
      throw std::invalid_argument("demanded file outside the library");

  TwoRoundReport rep;
  rep.share = split_budget(t, topo.lambda());
  rep.exactT = delivery_time(topo, t);

  // Head bytes go through the floor(t) scheme, tail bytes through ceil(t).
  const Rat alphaLen = rep.share.alpha * Rat(Int(static_cast<long>(fileLen)));
  const size_t cut = static_cast<size_t>(int_to_long(rat_floor(alphaLen)));

  std::vector<std::vector<uint8_t>> rec1, rec2;
  size_t sub1 = 0, sub2 = 0;
  Int sentBytes(0);
  auto run_round = [&](long budget, size_t from, size_t to, DeliveryReport& round,
                       std::vector<std::vector<uint8_t>>& rec, size_t& sublen) {
    std::vector<std::vector<uint8_t>> parts;
    parts.reserve(payloads.size());
    for (const auto& p : payloads)
      parts.emplace_back(p.begin() + static_cast<long>(from), p.begin() + static_cast<long>(to));
    const PlacementSpec spec = build_placement(topo, budget);
    const Library lib = Library::build(parts, spec.S);
    const auto txs = schedule(spec, demand, lib);
    rec = decode(spec, demand, txs, lib);
    sublen = lib.subfileLength;
    round.numTransmissions = Int(static_cast<long>(txs.size()));
    round.S = Int(spec.S);
    round.T = make_rat(round.numTransmissions, round.S);
    for (int user = 1; user <= demand.num_users(); ++user) {
      const long file = demand.d[static_cast<size_t>(user - 1)];
      round.perUserDecodeOk.push_back(rec[static_cast<size_t>(user - 1)] ==
                                      lib.padded[static_cast<size_t>(file - 1)]);
    }
    sentBytes += round.numTransmissions * Int(static_cast<long>(sublen));
  };

  if (cut > 0) run_round(rep.share.floorBudget, 0, cut, rep.round1, rec1, sub1);
  if (cut < fileLen) run_round(rep.share.ceilBudget, cut, fileLen, rep.round2, rec2, sub2);

  for (int user = 1; user <= demand.num_users(); ++user) {
    std::vector<uint8_t> got;
    got.reserve(fileLen);
    if (cut > 0) {
      const auto& r = rec1[static_cast<size_t>(user - 1)];
      got.insert(got.end(), r.begin(), r.begin() + static_cast<long>(cut));
    }
    if (cut < fileLen) {
      const auto& r = rec2[static_cast<size_t>(user - 1)];
      got.insert(got.end(), r.begin(), r.begin() + static_cast<long>(fileLen - cut));
    }
    const long file = demand.d[static_cast<size_t>(user - 1)];
    rep.perUserDecodeOk.push_back(got == payloads[static_cast<size_t>(file - 1)]);
  }

  rep.realizedT = make_rat(sentBytes, Int(static_cast<long>(fileLen)));
  rep.granule = make_rat(Int(static_cast<long>(std::max(sub1, sub2))),
                         Int(static_cast<long>(fileLen)));
  return rep;
}

}  // namespace shc
