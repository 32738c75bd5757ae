// Multicast delivery: clique-indexed XOR schedule, byte-exact decoding, and
// the closed-form delivery-time expressions (integer and fractional budgets).
#pragma once

#include <cstdint>
#include <vector>

#include "exact.hpp"
#include "model.hpp"
#include "placement.hpp"

namespace shc {

// A demand instance: one requested file per user plus the user <-> cache map.
// Users are numbered 1..K; cache `lab` serves the contiguous block recorded
// in `users[lab-1]` (ascending user ids).
struct Demand {
  std::vector<long> d;                  // d[u-1] = file index requested by user u (1-based)
  std::vector<std::vector<int>> users;  // users[lab-1] = user ids attached to cache lab
  std::vector<int> cacheOfUser;         // cacheOfUser[u-1] = cache label of user u

  long num_users() const { return static_cast<long>(d.size()); }

  // Users 1..K assigned to caches in label order (cache 1 gets the first L_1
  // user ids, cache 2 the next L_2, ...).
  static Demand contiguous(const Topology& topo, std::vector<long> d);

  // Distinct-file demand d = (1, 2, ..., K); requires N >= K.
  static Demand worst_case(const Topology& topo, long N);
};

// One summand of a coded transmission: `user`'s missing subfile `sf`.
// Padding slots (possible when the realized occupancy falls short of the
// planned one) carry empty=true and contribute nothing to the payload.
struct Constituent {
  int user = 0;
  SubfileId sf;
  bool empty = false;
};

// One multicast message: slot `j` of the clique `Q`, the XOR of the listed
// constituents' subfiles.
struct Transmission {
  std::vector<int> Q;
  long j = 0;
  std::vector<Constituent> parts;
  std::vector<uint8_t> payload;
};

// Produce the full schedule for an integer-budget placement: for each
// (t+1)-subset Q of caches (lexicographic) emit prod_{lab in Q} L_lab
// messages; slot j serves cache lab's wanted list sorted by (user, counter).
std::vector<Transmission> schedule(const PlacementSpec& spec, const Demand& demand,
                                   const Library& lib);

// Reconstruct every user's requested file from its cache content plus the
// transmissions. Returns per-user padded buffers (S * subfileLength bytes).
// Throws decode_failure if some user cannot recover some subfile.
std::vector<std::vector<uint8_t>> decode(const PlacementSpec& spec, const Demand& demand,
                                         const std::vector<Transmission>& txs,
                                         const Library& lib);

struct DeliveryReport {
  Int numTransmissions = 0;
  Int S = 1;
  Rat T;                             // numTransmissions / S
  std::vector<bool> perUserDecodeOk;
  bool decode_ok() const {
    for (bool ok : perUserDecodeOk)
      if (!ok) return false;
    return true;
  }
};

// Schedule, decode, and compare against the library in one step.
DeliveryReport deliver_report(const PlacementSpec& spec, const Demand& demand,
                              const Library& lib);

// Closed-form worst-case delivery time at budget t (0 <= t <= #caches):
// e_{t+1}(L)/e_t(L) at integer t, and the alpha-weighted combination of the
// two neighbouring integer budgets otherwise.
Rat delivery_time(const Topology& topo, const Rat& t);

// Byte-exact simulation across the (at most two) rounds induced by a
// fractional budget: each file is split at floor(alpha * length) bytes, the
// head delivered under floor(t) and the tail under ceil(t).
struct TwoRoundReport {
  MemoryShare share;
  DeliveryReport round1;
  DeliveryReport round2;               // zero transmissions when t is integral
  Rat exactT;                          // alpha-combination of round rates
  Rat realizedT;                       // transmitted bytes / file length
  Rat granule;                         // largest subfile length / file length
  std::vector<bool> perUserDecodeOk;   // reassembled file == requested file
  bool decode_ok() const {
    for (bool ok : perUserDecodeOk)
      if (!ok) return false;
    return true;
  }
};

TwoRoundReport schedule_fractional(const Topology& topo, const Rat& t,
                                   const std::vector<long>& d,
                                   const std::vector<std::vector<uint8_t>>& payloads);

}  // namespace shc
