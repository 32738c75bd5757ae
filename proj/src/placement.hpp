#pragma once
// Subfile partition and cache contents: each file is split into S equal
// subfiles labelled (tau, m) where tau is a t-subset of cache labels and m
// counts copies through the product of occupancies over tau; cache lab
// stores every subfile whose tau contains lab. Also the byte-level library
// that realizes subfiles as contiguous slices of padded payloads.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "exact.hpp"
#include "model.hpp"

namespace shc {

// Label of one subfile: an ascending t-subset of cache labels plus a
// counter m in {1 .. product of occupancies over tau}.
struct SubfileId {
  std::vector<int> tau;
  long m = 1;

  std::string to_string() const;  // "{1,2}:3"
  bool operator==(const SubfileId&) const = default;
};

// Full partition for one (topology, integer budget) pair, in canonical
// order: tau-sets lexicographic by ascending labels, m ascending within.
struct PlacementSpec {
  Topology topo;
  long t = 0;
  long S = 1;                                   // subpacketization, e_t(L)
  std::vector<SubfileId> subfiles;              // canonical order
  std::vector<std::vector<long>> cacheContents; // per cache: subfile ordinals
  std::map<std::vector<int>, long> tauOffset;   // first ordinal of each tau class
  std::map<std::vector<int>, long> tauCount;    // class size: product over tau

  // Ordinal of (tau, m) in the canonical order; throws on unknown labels.
  long ordinal(const std::vector<int>& tau, long m) const;
  bool cache_stores(int cacheLabel, long subfileOrdinal) const;
};

// S = e_t(L); t = 0 gives 1 (whole files, nothing cached). Exact, uncapped.
Int subpacketize(const Topology& topo, long t);

// Builds the canonical partition. Throws resource_limit_error when the
// subpacketization or a single tau class exceeds the in-memory cap.
PlacementSpec build_placement(const Topology& topo, long t);

// True iff every subfile lands in exactly t caches and every per-cache
// count equals gamma * S exactly.
bool verify_placement(const PlacementSpec& spec, const MemoryAllocation& alloc);

// Product of occupancies over Q: for any cache in Q, this is the number of
// subfiles with tau = Q minus that cache wanted by that cache's users.
Int clique_count(const Topology& topo, const std::vector<int>& Q);

// N padded byte payloads sliced into S equal subfiles each.
struct Library {
  long N = 0;
  long S = 1;
  size_t subfileLength = 0;                  // bytes per subfile
  std::vector<std::vector<uint8_t>> padded;  // each of size S * subfileLength
  std::vector<size_t> originalLength;

  // Pads each payload with zeros to S equal slices (slice length is the
  // smallest that fits the longest payload).
  static Library build(const std::vector<std::vector<uint8_t>>& payloads, long S);

  // Deterministic pseudo-random payloads, all of length fileLength.
  static Library random(long N, size_t fileLength, long S, uint64_t seed);

  const uint8_t* slice(long file, long subfileOrdinal) const;
};

}  // namespace shc
