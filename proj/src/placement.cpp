#include "placement.hpp"

#include <algorithm>
#include <stdexcept>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace shc {

namespace {

constexpr long kMaxSubfiles = 5'000'000;

void validate_label_set(const Topology& topo, const std::vector<int>& Q) {
  int prev = 0;
  for (int lab : Q) {
    if (lab < 1 || lab > topo.lambda())
      throw std::invalid_argument("cache label out of range");
    if (lab <= prev) throw std::invalid_argument("label set must be strictly ascending");
    prev = lab;
  }
}

}  // namespace

std::string SubfileId::to_string() const {
  std::string out = "{";
  for (size_t i = 0; i < tau.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(tau[i]);
  }
  out += "}:" + std::to_string(m);
  return out;
}

long PlacementSpec::ordinal(const std::vector<int>& tau, long m) const {
  auto off = tauOffset.find(tau);
  auto cnt = tauCount.find(tau);
  if (off == tauOffset.end() || cnt == tauCount.end())
    throw std::invalid_argument("unknown subfile class");
  if (m < 1 || m > cnt->second) throw std::invalid_argument("subfile counter out of range");
  return off->second + (m - 1);
}

bool PlacementSpec::cache_stores(int cacheLabel, long subfileOrdinal) const {
  const SubfileId& sf = subfiles[static_cast<size_t>(subfileOrdinal)];
  return contains_label(sf.tau, cacheLabel);
}

Int subpacketize(const Topology& topo, long t) {
  if (t < 0 || t > topo.lambda())
    throw std::invalid_argument("budget t must lie in {0..cache count}");
  return elem_sym(topo.L, t);
}

PlacementSpec build_placement(const Topology& topo, long t) {
  Int S_exact = subpacketize(topo, t);  // validates t
  if (S_exact > kMaxSubfiles)
    throw resource_limit_error("subpacketization " + S_exact.get_str() +
                               " exceeds the in-memory cap of " +
                               std::to_string(kMaxSubfiles));
  PlacementSpec spec;
  spec.topo = topo;
  spec.t = t;
  spec.S = int_to_long(S_exact);
  spec.cacheContents.assign(static_cast<size_t>(topo.lambda()), {});

  long next = 0;
  for_each_k_subset(topo.lambda(), static_cast<int>(t), [&](const std::vector<int>& tau) {
    Int count_exact = product_over(topo.L, tau);
    long count = int_to_long(count_exact);
    spec.tauOffset[tau] = next;
    spec.tauCount[tau] = count;
    for (long m = 1; m <= count; ++m) {
      spec.subfiles.push_back(SubfileId{tau, m});
      for (int lab : tau)
        spec.cacheContents[static_cast<size_t>(lab - 1)].push_back(next);
      ++next;
    }
  });
  return spec;
}

bool verify_placement(const PlacementSpec& spec, const MemoryAllocation& alloc) {
  if (alloc.gamma.size() != spec.topo.L.size()) return false;
  // Every subfile must appear in exactly t caches.
  std::vector<long> copies(static_cast<size_t>(spec.S), 0);
  for (const auto& contents : spec.cacheContents) {
    for (long ord : contents) {
      if (ord < 0 || ord >= spec.S) return false;
      ++copies[static_cast<size_t>(ord)];
    }
  }
  for (long c : copies) {
    if (c != spec.t) return false;
  }
  // Per-cache fraction must equal the memory share exactly.
  for (int lab = 1; lab <= spec.topo.lambda(); ++lab) {
    Rat fraction = make_rat(
        Int(static_cast<long>(spec.cacheContents[static_cast<size_t>(lab - 1)].size())),
        Int(spec.S));
    if (fraction != alloc.gamma[static_cast<size_t>(lab - 1)]) return false;
  }
  return true;
}

Int clique_count(const Topology& topo, const std::vector<int>& Q) {
  validate_label_set(topo, Q);
  return product_over(topo.L, Q);
}

Library Library::build(const std::vector<std::vector<uint8_t>>& payloads, long S) {
  if (S < 1) throw std::invalid_argument("subpacketization must be positive");
  Library lib;
  lib.N = static_cast<long>(payloads.size());
  lib.S = S;
  size_t longest = 0;
  for (const auto& p : payloads) longest = std::max(longest, p.size());
  lib.subfileLength = (longest + static_cast<size_t>(S) - 1) / static_cast<size_t>(S);
  if (lib.subfileLength == 0) lib.subfileLength = 1;
  const size_t paddedLen = lib.subfileLength * static_cast<size_t>(S);
  for (const auto& p : payloads) {
    std::vector<uint8_t> padded(paddedLen, 0);
    std::copy(p.begin(), p.end(), padded.begin());
    lib.padded.push_back(std::move(padded));
    lib.originalLength.push_back(p.size());
  }
  return lib;
}

Library Library::random(long N, size_t fileLength, long S, uint64_t seed) {
  std::vector<std::vector<uint8_t>> payloads;
  payloads.reserve(static_cast<size_t>(N));
  for (long n = 0; n < N; ++n) {
    CounterStream stream(seed, static_cast<uint64_t>(n), 0);
    std::vector<uint8_t> bytes(fileLength);
    size_t i = 0;
    while (i < fileLength) {
      uint64_t word = stream.next_u64();
      for (int b = 0; b < 8 && i < fileLength; ++b, ++i)
        bytes[i] = static_cast<uint8_t>(word >> (8 * b));
    }
    payloads.push_back(std::move(bytes));
  }
  return build(payloads, S);
}

const uint8_t* Library::slice(long file, long subfileOrdinal) const {
  if (file < 1 || file > N) throw std::invalid_argument("file index out of range");
  if (subfileOrdinal < 0 || subfileOrdinal >= S)
    throw std::invalid_argument("subfile ordinal out of range");
  return padded[static_cast<size_t>(file - 1)].data() +
         static_cast<size_t>(subfileOrdinal) * subfileLength;
}

}  // namespace shc
