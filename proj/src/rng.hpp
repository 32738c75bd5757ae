#pragma once
// Counter-based deterministic random streams. Every draw is a pure hash of
// (seed, stream coordinates, draw counter), so sequences are reproducible
// across runs, platforms with IEEE doubles, and any parallel schedule.

#include <cmath>
#include <cstdint>

namespace shc {

// SplitMix64 finalizer; a high-quality 64-bit mixing function.
inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// A stream is identified by (seed, stream, lane); draws are indexed by an
// internal counter. Identical coordinates always reproduce the sequence.
class CounterStream {
 public:
  CounterStream(uint64_t seed, uint64_t stream, uint64_t lane)
      : key_(mix64(mix64(mix64(seed) ^ stream) ^ lane)) {}

  uint64_t next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Uniform in the open interval (0, 1); never exactly 0 or 1.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

namespace detail {

// Multiplicative inversion (product of uniforms against exp(-mean)).
inline long poisson_small(CounterStream& s, double mean) {
  if (mean <= 0.0) return 0;
  const double limit = std::exp(-mean);
  long k = 0;
  double prod = s.next_uniform();
  while (prod > limit) {
    ++k;
    prod *= s.next_uniform();
  }
  return k;
}

}  // namespace detail

// Poisson draw with the given mean. Large means are split additively into
// chunks small enough for the inversion method (the sum of independent
// Poisson variables is Poisson with the summed mean), which keeps the
// sampler exact in distribution and free of rejection loops.
inline long poisson_draw(CounterStream& s, double mean) {
  long total = 0;
  double remaining = mean;
  while (remaining > 50.0) {
    total += detail::poisson_small(s, 50.0);
    remaining -= 50.0;
  }
  total += detail::poisson_small(s, remaining);
  return total;
}

}  // namespace shc
