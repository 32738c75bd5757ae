// Monte Carlo evaluation of expected delivery time when per-cache user
// counts are Poisson with known means: placement is fixed from the means,
// each sample realizes occupancies from counter-based deterministic streams,
// and per-sample delays are exact rationals aggregated exactly. CSV/JSON
// emission happens only at the reporting boundary.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exact.hpp"

namespace shc {

struct PoissonSpec {
  std::vector<Rat> means;      // per-cache Poisson means, all positive
  long numSamples = 0;         // at least 1
  uint64_t seed = 0;
  std::vector<long> budgets;   // t values to evaluate

  static PoissonSpec create(std::vector<Rat> means, long numSamples, uint64_t seed,
                            std::vector<long> budgets);
  int lambda() const { return static_cast<int>(means.size()); }
};

// Independent Poisson draws for sample `index`, one per cache, each from the
// stream keyed by (seed, index, cache label). Reproducible regardless of
// evaluation order.
std::vector<Int> sample_occupancy(const PoissonSpec& spec, long index);

struct SummaryRow {
  long t = 0;
  Rat meanMismatch;       // exact sample mean of the means-based schedule time
  Rat stderrSquared;      // exact variance of that mean (variance / n)
  Rat perfectAssumed;     // closed-form time if the means were exact
  Rat meanPerfect;        // mean perfect-knowledge time over included samples
  long excludedSamples = 0;  // samples with an empty cache, excluded above
  bool perfectValid = false; // false when every sample was excluded
  double stderr_value() const;  // sqrt of stderrSquared, reporting boundary
};

struct SimulationSummary {
  PoissonSpec spec;
  std::vector<SummaryRow> rows;
};

// One summary row: average the padded-schedule time over all samples, and
// the perfect-knowledge time over the samples where every cache has a user
// (the exclusion count is reported alongside).
SummaryRow expected_delay(const PoissonSpec& spec, long t);

// One row per requested budget, in request order.
SimulationSummary run_simulation(const PoissonSpec& spec);

// Writes `t,mean_T_mismatch,stderr,T_perfect_assumed,mean_T_perfect,
// excluded_samples` with decimal values at 12 significant digits, plus a
// sibling .json carrying the exact "p/q" forms. Deterministic byte-for-byte
// given the same inputs.
void emit_csv(const SimulationSummary& summary, const std::string& path);

}  // namespace shc
