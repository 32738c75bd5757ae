// Acceptance gate: ten end-to-end checks covering exact allocation, the
// multicast schedule with byte-exact decoding, both lower bounds and their
// tightness at integer budgets, coefficient cross-checks against brute
// force, mismatch delay against its converse, the two-round fractional
// simulation, and the stochastic evaluator. Each check is timed and must
// finish inside its stated budget; the process exit code is the number of
// failed checks.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "combinatorics.hpp"
#include "delivery.hpp"
#include "exact.hpp"
#include "exhaustive.hpp"
#include "json_io.hpp"
#include "mismatch.hpp"
#include "model.hpp"
#include "placement.hpp"
#include "stochastic.hpp"
#include "symfunc.hpp"

using shc::Demand;
using shc::Int;
using shc::Library;
using shc::Multiset;
using shc::Rat;
using shc::Topology;

namespace {

// Deterministic generator for the randomized checks.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

// All non-increasing occupancy vectors with length in [1, maxLen] and
// entries in [1, maxEntry].
void non_increasing_multisets(int maxLen, long maxEntry,
                              const std::function<void(const Multiset&)>& fn) {
  Multiset current;
  std::function<void(long)> extend = [&](long cap) {
    if (!current.empty()) fn(current);
    if (static_cast<int>(current.size()) == maxLen) return;
    for (long v = cap; v >= 1; --v) {
      current.push_back(Int(v));
      extend(v);
      current.pop_back();
    }
  };
  extend(maxEntry);
}

long failures_in_line = 0;

bool expect(bool cond, const char* what) {
  if (!cond) {
    ++failures_in_line;
    std::fprintf(stderr, "    check failed: %s\n", what);
  }
  return cond;
}

// ---------------------------------------------------------------------------

bool worked_example_exactness() {
  bool ok = true;
  Topology topo = Topology::create({3, 2, 1});

  shc::MemoryAllocation alloc = shc::allocate(topo, 2);
  ok &= expect(alloc.gamma == std::vector<Rat>{Rat(9, 11), Rat(8, 11), Rat(5, 11)},
               "memory shares");
  ok &= expect(alloc.t == Rat(2), "share total");

  shc::PlacementSpec spec = shc::build_placement(topo, 2);
  ok &= expect(spec.S == 11, "subfile count");

  Library lib = Library::random(6, 220, 11, 42);
  Demand demand = Demand::worst_case(topo, 6);
  std::vector<shc::Transmission> txs = shc::schedule(spec, demand, lib);
  ok &= expect(txs.size() == 6, "transmission count");
  shc::DeliveryReport rep = shc::deliver_report(spec, demand, lib);
  ok &= expect(rep.T == Rat(6, 11), "delivery time");
  ok &= expect(rep.decode_ok(), "byte-exact decode");

  shc::BoundResult general = shc::lower_bound_general(topo, Rat(2));
  shc::BoundResult regular = shc::lower_bound_regular(topo, 2);
  ok &= expect(general.value == Rat(6, 11), "general bound");
  ok &= expect(regular.value == Rat(6, 11), "regular bound");
  ok &= expect(general.optimalityCertificate, "convexity certificate");
  return ok;
}

bool integer_budget_tightness() {
  bool ok = true;
  long count = 0;
  non_increasing_multisets(6, 6, [&](const Multiset& L) {
    if (!ok) return;
    ++count;
    Topology topo = Topology::create(L);
    for (long t = 0; t <= topo.lambda(); ++t) {
      Rat achieved = shc::delivery_time(topo, Rat(t));
      if (shc::lower_bound_regular(topo, t).value != achieved) {
        ok &= expect(false, "regular bound not tight at an integer budget");
        return;
      }
      if (shc::lower_bound_general(topo, Rat(t)).value > achieved) {
        ok &= expect(false, "general bound exceeded the achieved time");
        return;
      }
    }
  });
  ok &= expect(count == 923, "enumeration size");
  return ok;
}

bool coefficient_sequence_certificate() {
  Topology topo = Topology::create({3, 2, 1});
  std::vector<Rat> seq = shc::tilde_sequence(topo, 2);
  bool ok = expect(seq == std::vector<Rat>{Rat(18, 11), Rat(12, 11), Rat(6, 11), Rat(0)},
                   "truncated coefficient sequence");
  ok &= expect(shc::discretely_convex(seq), "discrete convexity");
  return ok;
}

bool averaged_coefficient_agreement() {
  bool ok = true;
  non_increasing_multisets(3, 5, [&](const Multiset& L) {
    Topology topo = Topology::create(L);
    long K = shc::int_to_long(topo.K);
    if (K > 5) return;
    for (long p = 0; p <= topo.lambda() && ok; ++p) {
      for (int size = 0; size <= topo.lambda() && ok; ++size) {
        shc::for_each_k_subset(topo.lambda(), size, [&](const std::vector<int>& tau) {
          if (shc::brute_force_coefficient(topo, K, p, tau) != shc::coefficient(topo, p, tau))
            ok &= expect(false, "demand-averaged coefficient mismatch");
        });
      }
    }
  });
  return ok;
}

bool dominance_and_monotonicity() {
  bool ok = true;
  Rng rng(505);
  for (int trial = 0; trial < 200 && ok; ++trial) {
    long n = rng.range(1, 6);
    Multiset L;
    for (long i = 0; i < n; ++i) L.push_back(Int(rng.range(1, 8)));
    Topology topo = Topology::create(L);
    for (long p = 0; p <= n && ok; ++p) {
      for (int size = 0; size <= n; ++size) {
        shc::for_each_k_subset(static_cast<int>(n), size, [&](const std::vector<int>& tau) {
          if (shc::tilde_coefficient(topo, p, tau) > shc::coefficient(topo, p, tau))
            ok &= expect(false, "truncated coefficient exceeded the full one");
        });
      }
      if (p <= n - 1 && !shc::strictly_decreasing(shc::tilde_sequence(topo, p)))
        ok &= expect(false, "sequence not strictly decreasing");
    }
  }
  return ok;
}

bool mismatch_delay_equals_converse() {
  bool ok = true;
  non_increasing_multisets(5, 4, [&](const Multiset& assumed) {
    if (!ok) return;
    const int n = static_cast<int>(assumed.size());
    std::vector<Int> realized(static_cast<size_t>(n), Int(0));
    std::vector<long> digits(static_cast<size_t>(n), 0);
    for (;;) {
      for (int i = 0; i < n; ++i) realized[static_cast<size_t>(i)] = Int(digits[static_cast<size_t>(i)]);
      for (long t = 0; t <= n; ++t) {
        shc::MismatchScenario scn = shc::MismatchScenario::create(assumed, realized, t);
        if (shc::delivery_time_mismatch(scn) != shc::converse_mismatch(scn)) {
          ok &= expect(false, "mismatch delay differed from its converse");
          return;
        }
      }
      int pos = 0;
      while (pos < n && digits[static_cast<size_t>(pos)] == 4) digits[static_cast<size_t>(pos++)] = 0;
      if (pos == n) break;
      ++digits[static_cast<size_t>(pos)];
    }
  });
  return ok;
}

bool dedicated_cache_closed_form() {
  bool ok = true;
  for (long K = 1; K <= 8; ++K) {
    Multiset ones(static_cast<size_t>(K), Int(1));
    Topology topo = Topology::create(ones);
    for (long t = 0; t <= K; ++t) {
      Rat expected = shc::make_rat(Int(K - t), Int(t + 1));
      ok &= expect(shc::delivery_time(topo, Rat(t)) == expected, "dedicated delivery time");
      ok &= expect(shc::lower_bound_regular(topo, t).value == expected, "dedicated regular bound");
      ok &= expect(shc::lower_bound_general(topo, Rat(t)).value == expected,
                   "dedicated general bound");
    }
  }
  return ok;
}

bool fractional_two_round_simulation() {
  bool ok = true;
  Topology topo = Topology::create({3, 2, 1});
  const Rat t(3, 2);
  ok &= expect(shc::delivery_time(topo, t) == Rat(157, 132), "interpolated delivery time");

  Rng rng(808);
  std::vector<long> d{1, 2, 3, 4, 5, 6};
  auto make_payloads = [&](long len) {
    std::vector<std::vector<uint8_t>> files;
    for (int f = 0; f < 6; ++f) {
      std::vector<uint8_t> bytes(static_cast<size_t>(len));
      for (auto& b : bytes) b = static_cast<uint8_t>(rng.next());
      files.push_back(std::move(bytes));
    }
    return files;
  };

  // Aligned length: both rounds split without padding, the realized rate is
  // the exact interpolation.
  shc::TwoRoundReport aligned = shc::schedule_fractional(topo, t, d, make_payloads(13200));
  ok &= expect(aligned.realizedT == Rat(157, 132), "aligned realized rate");
  ok &= expect(aligned.exactT == Rat(157, 132), "aligned exact rate");
  ok &= expect(aligned.decode_ok(), "aligned decode");

  // Unaligned length: padding may cost, but no more than one subfile granule.
  shc::TwoRoundReport odd = shc::schedule_fractional(topo, t, d, make_payloads(100001));
  Rat gap = odd.realizedT - odd.exactT;
  if (gap < 0) gap = -gap;
  ok &= expect(gap <= odd.granule, "padding gap within one granule");
  ok &= expect(odd.decode_ok(), "unaligned decode");
  return ok;
}

bool allocation_and_time_identities() {
  bool ok = true;
  Rng rng(909);
  for (int trial = 0; trial < 500 && ok; ++trial) {
    long n = rng.range(1, 10);
    Multiset L;
    for (long i = 0; i < n; ++i) L.push_back(Int(rng.range(1, 6)));
    Topology topo = Topology::create(L);

    for (long t = 0; t <= n; ++t) {
      shc::MemoryAllocation alloc = shc::allocate(topo, t);
      Rat sum(0);
      bool inRange = true;
      for (const Rat& g : alloc.gamma) {
        sum += g;
        if (g < 0 || g > 1) inRange = false;
      }
      ok &= expect(inRange, "share in [0,1]");
      ok &= expect(sum == Rat(t), "share total equals the budget");

      Rat T = shc::delivery_time(topo, Rat(t));
      ok &= expect(T == shc::make_rat(shc::elem_sym(L, t + 1), shc::elem_sym(L, t)),
                   "delivery time ratio form");
      Rat perUser(0);
      for (size_t lab = 0; lab < L.size(); ++lab)
        perUser += Rat(L[lab]) * (Rat(1) - alloc.gamma[lab]);
      ok &= expect(T == perUser / Rat(t + 1), "per-user load identity");
      if (T > 0) ok &= expect(shc::dof(topo, alloc, T) == Rat(t + 1), "degrees of freedom");
    }

    long t = rng.range(0, n);
    Rat T = shc::delivery_time(topo, Rat(t));
    Rat general = shc::lower_bound_general(topo, Rat(t)).value;
    Rat regular = shc::lower_bound_regular(topo, t).value;
    ok &= expect(general <= T && regular == T, "bound sandwich");

    long k = rng.range(1, n);
    int pos = static_cast<int>(rng.range(1, n));
    ok &= expect(shc::check_recursion(L, k, pos), "pivot recursion");
    std::vector<int> phi;
    for (int lab = 1; lab <= n; ++lab)
      if (rng.range(0, 1) == 1) phi.push_back(lab);
    ok &= expect(shc::check_weighted_identity(L, k, phi), "weighted identity");

    std::vector<Rat> ratios = shc::ratio_sequence(L);
    ok &= expect(shc::strictly_decreasing(ratios), "ratio sequence strictly decreasing");
    ok &= expect(shc::discretely_convex(ratios), "ratio sequence convex");
    ok &= expect(shc::check_log_concavity(L), "log-concavity");
    ok &= expect(shc::check_maclaurin_chain(L), "mean chain");
  }
  return ok;
}

bool stochastic_evaluation_consistency() {
  bool ok = true;
  shc::PoissonSpec spec = shc::PoissonSpec::create(
      {Rat(20), Rat(20), Rat(8), Rat(6), Rat(4), Rat(2)}, 10000, 20240817,
      {1, 2, 3, 4, 5});
  shc::SimulationSummary summary = shc::run_simulation(spec);
  ok &= expect(summary.rows.size() == 5, "row count");
  for (const shc::SummaryRow& row : summary.rows) {
    double mean = shc::rat_to_double(row.meanMismatch);
    double assumed = shc::rat_to_double(row.perfectAssumed);
    ok &= expect(mean >= assumed - 3.0 * row.stderr_value(),
                 "imperfect knowledge not cheaper than the assumed closed form");
  }

  const std::string path = "/tmp/shc_acceptance_sim.csv";
  shc::emit_csv(summary, path);
  std::string first = shc::read_text_file(path);
  shc::emit_csv(summary, path);
  ok &= expect(shc::read_text_file(path) == first, "byte-identical CSV on rerun");
  std::remove(path.c_str());
  std::remove("/tmp/shc_acceptance_sim.json");
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budgetSeconds;
    bool (*fn)();
  };
  const std::vector<Criterion> criteria = {
      {"worked-example exactness", 1.0, worked_example_exactness},
      {"integer-budget bound tightness", 10.0, integer_budget_tightness},
      {"coefficient-sequence certificate", 1.0, coefficient_sequence_certificate},
      {"averaged-coefficient agreement", 60.0, averaged_coefficient_agreement},
      {"coefficient dominance and monotonicity", 30.0, dominance_and_monotonicity},
      {"mismatch delay equals its converse", 120.0, mismatch_delay_equals_converse},
      {"dedicated-cache closed form", 1.0, dedicated_cache_closed_form},
      {"fractional two-round simulation", 1.0, fractional_two_round_simulation},
      {"allocation and time identities", 10.0, allocation_and_time_identities},
      {"stochastic evaluation consistency", 60.0, stochastic_evaluation_consistency},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    failures_in_line = 0;
    bool ok = false;
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
      ok = false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budgetSeconds) {
      ok = false;
      note = "exceeded the time budget";
    }
    if (ok) {
      std::printf("PASS: %s (%.2f s)\n", c.name, secs);
    } else {
      ++failed;
      std::printf("FAIL: %s (%.2f s)%s%s\n", c.name, secs, note.empty() ? "" : " — ",
                  note.c_str());
    }
    std::fflush(stdout);
  }
  if (failed == 0)
    std::printf("all %zu acceptance checks passed\n", criteria.size());
  else
    std::printf("%d acceptance check%s failed\n", failed, failed == 1 ? "" : "s");
  return failed;
}
