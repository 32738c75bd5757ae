#include "stochastic.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "errors.hpp"
#include "mismatch.hpp"
#include "rng.hpp"

#include "json.hpp"

namespace shc {

PoissonSpec PoissonSpec::create(std::vector<Rat> means, long numSamples, uint64_t seed,
                                std::vector<long> budgets) {
  if (means.empty()) throw std::invalid_argument("mean vector is empty");
  for (const Rat& m : means)
    if (m <= 0) throw std::invalid_argument("Poisson means must be positive");
  if (numSamples < 1) throw std::invalid_argument("sample count must be at least 1");
  if (budgets.empty()) throw std::invalid_argument("budget list is empty");
  const int lambda = static_cast<int>(means.size());
  for (long t : budgets)
    if (t < 0 || t > lambda)
      throw std::invalid_argument("budget t must lie in {0..cache count}");
  PoissonSpec spec;
  spec.means = std::move(means);
  spec.numSamples = numSamples;
  spec.seed = seed;
  spec.budgets = std::move(budgets);
  return spec;
}

std::vector<Int> sample_occupancy(const PoissonSpec& spec, long index) {
  if (index < 0 || index >= spec.numSamples)
    throw std::invalid_argument("sample index out of range");
  std::vector<Int> out;
  out.reserve(spec.means.size());
  for (int lab = 1; lab <= spec.lambda(); ++lab) {
    CounterStream stream(spec.seed, static_cast<uint64_t>(index), static_cast<uint64_t>(lab));
    out.emplace_back(
        poisson_draw(stream, rat_to_double(spec.means[static_cast<size_t>(lab - 1)])));
  }
  return out;
}

double SummaryRow::stderr_value() const { return std::sqrt(rat_to_double(stderrSquared)); }

SummaryRow expected_delay(const PoissonSpec& spec, long t) {
  if (t < 0 || t > spec.lambda())
    throw std::invalid_argument("budget t must lie in {0..cache count}");

  SummaryRow row;
  row.t = t;
  row.perfectAssumed = perfect_delay_formula(spec.means, t);

  Rat sumT(0), sumT2(0), sumPerfect(0);
  long included = 0;
  std::vector<Rat> realized(spec.means.size());
  for (long i = 0; i < spec.numSamples; ++i) {
    const std::vector<Int> occ = sample_occupancy(spec, i);
    bool allPositive = true;
    for (size_t k = 0; k < occ.size(); ++k) {
      realized[k] = Rat(occ[k]);
      if (occ[k] == 0) allPositive = false;
    }
    const Rat sample = mismatch_delay_formula(realized, spec.means, t);
    sumT += sample;
    sumT2 += sample * sample;
    if (allPositive) {
      sumPerfect += perfect_delay_formula(realized, t);
      ++included;
    }
  }

  const Rat n(Int(spec.numSamples));
  row.meanMismatch = sumT / n;
  if (spec.numSamples > 1) {
    const Rat variance = (sumT2 - sumT * sumT / n) / Rat(Int(spec.numSamples - 1));
    row.stderrSquared = variance / n;
  }
  row.excludedSamples = spec.numSamples - included;
  row.perfectValid = included > 0;
  if (included > 0) row.meanPerfect = sumPerfect / Rat(Int(included));
  return row;
}

SimulationSummary run_simulation(const PoissonSpec& spec) {
  SimulationSummary summary;
  summary.spec = spec;
  for (long t : spec.budgets) summary.rows.push_back(expected_delay(spec, t));
  return summary;
}

namespace {

std::string sibling_json_path(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
    return path.substr(0, path.size() - 4) + ".json";
  return path + ".json";
}

}  // namespace

void emit_csv(const SimulationSummary& summary, const std::string& path) {
  constexpr int kDigits = 12;
  std::ofstream csv(path, std::ios::binary);
  if (!csv) throw io_error(path, "cannot open for writing");
  csv << "t,mean_T_mismatch,stderr,T_perfect_assumed,mean_T_perfect,excluded_samples\n";
  for (const SummaryRow& row : summary.rows) {
    csv << row.t << ',' << rat_to_decimal(row.meanMismatch, kDigits) << ','
        << rat_sqrt_to_decimal(row.stderrSquared, kDigits) << ','
        << rat_to_decimal(row.perfectAssumed, kDigits) << ','
        << (row.perfectValid ? rat_to_decimal(row.meanPerfect, kDigits) : std::string("nan"))
        << ',' << row.excludedSamples << '\n';
  }
  if (!csv.flush()) throw io_error(path, "write failed");

  nlohmann::json doc;
  doc["means"] = nlohmann::json::array();
  for (const Rat& m : summary.spec.means) doc["means"].push_back(rat_to_string(m));
  doc["samples"] = summary.spec.numSamples;
  doc["seed"] = summary.spec.seed;
  doc["rows"] = nlohmann::json::array();
  for (const SummaryRow& row : summary.rows) {
    nlohmann::json r;
    r["t"] = row.t;
    r["mean_T_mismatch"] = rat_to_string(row.meanMismatch);
    r["stderr_squared"] = rat_to_string(row.stderrSquared);
    r["T_perfect_assumed"] = rat_to_string(row.perfectAssumed);
    if (row.perfectValid)
      r["mean_T_perfect"] = rat_to_string(row.meanPerfect);
    else
      r["mean_T_perfect"] = nullptr;
    r["excluded_samples"] = row.excludedSamples;
    doc["rows"].push_back(std::move(r));
  }
  const std::string jsonPath = sibling_json_path(path);
  std::ofstream js(jsonPath, std::ios::binary);
  if (!js) throw io_error(jsonPath, "cannot open for writing");
  js << doc.dump(2) << '\n';
  if (!js.flush()) throw io_error(jsonPath, "write failed");
}

}  // namespace shc
