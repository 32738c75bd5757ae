#include "commands.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "combinatorics.hpp"
#include "delivery.hpp"
#include "errors.hpp"
#include "exhaustive.hpp"
#include "mismatch.hpp"
#include "model.hpp"
#include "placement.hpp"
#include "stochastic.hpp"
#include "symfunc.hpp"

namespace shc {

namespace {

Json multiset_to_json(const Multiset& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_to_long(x));
  return out;
}

long optional_long(const Json& config, const std::string& key, long fallback) {
  if (config.is_object() && config.contains(key)) return json_to_long(config.at(key), key);
  return fallback;
}

uint64_t optional_seed(const Json& config, uint64_t fallback) {
  if (config.is_object() && config.contains("seed")) {
    const Json& v = config.at("seed");
    if (!v.is_number_integer()) throw std::invalid_argument("'seed' must be an integer");
    return v.get<uint64_t>();
  }
  return fallback;
}

bool optional_bool(const Json& config, const std::string& key, bool fallback) {
  if (config.is_object() && config.contains(key)) {
    if (!config.at(key).is_boolean())
      throw std::invalid_argument("'" + key + "' must be a boolean");
    return config.at(key).get<bool>();
  }
  return fallback;
}

// Demand from config: explicit {"demand":{"d":[...]}} (with optional
// "users_per_cache" cross-check) or the synthesized distinct-file demand.
Demand parse_demand(const Json& config, const Topology& topo, long N) {
  if (config.is_object() && config.contains("demand")) {
    const Json& dj = config.at("demand");
    if (!dj.is_object() || !dj.contains("d"))
      throw std::invalid_argument("'demand' must be an object with key 'd'");
    std::vector<long> d;
    for (const Json& v : dj.at("d")) d.push_back(json_to_long(v, "d"));
    if (dj.contains("users_per_cache")) {
      const Multiset claimed = json_to_multiset(dj.at("users_per_cache"), "users_per_cache", false);
      if (claimed != topo.L)
        throw std::invalid_argument("'users_per_cache' does not match the topology");
    }
    Demand demand = Demand::contiguous(topo, std::move(d));
    for (long f : demand.d)
      if (f > N) throw std::invalid_argument("demanded file outside the library");
    return demand;
  }
  return Demand::worst_case(topo, N);
}

Json delivery_report_to_json(const DeliveryReport& rep) {
  Json out;
  out["num_tx"] = int_to_long(rep.numTransmissions);
  out["S"] = int_to_long(rep.S);
  out["T"] = rat_to_json(rep.T);
  out["decode_ok"] = rep.decode_ok();
  out["per_user"] = rep.perUserDecodeOk;
  return out;
}

// Budget list for simulate: an integer, an array, or "a:b" / "a,b,c" text.
std::vector<long> parse_budget_list(const Json& value) {
  std::vector<long> out;
  if (value.is_number_integer()) {
    out.push_back(json_to_long(value, "t"));
    return out;
  }
  if (value.is_array()) {
    for (const Json& v : value) out.push_back(json_to_long(v, "t"));
    return out;
  }
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    auto parse_int = [&](const std::string& s) {
      try {
        size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed budget list '" + text + "'");
      }
    };
    const size_t colon = text.find(':');
    if (colon != std::string::npos) {
      const long lo = parse_int(text.substr(0, colon));
      const long hi = parse_int(text.substr(colon + 1));
      if (lo > hi) throw std::invalid_argument("empty budget range '" + text + "'");
      for (long t = lo; t <= hi; ++t) out.push_back(t);
      return out;
    }
    size_t start = 0;
    while (start <= text.size()) {
      const size_t comma = text.find(',', start);
      const size_t end = comma == std::string::npos ? text.size() : comma;
      out.push_back(parse_int(text.substr(start, end - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }
  throw std::invalid_argument("budget list must be an integer, an array, or a string");
}

}  // namespace

Json run_allocate(const Json& config) {
  const Topology topo = parse_topology(topology_object(config));
  const Rat t = parse_budget(config);
  const long N = optional_long(config, "N", 1);
  validate_budget(topo, CacheBudget{t, Int(N)});

  const MemoryAllocation alloc = allocate_fractional(topo, t);
  const MemoryShare share = split_budget(t, topo.lambda());
  const Rat T = delivery_time(topo, t);

  Json out;
  out["L"] = multiset_to_json(topo.L);
  out["t"] = rat_to_json(t);
  out["N"] = N;
  out["gamma"] = rats_to_json(alloc.gamma);
  out["gamma_sum"] = rat_to_json(alloc.t);
  out["alpha"] = rat_to_json(share.alpha);
  out["floor_budget"] = share.floorBudget;
  out["ceil_budget"] = share.ceilBudget;
  out["T"] = rat_to_json(T);
  out["dof"] = T > 0 ? rat_to_json(dof(topo, alloc, T)) : Json();
  return out;
}

Json run_place(const Json& config) {
  const Topology topo = parse_topology(topology_object(config));
  const Rat t = parse_budget(config);
  if (!rat_is_integer(t))
    throw std::invalid_argument("placement needs an integer budget t");
  const long ti = int_to_long(rat_floor(t));
  validate_budget(topo, CacheBudget{t, Int(1)});

  const PlacementSpec spec = build_placement(topo, ti);
  const MemoryAllocation alloc = allocate(topo, ti);

  Json out;
  out["L"] = multiset_to_json(topo.L);
  out["t"] = ti;
  out["S"] = spec.S;
  Json subfiles = Json::array();
  for (const SubfileId& sf : spec.subfiles) subfiles.push_back(sf.to_string());
  out["subfiles"] = std::move(subfiles);
  Json caches = Json::array();
  for (const auto& contents : spec.cacheContents) {
    Json one = Json::array();
    for (long ord : contents)
      one.push_back(spec.subfiles[static_cast<size_t>(ord)].to_string());
    caches.push_back(std::move(one));
  }
  out["caches"] = std::move(caches);
  out["gamma"] = rats_to_json(alloc.gamma);
  out["verified"] = verify_placement(spec, alloc);
  return out;
}

Json run_deliver(const Json& config) {
  const Topology topo = parse_topology(topology_object(config));
  const Rat t = parse_budget(config);
  const long K = int_to_long(topo.K);
  const long N = optional_long(config, "N", K);
  validate_budget(topo, CacheBudget{t, Int(N)});
  const long fileBytes = optional_long(config, "file_bytes", 4096);
  if (fileBytes < 1) throw std::invalid_argument("'file_bytes' must be positive");
  const uint64_t seed = optional_seed(config, 0);
  const Demand demand = parse_demand(config, topo, N);

  Json out;
  out["L"] = multiset_to_json(topo.L);
  out["t"] = rat_to_json(t);
  if (rat_is_integer(t)) {
    const long ti = int_to_long(rat_floor(t));
    const PlacementSpec spec = build_placement(topo, ti);
    const Library lib = Library::random(N, static_cast<size_t>(fileBytes), spec.S, seed);
    const DeliveryReport rep = deliver_report(spec, demand, lib);
    out.update(delivery_report_to_json(rep));
    out["T_formula"] = rat_to_json(delivery_time(topo, t));
    return out;
  }

  const Library flat = Library::random(N, static_cast<size_t>(fileBytes), 1, seed);
  const TwoRoundReport rep = schedule_fractional(topo, t, demand.d, flat.padded);
  out["alpha"] = rat_to_json(rep.share.alpha);
  out["rounds"] = Json::array({delivery_report_to_json(rep.round1),
                               delivery_report_to_json(rep.round2)});
  out["num_tx"] =
      int_to_long(rep.round1.numTransmissions + rep.round2.numTransmissions);
  out["T"] = rat_to_json(rep.exactT);
  out["T_realized"] = rat_to_json(rep.realizedT);
  out["granule"] = rat_to_json(rep.granule);
  out["decode_ok"] = rep.decode_ok();
  out["per_user"] = rep.perUserDecodeOk;
  return out;
}

Json run_bound(const Json& config) {
  const Topology topo = parse_topology(topology_object(config));
  const Rat t = parse_budget(config);
  const bool maxOverP = optional_bool(config, "max_over_p", false);

  const BoundResult general = lower_bound_general(topo, t, maxOverP);
  Json out;
  out["L"] = multiset_to_json(topo.L);
  out["t"] = rat_to_json(t);
  out["general"] = rat_to_json(general.value);
  out["p"] = general.p;
  if (rat_is_integer(t)) {
    const BoundResult regular = lower_bound_regular(topo, int_to_long(rat_floor(t)));
    out["regular"] = rat_to_json(regular.value);
  } else {
    out["regular"] = Json();
  }
  out["certificate"] = general.optimalityCertificate;
  Json seq = Json::array();
  for (const Rat& v : general.sequence) seq.push_back(rat_to_json(v));
  out["sequence"] = std::move(seq);
  return out;
}

Json run_mismatch(const Json& config) {
  if (!config.is_object() || !config.contains("L_assumed") || !config.contains("L_realized") ||
      !config.contains("t"))
    throw std::invalid_argument("mismatch needs 'L_assumed', 'L_realized', and integer 't'");
  const Multiset assumed = json_to_multiset(config.at("L_assumed"), "L_assumed", false);
  const Multiset realized = json_to_multiset(config.at("L_realized"), "L_realized", true);
  const long t = json_to_long(config.at("t"), "t");
  const MismatchScenario scn = MismatchScenario::create(assumed, realized, t);

  const Rat scheme = delivery_time_mismatch(scn);
  const Rat converse = converse_mismatch(scn);

  Json out;
  out["L_assumed"] = multiset_to_json(scn.assumed.L);
  out["L_realized"] = multiset_to_json(scn.realized);
  out["t"] = t;
  out["T_scheme"] = rat_to_json(scheme);
  out["T_converse"] = rat_to_json(converse);
  out["equal"] = scheme == converse;

  if (t < scn.lambda()) {
    const LeaderAssignment la = leaders(scn);
    out["leaders"] = la.leaders;
    Json table = Json::array();
    for (const auto& [Q, leader] : la.perSetLeader) {
      Json row;
      row["Q"] = Q;
      row["leader"] = leader;
      table.push_back(std::move(row));
    }
    out["per_set_leaders"] = std::move(table);
  } else {
    out["leaders"] = Json();
    out["per_set_leaders"] = Json();
  }

  // Byte-level execution on modest scenarios: worst-case distinct demand,
  // deterministic payloads.
  const long users = int_to_long(scn.realized_users());
  const Int S_exact = subpacketize(scn.assumed, t);
  if (users <= 64 && S_exact <= 20000) {
    const long fileBytes = optional_long(config, "file_bytes", 512);
    if (fileBytes < 1) throw std::invalid_argument("'file_bytes' must be positive");
    const uint64_t seed = optional_seed(config, 0);
    const Demand demand = realized_worst_case(scn, users == 0 ? 1 : users);
    const Library lib = Library::random(users == 0 ? 1 : users,
                                        static_cast<size_t>(fileBytes),
                                        int_to_long(S_exact), seed);
    const MismatchDelivery md = schedule_mismatch(scn, demand, lib);
    out["num_tx"] = int_to_long(md.report.numTransmissions);
    out["decode_ok"] = md.report.decode_ok();
    out["T_executed"] = rat_to_json(md.report.T);
  }
  return out;
}

Json run_simulate(const Json& config) {
  if (!config.is_object() || !config.contains("means"))
    throw std::invalid_argument("simulate needs 'means'");
  std::vector<Rat> means;
  if (!config.at("means").is_array())
    throw std::invalid_argument("'means' must be an array");
  for (const Json& v : config.at("means")) means.push_back(json_to_rat(v, "means"));

  std::vector<long> budgets;
  if (config.contains("t_range"))
    budgets = parse_budget_list(config.at("t_range"));
  else if (config.contains("t"))
    budgets = parse_budget_list(config.at("t"));
  else
    throw std::invalid_argument("simulate needs 't' or 't_range'");

  const long samples = optional_long(config, "samples", 1000);
  const uint64_t seed = optional_seed(config, 0);
  const PoissonSpec spec = PoissonSpec::create(std::move(means), samples, seed, budgets);
  const SimulationSummary summary = run_simulation(spec);

  Json rows = Json::array();
  for (const SummaryRow& row : summary.rows) {
    Json r;
    r["t"] = row.t;
    r["mean_T_mismatch"] = rat_to_json(row.meanMismatch);
    r["stderr"] = rat_sqrt_to_decimal(row.stderrSquared, 12);
    r["T_perfect_assumed"] = rat_to_json(row.perfectAssumed);
    r["mean_T_perfect"] = row.perfectValid ? rat_to_json(row.meanPerfect) : Json();
    r["excluded_samples"] = row.excludedSamples;
    rows.push_back(std::move(r));
  }

  Json out;
  out["means"] = rats_to_json(spec.means);
  out["samples"] = spec.numSamples;
  out["seed"] = spec.seed;
  out["rows"] = std::move(rows);
  if (config.contains("out")) {
    if (!config.at("out").is_string())
      throw std::invalid_argument("'out' must be a file path string");
    const std::string path = config.at("out").get<std::string>();
    emit_csv(summary, path);
    out["csv"] = path;
  } else {
    out["csv"] = Json();
  }
  return out;
}

namespace {

struct Check {
  std::string name;
  bool pass;
};

// The standard verification suite over one topology: placement accounting,
// bound ordering, coefficient and tau* cross-checks, and the weighted
// permutation bound, each scaled to the instance's size.
void verify_topology(const Topology& topo, std::vector<Check>& checks) {
  const std::string tag = [&] {
    std::string s = "L=(";
    for (size_t i = 0; i < topo.L.size(); ++i) {
      if (i) s += ",";
      s += topo.L[i].get_str();
    }
    return s + ")";
  }();
  const long lambda = topo.lambda();
  const long K = int_to_long(topo.K);

  for (long t = 0; t <= lambda; ++t) {
    const PlacementSpec spec = build_placement(topo, t);
    const MemoryAllocation alloc = allocate(topo, t);
    bool pass = verify_placement(spec, alloc);

    // Sandwich: general bound <= regular bound = achievable time.
    const Rat T = delivery_time(topo, Rat(Int(t)));
    const BoundResult gen = lower_bound_general(topo, Rat(Int(t)));
    const BoundResult reg = lower_bound_regular(topo, t);
    pass = pass && gen.value <= reg.value && reg.value == T;
    checks.push_back({tag + " t=" + std::to_string(t) + " placement+bounds", pass});

    if (lambda <= 5)
      checks.push_back(
          {tag + " t=" + std::to_string(t) + " placement point", verify_lp_point(topo, t)});

    // Weighted permutation bound never beats the scheme.
    if (lambda <= 6 && K <= 8) {
      const Demand demand = Demand::worst_case(topo, K);
      const long p = t;  // matched parameter
      const Rat weighted = weighted_sigma_bound(spec, demand, p);
      checks.push_back(
          {tag + " t=" + std::to_string(t) + " weighted bound", weighted <= T});
    }
  }

  if (lambda <= 6) {
    bool pass = true;
    const Multiset sorted = topo.sorted_desc();
    for (long p = 0; p <= lambda && pass; ++p) {
      for (long j = 0; j <= lambda && pass; ++j) {
        const std::vector<int> exhaustiveSet = brute_force_tau_star(topo, p, j);
        const Rat a = tilde_coefficient_over(sorted, p, exhaustiveSet);
        const Rat b = tilde_coefficient_over(sorted, p, tau_star(topo, p, j));
        pass = a == b;
      }
    }
    checks.push_back({tag + " tau* exhaustive agreement", pass});
  }

  if (lambda <= 3 && K <= 5) {
    bool pass = true;
    for (long p = 0; p <= lambda && pass; ++p) {
      for (long j = 0; j <= lambda && pass; ++j) {
        for_each_k_subset(static_cast<int>(lambda), static_cast<int>(j),
                          [&](const std::vector<int>& tau) {
                            if (!pass) return;
                            pass = brute_force_coefficient(topo, K, p, tau) ==
                                   coefficient(topo, p, tau);
                          });
      }
    }
    checks.push_back({tag + " coefficient exhaustive agreement", pass});
  }
}

}  // namespace

Json run_verify(const Json& config) {
  std::vector<Topology> topologies;
  const Json& topoObj = topology_object(config);
  if (topoObj.is_object() && topoObj.contains("L")) {
    topologies.push_back(parse_topology(topoObj));
  } else {
    topologies.push_back(Topology::create({Int(3), Int(2), Int(1)}));
    topologies.push_back(Topology::create({Int(1), Int(1), Int(1)}));
    topologies.push_back(Topology::create({Int(2), Int(1)}));
    topologies.push_back(Topology::create({Int(2), Int(2)}));
    topologies.push_back(Topology::create({Int(1), Int(1), Int(1), Int(1)}));
  }

  std::vector<Check> checks;
  for (const Topology& topo : topologies) verify_topology(topo, checks);

  bool all = true;
  Json rows = Json::array();
  for (const Check& c : checks) {
    all = all && c.pass;
    Json row;
    row["name"] = c.name;
    row["pass"] = c.pass;
    rows.push_back(std::move(row));
  }
  Json out;
  out["checks"] = std::move(rows);
  out["all_pass"] = all;
  return out;
}

Json run_command(const std::string& name, const Json& config) {
  if (name == "allocate") return run_allocate(config);
  if (name == "place") return run_place(config);
  if (name == "deliver") return run_deliver(config);
  if (name == "bound") return run_bound(config);
  if (name == "verify") return run_verify(config);
  if (name == "mismatch") return run_mismatch(config);
  if (name == "simulate") return run_simulate(config);
  throw std::invalid_argument("unknown command '" + name + "'");
}

bool command_outcome_ok(const Json& output) {
  for (const char* key : {"decode_ok", "verified", "all_pass", "equal"}) {
    if (output.is_object() && output.contains(key) && output.at(key).is_boolean() &&
        !output.at(key).get<bool>())
      return false;
  }
  return true;
}

}  // namespace shc
