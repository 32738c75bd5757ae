// Command-line front end. Builds a JSON config from flags and/or a config
// file, invokes the shared-library C API, prints the result JSON, and maps
// outcomes to exit codes: 0 success, 1 validation/input error, 2 property or
// decode verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shcache/shcache.h"

namespace {

using Json = nlohmann::json;

Json parse_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Json parsed = Json::parse(buffer.str(), nullptr, false);
  if (parsed.is_discarded()) throw std::runtime_error("malformed JSON in " + path);
  return parsed;
}

// Interpret a numeric token: plain integer, exact fraction "p/q" (kept as a
// string for the core to parse exactly), or decimal fallback.
Json number_or_string(const std::string& token) {
  if (token.find('/') != std::string::npos) return token;
  try {
    size_t used = 0;
    long asLong = std::stol(token, &used);
    if (used == token.size()) return asLong;
  } catch (const std::exception&) {
  }
  try {
    size_t used = 0;
    double asDouble = std::stod(token, &used);
    if (used == token.size()) return asDouble;
  } catch (const std::exception&) {
  }
  return token;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      tokens.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  tokens.push_back(current);
  return tokens;
}

Json int_list(const std::string& csv) {
  Json list = Json::array();
  for (const std::string& token : split_csv(csv)) {
    size_t used = 0;
    long value = std::stol(token, &used);
    if (used != token.size()) throw std::runtime_error("expected an integer list, got '" + csv + "'");
    list.push_back(value);
  }
  return list;
}

Json number_list(const std::string& csv) {
  Json list = Json::array();
  for (const std::string& token : split_csv(csv)) list.push_back(number_or_string(token));
  return list;
}

// Any false among these flags, at any nesting depth, marks a verification
// failure (exit code 2) even though the command itself ran to completion.
bool outcome_ok(const Json& value) {
  static const std::vector<std::string> kOutcomeKeys = {"decode_ok", "verified", "all_pass", "equal"};
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      for (const std::string& outcomeKey : kOutcomeKeys)
        if (key == outcomeKey && child.is_boolean() && !child.get<bool>()) return false;
      if (!outcome_ok(child)) return false;
    }
  } else if (value.is_array()) {
    for (const auto& child : value)
      if (!outcome_ok(child)) return false;
  }
  return true;
}

struct Options {
  std::string configPath;
  std::string outPath;
  std::string demandPath;
  std::string caches;
  std::string assumed;
  std::string realized;
  std::string budget;
  std::string means;
  std::string budgetRange;
  std::uint64_t seed = 0;
  long files = 0;
  long fileBytes = 0;
  long samples = 0;
  long mismatchBudget = 0;
  bool maxOverP = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planning and simulation toolkit for coded caching over shared caches "
               "with heterogeneous user-to-cache topologies"};
  app.require_subcommand(1);
  Options opt;

  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--config", opt.configPath, "JSON config file; explicit flags override its fields");
    sub->add_option("--out", opt.outPath, "output path (report JSON; CSV for simulate)");
  };
  auto addTopology = [&](CLI::App* sub) {
    sub->add_option("-L,--caches", opt.caches, "cache occupancies as a comma list, e.g. 3,2,1");
  };
  auto addBudget = [&](CLI::App* sub) {
    sub->add_option("-t,--budget", opt.budget, "cache budget t (integer or exact fraction p/q)");
  };
  auto addSeed = [&](CLI::App* sub) { sub->add_option("--seed", opt.seed, "deterministic RNG seed"); };

  CLI::App* cmdAllocate = app.add_subcommand("allocate", "exact per-cache memory allocation for a budget");
  addCommon(cmdAllocate);
  addTopology(cmdAllocate);
  addBudget(cmdAllocate);
  cmdAllocate->add_option("-N,--files", opt.files, "library size N");

  CLI::App* cmdPlace = app.add_subcommand("place", "subfile placement map for an integer budget");
  addCommon(cmdPlace);
  addTopology(cmdPlace);
  addBudget(cmdPlace);

  CLI::App* cmdDeliver = app.add_subcommand("deliver", "build and byte-verify the multicast delivery schedule");
  addCommon(cmdDeliver);
  addTopology(cmdDeliver);
  addBudget(cmdDeliver);
  cmdDeliver->add_option("-N,--files", opt.files, "library size N (default: number of users)");
  cmdDeliver->add_option("--demand", opt.demandPath, "demand JSON file {\"d\":[...], \"users_per_cache\":[...]}");
  cmdDeliver->add_option("--file-bytes", opt.fileBytes, "library file length in bytes");
  addSeed(cmdDeliver);

  CLI::App* cmdBound = app.add_subcommand("bound", "delivery-time lower bounds and optimality certificate");
  addCommon(cmdBound);
  addTopology(cmdBound);
  addBudget(cmdBound);
  cmdBound->add_flag("--max-over-p", opt.maxOverP, "maximize the general bound over all slicing orders p");

  CLI::App* cmdVerify = app.add_subcommand("verify", "run the cross-check oracle suites");
  addCommon(cmdVerify);
  addTopology(cmdVerify);

  CLI::App* cmdMismatch = app.add_subcommand("mismatch", "delivery under a realized topology that differs from placement");
  addCommon(cmdMismatch);
  cmdMismatch->add_option("--assumed", opt.assumed, "occupancies assumed at placement time, e.g. 2,1,1");
  cmdMismatch->add_option("--realized", opt.realized, "occupancies realized at delivery time (zeros allowed)");
  cmdMismatch->add_option("-t,--budget", opt.mismatchBudget, "integer cache budget t");
  cmdMismatch->add_option("--file-bytes", opt.fileBytes, "library file length for the byte-level run");
  addSeed(cmdMismatch);

  CLI::App* cmdSimulate = app.add_subcommand("simulate", "stochastic evaluation under Poisson user arrivals");
  addCommon(cmdSimulate);
  cmdSimulate->add_option("--means", opt.means, "Poisson mean per cache, e.g. 20,20,8,6,4,2");
  cmdSimulate->add_option("-t,--budget", opt.budgetRange, "budgets: single t, list 1,2,3, or range 1:5");
  cmdSimulate->add_option("--samples", opt.samples, "number of topology samples per budget");
  addSeed(cmdSimulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string command;
  CLI::App* sub = nullptr;
  for (CLI::App* candidate :
       {cmdAllocate, cmdPlace, cmdDeliver, cmdBound, cmdVerify, cmdMismatch, cmdSimulate}) {
    if (app.got_subcommand(candidate)) {
      sub = candidate;
      command = candidate->get_name();
      break;
    }
  }
  if (sub == nullptr) {
    std::cerr << "error: no subcommand given\n";
    return 1;
  }

  Json config = Json::object();
  try {
    if (sub->count("--config") > 0) {
      config = parse_json_file(opt.configPath);
      if (!config.is_object()) throw std::runtime_error("config file must hold a JSON object");
    }
    if (sub->get_option_no_throw("--caches") != nullptr && sub->count("--caches") > 0)
      config["L"] = int_list(opt.caches);
    if (sub->get_option_no_throw("--seed") != nullptr && sub->count("--seed") > 0)
      config["seed"] = opt.seed;
    if (sub->get_option_no_throw("--files") != nullptr && sub->count("--files") > 0)
      config["N"] = opt.files;
    if (sub->get_option_no_throw("--file-bytes") != nullptr && sub->count("--file-bytes") > 0)
      config["file_bytes"] = opt.fileBytes;

    if (command == "allocate" || command == "place" || command == "deliver" || command == "bound") {
      if (sub->count("--budget") > 0) config["t"] = number_or_string(opt.budget);
    }
    if (command == "deliver" && sub->count("--demand") > 0)
      config["demand"] = parse_json_file(opt.demandPath);
    if (command == "bound" && opt.maxOverP) config["max_over_p"] = true;
    if (command == "mismatch") {
      if (sub->count("--assumed") > 0) config["L_assumed"] = int_list(opt.assumed);
      if (sub->count("--realized") > 0) config["L_realized"] = int_list(opt.realized);
      if (sub->count("--budget") > 0) config["t"] = opt.mismatchBudget;
    }
    if (command == "simulate") {
      if (sub->count("--means") > 0) config["means"] = number_list(opt.means);
      if (sub->count("--budget") > 0) config["t_range"] = opt.budgetRange;
      if (sub->count("--samples") > 0) config["samples"] = opt.samples;
      if (sub->count("--out") > 0) config["out"] = opt.outPath;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  shc_session* session = shc_session_create();
  if (session == nullptr) {
    std::cerr << "error: cannot create session\n";
    return 1;
  }
  char* rawResult = nullptr;
  shc_status status = shc_run(session, command.c_str(), config.dump().c_str(), &rawResult);
  if (status != SHC_OK) {
    std::cerr << "error: " << shc_last_error(session) << "\n";
    shc_session_destroy(session);
    return status == SHC_ERR_DECODE_FAILURE ? 2 : 1;
  }
  std::string rendered(rawResult);
  shc_string_free(rawResult);
  shc_session_destroy(session);

  std::cout << rendered << "\n";
  if (command != "simulate" && sub->count("--out") > 0) {
    std::ofstream out(opt.outPath, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << opt.outPath << "\n";
      return 1;
    }
    out << rendered << "\n";
  }

  Json result = Json::parse(rendered, nullptr, false);
  if (!result.is_discarded() && !outcome_ok(result)) return 2;
  return 0;
}
