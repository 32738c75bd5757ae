// JSON conventions shared by the command layer: exact rationals travel as
// "p/q" strings (plain numbers are accepted on input when they are exact),
// topologies as {"L":[...]}, budgets as "t". Parse errors surface as
// std::invalid_argument with the offending key in the message.
#pragma once

#include <string>
#include <vector>

#include "exact.hpp"
#include "model.hpp"

#include "json.hpp"

namespace shc {

using Json = nlohmann::json;

// Parses text into JSON; malformed input raises std::invalid_argument.
Json parse_json_text(const std::string& text);

// Reads a whole file; raises io_error with the path on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// The object holding topology keys: config["topology"] when present,
// otherwise the config itself.
const Json& topology_object(const Json& config);

// {"L":[...]} with positive integer entries.
Topology parse_topology(const Json& obj);

// Exact rational from a JSON value: integers pass through, finite doubles
// convert exactly (they are dyadic), strings go through "p/q" parsing.
Rat json_to_rat(const Json& value, const std::string& key);

// Budget "t" from the topology object or the config root.
Rat parse_budget(const Json& config);

// Integer with range/type validation.
long json_to_long(const Json& value, const std::string& key);

// Exact rational rendered as a JSON string "p/q" (or "p" when integral).
Json rat_to_json(const Rat& r);
std::vector<Json> rats_to_json(const std::vector<Rat>& values);

// Occupancy vectors.
Multiset json_to_multiset(const Json& value, const std::string& key, bool allowZero);

}  // namespace shc
