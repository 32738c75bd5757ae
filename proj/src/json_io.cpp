#include "json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace shc {

Json parse_json_text(const std::string& text) {
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw std::invalid_argument("malformed JSON input");
  return parsed;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error(path, "cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw io_error(path, "read failed");
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error(path, "cannot open for writing");
  out << content;
  if (!out.flush()) throw io_error(path, "write failed");
}

const Json& topology_object(const Json& config) {
  if (config.is_object() && config.contains("topology")) return config.at("topology");
  return config;
}

Topology parse_topology(const Json& obj) {
  if (!obj.is_object() || !obj.contains("L"))
    throw std::invalid_argument("missing topology key 'L'");
  return Topology::create(json_to_multiset(obj.at("L"), "L", false));
}

Rat json_to_rat(const Json& value, const std::string& key) {
  if (value.is_number_integer())
    return Rat(Int(static_cast<long>(value.get<int64_t>())));
  if (value.is_number_float()) {
    const double d = value.get<double>();
    if (!std::isfinite(d)) throw std::invalid_argument("'" + key + "' must be finite");
    Rat r;
    mpq_set_d(r.get_mpq_t(), d);  // exact: doubles are dyadic rationals
    return r;
  }
  if (value.is_string()) {
    try {
      return rat_from_string(value.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("'" + key + "' is not a valid rational string");
    }
  }
  throw std::invalid_argument("'" + key + "' must be a number or a \"p/q\" string");
}

Rat parse_budget(const Json& config) {
  const Json& topo = topology_object(config);
  if (topo.is_object() && topo.contains("t")) return json_to_rat(topo.at("t"), "t");
  if (config.is_object() && config.contains("t")) return json_to_rat(config.at("t"), "t");
  throw std::invalid_argument("missing budget key 't'");
}

long json_to_long(const Json& value, const std::string& key) {
  if (!value.is_number_integer())
    throw std::invalid_argument("'" + key + "' must be an integer");
  return static_cast<long>(value.get<int64_t>());
}

Json rat_to_json(const Rat& r) { return Json(rat_to_string(r)); }

std::vector<Json> rats_to_json(const std::vector<Rat>& values) {
  std::vector<Json> out;
  out.reserve(values.size());
  for (const Rat& v : values) out.push_back(rat_to_json(v));
  return out;
}

Multiset json_to_multiset(const Json& value, const std::string& key, bool allowZero) {
  if (!value.is_array() || value.empty())
    throw std::invalid_argument("'" + key + "' must be a non-empty array of integers");
  Multiset out;
  out.reserve(value.size());
  for (const Json& entry : value) {
    const long v = json_to_long(entry, key);
    if (v < 0 || (!allowZero && v == 0))
      throw std::invalid_argument("'" + key + "' entries must be " +
                                  (allowZero ? "non-negative" : "positive"));
    out.emplace_back(v);
  }
  return out;
}

}  // namespace shc
