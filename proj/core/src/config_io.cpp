#include <json.hpp>

#include "hecke/config.hpp"
#include "hecke/error.hpp"

namespace hecke {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) throw ConfigError(std::string("missing field \"") + name + "\"");
  return obj.at(name);
}

int int_field(const json& obj, const char* name) {
  const json& value = field(obj, name);
  if (!value.is_number_integer()) throw ConfigError(std::string("field \"") + name + "\" must be an integer");
  return value.get<int>();
}

std::vector<int> int_list(const json& obj, const char* name) {
  const json& value = field(obj, name);
  if (!value.is_array()) throw ConfigError(std::string("field \"") + name + "\" must be an array");
  std::vector<int> out;
  for (const json& item : value) {
    if (!item.is_number_integer()) throw ConfigError(std::string("field \"") + name + "\" must hold integers");
    out.push_back(item.get<int>());
  }
  return out;
}

QuantumOrder order_field(const json& obj) {
  const json& value = field(obj, "e");
  if (value.is_string() && value.get<std::string>() == "infinity") return std::nullopt;
  if (!value.is_number_integer()) throw ConfigError("field \"e\" must be an integer or \"infinity\"");
  return value.get<int>();
}

}  // namespace

ParamConfig config_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ConfigError(std::string("malformed JSON: ") + err.what());
  }
  if (!doc.is_object() || doc.size() != 1) {
    throw ConfigError("config must be an object with exactly one of \"case1\", \"case2\", \"raw\"");
  }
  if (doc.contains("case1")) {
    const json& c = doc["case1"];
    return ParamConfig::case1(int_field(c, "p"), int_field(c, "d"), order_field(c), int_list(c, "v"));
  }
  if (doc.contains("case2")) {
    const json& c = doc["case2"];
    return ParamConfig::case2(int_field(c, "k"), int_field(c, "d0"), int_field(c, "l"), int_field(c, "d"),
                              int_list(c, "v"));
  }
  if (doc.contains("raw")) {
    const json& c = doc["raw"];
    RawConfig raw;
    raw.e = order_field(c);
    raw.p = int_field(c, "p");
    const json& q = field(c, "Q");
    if (!q.is_array()) throw ConfigError("field \"Q\" must be an array");
    for (const json& item : q) raw.charges.push_back({int_field(item, "orbit"), int_field(item, "v")});
    raw.eps.orbit_perm = int_list(c, "eps_orbit_perm");
    raw.eps.orbit_shift = int_list(c, "eps_orbit_shift");
    return ParamConfig::validate(raw);
  }
  throw ConfigError("config must contain one of \"case1\", \"case2\", \"raw\"");
}

}  // namespace hecke
