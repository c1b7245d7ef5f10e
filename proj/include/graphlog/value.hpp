#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace graphlog {

// Structured values: trees of maps/lists/strings/numbers/booleans/null.
// nlohmann::json with the default (ordered, std::map-backed) object type,
// so object iteration is always key-sorted.
using Value = nlohmann::json;

// Splits "a.b.c" into {"a","b","c"}. An empty string yields an empty path.
std::vector<std::string> split_key_path(const std::string& dotted);

// Walks a key path through nested maps. Returns nullptr when any step is
// missing or the intermediate value is not a map.
const Value* value_at_path(const Value& root, const std::vector<std::string>& path);

}  // namespace graphlog
