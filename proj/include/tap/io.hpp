#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "tap/instance.hpp"
#include "tap/rational.hpp"

namespace tap {

using OrderedJson = nlohmann::ordered_json;

// Instance file schema: {name?, vertices, root, tree_edges, links}; costs are
// rational strings ("3", "5/2", "1.25") or plain integers. Unknown fields are
// rejected.
TapInstance parse_instance(const nlohmann::json& doc);
TapInstance load_instance(const std::string& path);
OrderedJson instance_to_json(const TapInstance& inst);

// Point file schema: {"values": {link id -> rational string}}; links absent
// from the map default to zero.
std::map<std::string, Rational> parse_point(const nlohmann::json& doc);
std::map<std::string, Rational> load_point(const std::string& path);

}  // namespace tap
