#include "tap/io.hpp"

#include <fstream>

#include "tap/error.hpp"

namespace tap {

namespace {

void reject_unknown(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) throw Error(ErrorCode::ParseError, "unknown field '" + it.key() + "' in " + where);
  }
}

Rational parse_cost(const nlohmann::json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(static_cast<long>(value.get<long long>()));
  throw Error(ErrorCode::ParseError, "cost of " + where + " must be a rational string");
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return doc;
}

}  // namespace

TapInstance parse_instance(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "instance must be a JSON object");
  reject_unknown(doc, {"name", "vertices", "root", "tree_edges", "links"}, "instance");
  for (const char* key : {"vertices", "root", "tree_edges", "links"}) {
    if (!doc.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing '") + key + "'");
  }

  TapInstance inst;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(ErrorCode::ParseError, "'name' must be a string");
    inst.name = doc["name"].get<std::string>();
  }
  if (!doc["vertices"].is_array()) throw Error(ErrorCode::ParseError, "'vertices' must be an array");
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw Error(ErrorCode::ParseError, "vertex names must be strings");
    inst.vertices.push_back(v.get<std::string>());
  }
  if (!doc["root"].is_string()) throw Error(ErrorCode::ParseError, "'root' must be a string");
  inst.root = doc["root"].get<std::string>();
  if (!doc["tree_edges"].is_array()) {
    throw Error(ErrorCode::ParseError, "'tree_edges' must be an array");
  }
  for (const auto& e : doc["tree_edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw Error(ErrorCode::ParseError, "tree edges must be [u, v] string pairs");
    }
    inst.tree_edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
  }
  if (!doc["links"].is_array()) throw Error(ErrorCode::ParseError, "'links' must be an array");
  for (const auto& l : doc["links"]) {
    if (!l.is_object()) throw Error(ErrorCode::ParseError, "links must be objects");
    reject_unknown(l, {"id", "u", "v", "cost"}, "link");
    for (const char* key : {"id", "u", "v", "cost"}) {
      if (!l.contains(key)) {
        throw Error(ErrorCode::ParseError, std::string("link missing '") + key + "'");
      }
    }
    if (!l["id"].is_string() || !l["u"].is_string() || !l["v"].is_string()) {
      throw Error(ErrorCode::ParseError, "link id and endpoints must be strings");
    }
    std::string id = l["id"].get<std::string>();
    inst.links.push_back(
        {id, l["u"].get<std::string>(), l["v"].get<std::string>(), parse_cost(l["cost"], id)});
  }
  return inst;
}

TapInstance load_instance(const std::string& path) { return parse_instance(read_json_file(path)); }

OrderedJson instance_to_json(const TapInstance& inst) {
  OrderedJson doc;
  doc["name"] = inst.name;
  doc["vertices"] = inst.vertices;
  doc["root"] = inst.root;
  doc["tree_edges"] = OrderedJson::array();
  for (const auto& [a, b] : inst.tree_edges) doc["tree_edges"].push_back({a, b});
  doc["links"] = OrderedJson::array();
  for (const auto& link : inst.links) {
    OrderedJson entry;
    entry["id"] = link.id;
    entry["u"] = link.u;
    entry["v"] = link.v;
    entry["cost"] = to_string(link.cost);
    doc["links"].push_back(std::move(entry));
  }
  return doc;
}

std::map<std::string, Rational> parse_point(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "point must be a JSON object");
  reject_unknown(doc, {"values"}, "point");
  if (!doc.contains("values") || !doc["values"].is_object()) {
    throw Error(ErrorCode::ParseError, "point requires a 'values' object");
  }
  std::map<std::string, Rational> point;
  for (auto it = doc["values"].begin(); it != doc["values"].end(); ++it) {
    point[it.key()] = parse_cost(it.value(), it.key());
  }
  return point;
}

std::map<std::string, Rational> load_point(const std::string& path) {
  return parse_point(read_json_file(path));
}

}  // namespace tap
