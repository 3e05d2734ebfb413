#include "rspin/graph_document.hpp"

#include <map>
#include <set>

#include "json.hpp"

namespace rspin {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& what) { throw Error("graph document: " + what); }

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) invalid(where + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1'000'000 || v > 1'000'000) invalid(where + " is out of range");
  return static_cast<int>(v);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(where + " is missing \"" + key + "\"");
  return *it;
}

void reject_unknown(const Json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) invalid(where + " has unknown key \"" + key + "\"");
  }
}

}  // namespace

DualGraph GraphDocument::graph() const {
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) index.emplace(vertices[v].id, v);
  auto lookup = [&](const std::string& id) {
    const auto it = index.find(id);
    if (it == index.end()) invalid("unknown vertex id \"" + id + "\"");
    return it->second;
  };
  std::vector<Edge> es;
  for (const auto& [a, b] : edges) es.push_back({lookup(a), lookup(b)});
  std::vector<Leg> ls;
  for (const auto& [v, marking] : legs) ls.push_back({lookup(v), marking});
  return DualGraph(vertices, std::move(es), std::move(ls));
}

std::string GraphDocument::to_json() const {
  Json doc;
  doc["r"] = r;
  doc["m"] = m;
  if (field_prime) doc["field_prime"] = *field_prime;
  doc["vertices"] = Json::array();
  for (const Vertex& v : vertices) doc["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
  doc["edges"] = Json::array();
  for (const auto& [a, b] : edges) doc["edges"].push_back(Json::array({a, b}));
  doc["legs"] = Json::array();
  for (const auto& [v, marking] : legs)
    doc["legs"].push_back({{"vertex", v}, {"marking", marking}});
  return doc.dump(2) + "\n";
}

GraphDocument parse_graph_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    invalid(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) invalid("top level must be an object");
  reject_unknown(doc, {"r", "m", "field_prime", "vertices", "edges", "legs"}, "document");

  GraphDocument out;
  out.r = as_int(require(doc, "r", "document"), "r");
  if (out.r < 1) invalid("r must be positive");

  const Json& m = require(doc, "m", "document");
  if (!m.is_array()) invalid("m must be an array of integers");
  for (std::size_t k = 0; k < m.size(); ++k)
    out.m.push_back(as_int(m[k], "m[" + std::to_string(k) + "]"));

  if (const auto it = doc.find("field_prime"); it != doc.end()) {
    const int p = as_int(*it, "field_prime");
    if (p < 2) invalid("field_prime must be a prime");
    try {
      FieldConfig(static_cast<Coeff>(p), out.r);
    } catch (const Error& e) {
      invalid(std::string("field_prime rejected: ") + e.what());
    }
    out.field_prime = static_cast<Coeff>(p);
  }

  const Json& vertices = require(doc, "vertices", "document");
  if (!vertices.is_array() || vertices.empty()) invalid("vertices must be a nonempty array");
  std::set<std::string> ids;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const std::string where = "vertices[" + std::to_string(k) + "]";
    const Json& v = vertices[k];
    if (!v.is_object()) invalid(where + " must be an object");
    reject_unknown(v, {"id", "genus"}, where);
    const Json& id = require(v, "id", where);
    if (!id.is_string()) invalid(where + ".id must be a string");
    const int genus = as_int(require(v, "genus", where), where + ".genus");
    if (genus < 0) invalid(where + ".genus must be nonnegative");
    if (!ids.insert(id.get<std::string>()).second)
      invalid("duplicate vertex id \"" + id.get<std::string>() + "\"");
    out.vertices.push_back({id.get<std::string>(), genus});
  }

  const Json& edges = require(doc, "edges", "document");
  if (!edges.is_array()) invalid("edges must be an array");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const Json& e = edges[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      invalid(where + " must be a pair of vertex ids");
    }
    out.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }

  const Json& legs = require(doc, "legs", "document");
  if (!legs.is_array()) invalid("legs must be an array");
  for (std::size_t k = 0; k < legs.size(); ++k) {
    const std::string where = "legs[" + std::to_string(k) + "]";
    const Json& leg = legs[k];
    if (!leg.is_object()) invalid(where + " must be an object");
    reject_unknown(leg, {"vertex", "marking"}, where);
    const Json& v = require(leg, "vertex", where);
    if (!v.is_string()) invalid(where + ".vertex must be a string");
    out.legs.emplace_back(v.get<std::string>(),
                          as_int(require(leg, "marking", where), where + ".marking"));
  }

  if (out.m.size() != out.legs.size()) {
    invalid("m has " + std::to_string(out.m.size()) + " entries but there are " +
            std::to_string(out.legs.size()) + " legs");
  }
  DualGraph graph = [&] {
    try {
      return out.graph();
    } catch (const Error& e) {
      invalid(e.what());
    }
  }();
  if (!graph.is_connected()) invalid("graph is not connected");
  return out;
}

}  // namespace rspin
