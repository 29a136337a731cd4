#include "rigidline/framework_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rigidline/stress.hpp"

namespace rigidline {

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(Errc::IoError, "short write to " + path);
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "malformed JSON");
  return j;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw Error(Errc::SchemaError, "unknown key '" + it.key() + "'");
  }
}

std::vector<Edge> edges_from_json(const json& j, int n) {
  if (!j.is_array()) throw Error(Errc::SchemaError, "\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw Error(Errc::SchemaError, "edge must be a pair of integers");
    int a = pair[0].get<int>(), b = pair[1].get<int>();
    if (a < 1 || a > n || b < 1 || b > n)
      throw Error(Errc::SchemaError, "vertex index out of range in edge");
    edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace

Framework framework_from_json_text(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw Error(Errc::SchemaError, "top level must be an object");
  reject_unknown_keys(j, {"dimension", "coordinates", "edges"});
  if (!j.contains("dimension") || !j.contains("coordinates") || !j.contains("edges"))
    throw Error(Errc::SchemaError, "dimension, coordinates and edges are required");
  if (!j["dimension"].is_number_integer())
    throw Error(Errc::SchemaError, "\"dimension\" must be an integer");
  int d = j["dimension"].get<int>();
  if (d < 1) throw Error(Errc::SchemaError, "dimension must be at least 1");

  const json& coords = j["coordinates"];
  if (!coords.is_array() || coords.empty())
    throw Error(Errc::SchemaError, "\"coordinates\" must be a nonempty array");
  Configuration config;
  config.dim = d;
  for (const json& row : coords) {
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw Error(Errc::SchemaError, "coordinate arity mismatch");
    Point p;
    for (const json& s : row) {
      if (!s.is_string())
        throw Error(Errc::SchemaError, "coordinates must be strings (exact values)");
      p.push_back(parse_rational(s.get<std::string>()));
    }
    config.points.push_back(std::move(p));
  }
  int n = config.count();
  Graph graph(n, edges_from_json(j["edges"], n));
  return make_framework(std::move(graph), std::move(config));
}

Framework load_framework(const std::string& path) {
  return framework_from_json_text(read_file(path));
}

std::string framework_to_json_text(const Framework& f) {
  json j;
  j["dimension"] = f.config.dim;
  json coords = json::array();
  for (const Point& p : f.config.points) {
    json row = json::array();
    for (const Rational& x : p) row.push_back(to_string(x));
    coords.push_back(std::move(row));
  }
  j["coordinates"] = std::move(coords);
  json edges = json::array();
  for (const Edge& e : f.graph.edges()) edges.push_back(json::array({e.u, e.v}));
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

void save_framework(const Framework& f, const std::string& path) {
  write_file(path, framework_to_json_text(f));
}

Stress stress_from_json_text(const std::string& text, const Graph& graph) {
  json j = parse_json(text);
  if (!j.is_object()) throw Error(Errc::SchemaError, "top level must be an object");
  reject_unknown_keys(j, {"edges", "values"});
  if (!j.contains("edges") || !j.contains("values"))
    throw Error(Errc::SchemaError, "edges and values are required");
  std::vector<Edge> edges = edges_from_json(j["edges"], graph.vertex_count());
  const json& values = j["values"];
  if (!values.is_array() || values.size() != edges.size())
    throw Error(Errc::SchemaError, "values must match edges one-to-one");

  Vec w(graph.edge_count(), Rational(0));
  std::vector<bool> seen(graph.edge_count(), false);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto idx = graph.edge_index(edges[k].u, edges[k].v);
    if (!idx)
      throw Error(Errc::SchemaError, "stress on non-edge " + std::to_string(edges[k].u) +
                                         "," + std::to_string(edges[k].v));
    if (seen[*idx]) throw Error(Errc::SchemaError, "duplicate stress edge");
    seen[*idx] = true;
    if (!values[k].is_string())
      throw Error(Errc::SchemaError, "stress values must be strings (exact values)");
    w[*idx] = parse_rational(values[k].get<std::string>());
  }
  return make_stress(graph, std::move(w));
}

Stress load_stress(const std::string& path, const Graph& graph) {
  return stress_from_json_text(read_file(path), graph);
}

std::string stress_to_json_text(const Stress& stress) {
  json j;
  json edges = json::array();
  json values = json::array();
  for (int k = 0; k < stress.graph.edge_count(); ++k) {
    const Edge& e = stress.graph.edge(k);
    edges.push_back(json::array({e.u, e.v}));
    values.push_back(to_string(stress.values[k]));
  }
  j["edges"] = std::move(edges);
  j["values"] = std::move(values);
  return j.dump(2) + "\n";
}

void save_stress(const Stress& stress, const std::string& path) {
  write_file(path, stress_to_json_text(stress));
}

}  // namespace rigidline
