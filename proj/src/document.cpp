#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "winding/errors.hpp"
#include "winding/io.hpp"

namespace winding {

using nlohmann::json;

namespace {

json point_json(const Pt& p) { return json::array({p.x.str(), p.y.str()}); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + " must be an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + " lacks \"" + key + "\"");
  return *it;
}

Pt point_of(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw SchemaError(where + " must be a pair of rational strings");
  }
  return {Rat::parse(j[0].get<std::string>()), Rat::parse(j[1].get<std::string>())};
}

int vertex_id(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + " must be an integer vertex id");
  const auto v = j.get<long long>();
  if (v < 1 || v > 1'000'000) throw SchemaError(where + " is out of range");
  return static_cast<int>(v);
}

std::optional<Edge> parse_edge_key(const std::string& key) {
  const auto dash = key.find('-');
  if (dash == std::string::npos) return std::nullopt;
  int u = 0, v = 0;
  const char* b = key.data();
  const char* e = b + key.size();
  auto r1 = std::from_chars(b, b + dash, u);
  auto r2 = std::from_chars(b + dash + 1, e, v);
  if (r1.ec != std::errc() || r1.ptr != b + dash || r2.ec != std::errc() || r2.ptr != e) {
    return std::nullopt;
  }
  if (u < 1 || u >= v) return std::nullopt;
  return Edge{u, v};
}

}  // namespace

std::string serialize(const Drawing& d) {
  json edges = json::array();
  for (const Edge& e : d.graph().edges()) edges.push_back({e.u, e.v});
  json vertices = json::object();
  for (int v = 1; v <= d.graph().vertex_count(); ++v) vertices[std::to_string(v)] = point_json(d.position(v));
  json lines = json::object();
  for (const auto& [e, l] : d.edge_lines()) {
    json pts = json::array();
    for (const Pt& p : l.points()) pts.push_back(point_json(p));
    lines[e.str()] = std::move(pts);
  }
  const json doc{{"format_version", kFormatVersion},
                 {"graph", {{"vertex_count", d.graph().vertex_count()}, {"edges", std::move(edges)}}},
                 {"vertices", std::move(vertices)},
                 {"edge_lines", std::move(lines)}};
  // One line per top-level field, and per entry of the object-valued ones.
  std::string text = "{\n";
  bool first = true;
  for (const auto& [key, value] : doc.items()) {
    text += first ? " " : ",\n ";
    first = false;
    text += json(key).dump() + ": ";
    if (!value.is_object()) {
      text += value.dump();
      continue;
    }
    text += "{";
    bool first_entry = true;
    for (const auto& [k, v] : value.items()) {
      text += first_entry ? "\n  " : ",\n  ";
      first_entry = false;
      text += json(k).dump() + ": " + v.dump();
    }
    text += "\n }";
  }
  return text + "\n}\n";
}

Drawing parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  const json& version = field(doc, "format_version", "document");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
    throw SchemaError("unsupported format_version (expected \"1\")");
  }

  const json& g = field(doc, "graph", "document");
  const int n = vertex_id(field(g, "vertex_count", "graph"), "graph.vertex_count");
  const json& edge_list = field(g, "edges", "graph");
  if (!edge_list.is_array()) throw SchemaError("graph.edges must be an array");
  std::vector<Edge> edges;
  for (const json& e : edge_list) {
    if (!e.is_array() || e.size() != 2) throw SchemaError("each edge must be a [u, v] pair");
    edges.push_back({vertex_id(e[0], "edge endpoint"), vertex_id(e[1], "edge endpoint")});
  }
  std::optional<Graph> graph;
  try {
    graph.emplace(n, std::move(edges));
  } catch (const InvalidGraph& e) {
    throw SchemaError(std::string("bad graph: ") + e.what());
  }

  const json& verts = field(doc, "vertices", "document");
  if (!verts.is_object() || verts.size() != static_cast<std::size_t>(n)) {
    throw SchemaError("vertices must map each of the ids 1.." + std::to_string(n) + " to a point");
  }
  std::vector<Pt> positions;
  for (int v = 1; v <= n; ++v) {
    const std::string id = std::to_string(v);
    positions.push_back(point_of(field(verts, id.c_str(), "vertices"), "vertex " + id));
  }

  const json& lines_json = field(doc, "edge_lines", "document");
  if (!lines_json.is_object()) throw SchemaError("edge_lines must be an object");
  std::map<Edge, Polyline> lines;
  for (const auto& [key, pts_json] : lines_json.items()) {
    const auto e = parse_edge_key(key);
    if (!e) throw SchemaError("edge line key \"" + key + "\" is not of the form \"u-v\" with u < v");
    if (!pts_json.is_array()) throw SchemaError("edge line " + key + " must be an array of points");
    std::vector<Pt> pts;
    pts.reserve(pts_json.size());
    for (const json& p : pts_json) pts.push_back(point_of(p, "a point of edge line " + key));
    try {
      lines.emplace(*e, Polyline(std::move(pts)));
    } catch (const InvalidPolyline& err) {
      throw SchemaError("edge line " + key + ": " + err.what());
    }
  }
  return Drawing(std::move(*graph), std::move(positions), std::move(lines));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("cannot read " + path);
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot replace " + path);
  }
}

}  // namespace winding
