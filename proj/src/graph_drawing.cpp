#include "winding/graph_drawing.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "winding/errors.hpp"

namespace winding {

std::string Edge::str() const { return std::to_string(u) + "-" + std::to_string(v); }

Edge make_edge(int a, int b) {
  if (a == b) throw InvalidGraph("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw InvalidGraph("graph needs at least one vertex");
  for (Edge& e : edges_) {
    e = make_edge(e.u, e.v);
    if (e.u < 1 || e.v > vertex_count_) {
      throw InvalidGraph("edge " + e.str() + " uses a vertex outside 1.." +
                         std::to_string(vertex_count_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidGraph("parallel edges");
  }
}

Graph Graph::k4() {
  return Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

Graph Graph::k5_minus_45() {
  return Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
}

bool Graph::has_edge(int a, int b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

Drawing::Drawing(Graph graph, std::vector<Pt> positions, std::map<Edge, Polyline> edge_lines)
    : graph_(std::move(graph)), positions_(std::move(positions)),
      edge_lines_(std::move(edge_lines)) {
  if (positions_.size() != static_cast<std::size_t>(graph_.vertex_count())) {
    throw SchemaError("expected " + std::to_string(graph_.vertex_count()) +
                      " vertex positions, got " + std::to_string(positions_.size()));
  }
  if (edge_lines_.size() != graph_.edges().size()) {
    throw SchemaError("edge lines do not match the graph's edge set");
  }
  for (const Edge& e : graph_.edges()) {
    const auto it = edge_lines_.find(e);
    if (it == edge_lines_.end()) throw SchemaError("missing line for edge " + e.str());
    if (it->second.front() != position(e.u) || it->second.back() != position(e.v)) {
      throw EndpointMismatch("line of edge " + e.str() + " does not join its vertices");
    }
  }
}

const Polyline& Drawing::line(const Edge& e) const {
  const auto it = edge_lines_.find(e);
  if (it == edge_lines_.end()) throw NotACycle("no edge " + e.str());
  return it->second;
}

Polyline Drawing::oriented(int a, int b) const {
  const Polyline& l = line(make_edge(a, b));
  return a < b ? l : reverse(l);
}

Drawing Drawing::with_line(const Edge& e, Polyline line) const {
  auto lines = edge_lines_;
  lines.insert_or_assign(e, std::move(line));
  return Drawing(graph_, positions_, std::move(lines));
}

bool Simplex::shares_vertex_with(const Simplex& o) const {
  return edge.u == o.edge.u || edge.u == o.edge.v || edge.v == o.edge.u || edge.v == o.edge.v;
}

std::string Simplex::str() const {
  return kind == Kind::vertex ? "vertex " + std::to_string(edge.u) : "edge " + edge.str();
}

std::string WindingVector::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const WindingVector& wv) {
  return os << '(' << wv.w[0] << ", " << wv.w[1] << ", " << wv.w[2] << ", " << wv.w[3] << ')';
}

Cycle restriction_to_cycle(const Drawing& d, const std::vector<int>& cycle_vertices) {
  const std::size_t n = cycle_vertices.size();
  if (n < 3) throw NotACycle("a cycle needs at least 3 vertices");
  std::vector<Pt> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const int a = cycle_vertices[i];
    const int b = cycle_vertices[(i + 1) % n];
    if (!d.graph().has_edge(a, b)) {
      throw NotACycle(std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
    }
    const Polyline l = d.oriented(a, b);
    // Drop the final point: it is the first point of the next restriction.
    pts.insert(pts.end(), l.points().begin(), l.points().end() - 1);
  }
  return Cycle(std::move(pts));
}

namespace {

std::string describe_crossing(const Edge& e1, std::size_t i, const Edge& e2, std::size_t j) {
  return "segment " + std::to_string(i) + " of " + e1.str() + " meets segment " +
         std::to_string(j) + " of " + e2.str();
}

ValidationReport validate(const Drawing& d, bool stop_early) {
  ValidationReport report;
  const Graph& g = d.graph();
  const int nv = g.vertex_count();

  for (int a = 1; a <= nv; ++a) {
    for (int b = a + 1; b <= nv; ++b) {
      if (d.position(a) == d.position(b)) {
        report.violations.push_back({Simplex::vertex(a), Simplex::vertex(b),
                                     "both vertices map to the same point"});
        if (stop_early) break;
      }
    }
  }

  for (int v = 1; v <= nv; ++v) {
    const Pt& p = d.position(v);
    for (const auto& [e, l] : d.edge_lines()) {
      if (e.u == v || e.v == v) continue;
      const Box pb = box_of(p);
      for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        if (box_of(l[i], l[i + 1]).overlaps(pb) && on_segment(p, l[i], l[i + 1])) {
          report.violations.push_back({Simplex::vertex(v), Simplex::of(e),
                                       "vertex lies on segment " + std::to_string(i) + " of " +
                                           e.str()});
          break;
        }
      }
    }
  }

  const auto& lines = d.edge_lines();
  for (auto it = lines.begin(); it != lines.end(); ++it) {
    for (auto jt = std::next(it); jt != lines.end(); ++jt) {
      const Simplex s = Simplex::of(it->first);
      const Simplex t = Simplex::of(jt->first);
      if (s.shares_vertex_with(t)) continue;
      const auto a = segments_of(it->second);
      const auto b = segments_of(jt->second);
      std::string witness;
      for_each_box_overlap(a, b, [&](std::size_t i, std::size_t j) {
        if (!segments_intersect(*a[i].p, *a[i].q, *b[j].p, *b[j].q)) return false;
        witness = describe_crossing(it->first, i, jt->first, j);
        return true;
      });
      if (!witness.empty()) {
        report.violations.push_back({s, t, std::move(witness)});
        if (stop_early) break;
      }
    }
    if (stop_early && !report.violations.empty()) break;
  }
  report.is_almost_embedding = report.violations.empty();
  if (stop_early && !report.is_almost_embedding) {
    report.windings_defined = false;
    return report;
  }

  // Windings at the named vertices are defined whenever no vertex sits on a
  // cycle through other vertices; for K4 and K5-45 that is implied by the
  // vertex-edge checks above but is recomputed so the flag stands alone.
  auto off = [&](const std::vector<int>& cyc, int v) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int a = cyc[i];
      const int b = cyc[(i + 1) % cyc.size()];
      if (!g.has_edge(a, b)) return true;
      if (on_curve(d.line(make_edge(a, b)), d.position(v))) return false;
    }
    return true;
  };
  if (g == Graph::k4()) {
    for (int j = 1; j <= 4; ++j) report.windings_defined &= off(k4_cycle(j), j);
  } else if (g == Graph::k5_minus_45()) {
    report.windings_defined = off({1, 2, 3}, 4) && off({1, 2, 3}, 5);
  }
  return report;
}

}  // namespace

ValidationReport is_almost_embedding(const Drawing& d) { return validate(d, false); }

bool quick_accept(const Drawing& d) {
  const ValidationReport r = validate(d, true);
  return r.is_almost_embedding && r.windings_defined;
}

std::vector<int> k4_cycle(int j) {
  if (j < 1 || j > 4) throw InvalidGraph("K4 has vertices 1..4");
  std::vector<int> c;
  for (int v = 1; v <= 4; ++v) {
    if (v != j) c.push_back(v);
  }
  return c;
}

namespace {

long vertex_winding(const Drawing& d, const std::vector<int>& cycle, int v) {
  try {
    return winding_closed(restriction_to_cycle(d, cycle), d.position(v));
  } catch (const PointOnCurve&) {
    throw WindingUndefined(v);
  }
}

void require_almost_embedding(const Drawing& d) {
  const ValidationReport r = is_almost_embedding(d);
  if (!r.is_almost_embedding) {
    throw NotAlmostEmbedding("not an almost embedding: " + r.violations.front().first.str() +
                             " and " + r.violations.front().second.str() + " (" +
                             r.violations.front().witness + ")");
  }
}

}  // namespace

WindingVector winding_vector_k4(const Drawing& d) {
  if (d.graph() != Graph::k4()) throw InvalidGraph("winding vector needs a drawing of K4");
  require_almost_embedding(d);
  WindingVector wv;
  for (int j = 1; j <= 4; ++j) wv.w[static_cast<std::size_t>(j - 1)] = vertex_winding(d, k4_cycle(j), j);
  return wv;
}

long k5_difference(const Drawing& d) {
  if (d.graph() != Graph::k5_minus_45()) {
    throw InvalidGraph("difference check needs a drawing of K5 - 45");
  }
  require_almost_embedding(d);
  return vertex_winding(d, {1, 2, 3}, 4) - vertex_winding(d, {1, 2, 3}, 5);
}

}  // namespace winding
