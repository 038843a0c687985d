#pragma once

// Graphs, piecewise-linear drawings, almost-embedding validation and the
// winding numbers attached to cycles of a drawing.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "winding/exact_geom.hpp"
#include "winding/polyline.hpp"

namespace winding {

/// Unordered edge, stored with u < v.
struct Edge {
  int u;
  int v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  std::string str() const;  // "u-v"
};

/// Canonical edge between two distinct vertices.
Edge make_edge(int a, int b);

/// Simple graph on vertices 1..vertex_count.
class Graph {
 public:
  /// Throws InvalidGraph on loops, repeated edges or out-of-range ids.
  Graph(int vertex_count, std::vector<Edge> edges);

  static Graph k4();
  /// K5 with the edge 45 removed.
  static Graph k5_minus_45();

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int a, int b) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;  // sorted
};

/// A piecewise-linear map of a graph to the plane: one point per vertex and
/// one polyline per edge, stored from the smaller vertex to the larger.
class Drawing {
 public:
  /// `positions[v - 1]` is the image of vertex v. Throws EndpointMismatch
  /// when an edge line does not join its vertices, SchemaError when the edge
  /// set disagrees with the graph.
  Drawing(Graph graph, std::vector<Pt> positions, std::map<Edge, Polyline> edge_lines);

  const Graph& graph() const { return graph_; }
  const Pt& position(int v) const { return positions_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<Pt>& positions() const { return positions_; }
  const std::map<Edge, Polyline>& edge_lines() const { return edge_lines_; }
  const Polyline& line(const Edge& e) const;

  /// The restriction f|_{ab}: starts at f(a), ends at f(b).
  Polyline oriented(int a, int b) const;

  /// Copy with the line of edge `e` replaced.
  Drawing with_line(const Edge& e, Polyline line) const;

  friend bool operator==(const Drawing&, const Drawing&) = default;

 private:
  Graph graph_;
  std::vector<Pt> positions_;
  std::map<Edge, Polyline> edge_lines_;
};

/// A vertex or an edge of the graph.
struct Simplex {
  enum class Kind { vertex, edge };
  Kind kind;
  Edge edge;  // for a vertex, edge.u == edge.v == the vertex id

  static Simplex vertex(int v) { return {Kind::vertex, {v, v}}; }
  static Simplex of(const Edge& e) { return {Kind::edge, e}; }
  bool shares_vertex_with(const Simplex& o) const;
  std::string str() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
};

struct Violation {
  Simplex first;
  Simplex second;
  std::string witness;
};

struct ValidationReport {
  bool is_almost_embedding = true;
  std::vector<Violation> violations;
  /// For K4: every f(j) lies off f(C_j). For K5-45: f(4), f(5) lie off
  /// f(123). True for other graphs.
  bool windings_defined = true;
};

/// The four integers (w_f(1), ..., w_f(4)).
struct WindingVector {
  std::array<long, 4> w{};

  long operator[](std::size_t j) const { return w[j]; }
  long sum() const { return w[0] + w[1] + w[2] + w[3]; }
  friend bool operator==(const WindingVector&, const WindingVector&) = default;
  std::string str() const;  // "(w1, w2, w3, w4)"
};

std::ostream& operator<<(std::ostream& os, const WindingVector& wv);

/// The closed polyline f|_{v1v2} ... f|_{vnv1}. Throws NotACycle.
Cycle restriction_to_cycle(const Drawing& d, const std::vector<int>& cycle_vertices);

/// Checks every pair of simplices that share no vertex: distinct vertices map
/// to distinct points, a vertex misses every edge not incident to it, and
/// non-adjacent edges have disjoint images.
ValidationReport is_almost_embedding(const Drawing& d);

/// Same verdict as is_almost_embedding(d) with windings_defined, stopping at
/// the first violation.
bool quick_accept(const Drawing& d);

/// C_j is {1,2,3,4} \ {j} in ascending order.
std::vector<int> k4_cycle(int j);

/// w_j = w(f|_{C_j}, f(j)). Throws NotAlmostEmbedding or WindingUndefined.
WindingVector winding_vector_k4(const Drawing& d);

/// w(f|_{123}, f(4)) - w(f|_{123}, f(5)) for a drawing of K5 - 45.
long k5_difference(const Drawing& d);

/// Settings of the rejection sampler.
struct SamplerParams {
  long grid_side = 100;           // coordinates drawn from {0..grid_side}
  int max_bends = 3;              // 0..max_bends interior points per edge
  long max_attempts = 10'000;     // per accepted drawing
};

struct SampleResult {
  Drawing drawing;
  long attempts;
};

/// Random almost embedding of `g` (K4 or K5-45), deterministic in
/// (seed, params). Throws SamplerExhausted.
SampleResult sample_random_counted(const Graph& g, std::uint64_t seed,
                                   const SamplerParams& params = {});
Drawing sample_random(const Graph& g, std::uint64_t seed, const SamplerParams& params = {});

}  // namespace winding
