#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "winding/errors.hpp"
#include "winding/graph_drawing.hpp"

using namespace winding;
using testing_support::P;

namespace {

Drawing straight(const Graph& g, std::vector<Pt> pos) {
  std::map<Edge, Polyline> lines;
  for (const Edge& e : g.edges()) {
    lines.emplace(e, Polyline({pos[static_cast<std::size_t>(e.u - 1)], pos[static_cast<std::size_t>(e.v - 1)]}));
  }
  return Drawing(g, std::move(pos), std::move(lines));
}

Drawing base_k4() { return straight(Graph::k4(), {P(0, 0), P(6, 0), P(0, 6), P(2, 2)}); }

// Winding vector from the raw edge lines with the angle-sum oracle.
std::array<long, 4> oracle_vector(const Drawing& d) {
  std::array<long, 4> out{};
  for (int j = 1; j <= 4; ++j) {
    std::vector<int> cyc;
    for (int v = 1; v <= 4; ++v) {
      if (v != j) cyc.push_back(v);
    }
    std::vector<Pt> closed;
    for (std::size_t k = 0; k < 3; ++k) {
      const Polyline l = d.oriented(cyc[k], cyc[(k + 1) % 3]);
      closed.insert(closed.end(), l.points().begin(), l.points().end() - 1);
    }
    out[static_cast<std::size_t>(j - 1)] = std::lround(oracle::angle_winding(closed, d.position(j)));
  }
  return out;
}

// Brute-force almost-embedding test over all non-adjacent simplex pairs.
bool oracle_almost_embedding(const Drawing& d) {
  const auto& g = d.graph();
  for (int a = 1; a <= g.vertex_count(); ++a) {
    for (int b = a + 1; b <= g.vertex_count(); ++b) {
      if (d.position(a) == d.position(b)) return false;
    }
    for (const Edge& e : g.edges()) {
      if (e.u == a || e.v == a) continue;
      if (oracle::point_on_chain(d.position(a), d.line(e).points())) return false;
    }
  }
  for (const Edge& e : g.edges()) {
    for (const Edge& f : g.edges()) {
      if (!(e < f) || e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      if (oracle::chains_meet(d.line(e).points(), d.line(f).points())) return false;
    }
  }
  return true;
}

Drawing map_points(const Drawing& d, const std::function<Pt(const Pt&)>& f) {
  std::vector<Pt> pos;
  for (const Pt& p : d.positions()) pos.push_back(f(p));
  std::map<Edge, Polyline> lines;
  for (const auto& [e, l] : d.edge_lines()) {
    std::vector<Pt> q;
    for (const Pt& p : l.points()) q.push_back(f(p));
    lines.emplace(e, Polyline(std::move(q)));
  }
  return Drawing(d.graph(), std::move(pos), std::move(lines));
}

}  // namespace

TEST_CASE("graphs") {
  CHECK(Graph::k4().edges().size() == 6);
  CHECK(Graph::k5_minus_45().edges().size() == 9);
  CHECK_FALSE(Graph::k5_minus_45().has_edge(4, 5));
  CHECK(Graph::k5_minus_45().has_edge(5, 3));
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidGraph);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), InvalidGraph);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), InvalidGraph);
  CHECK(make_edge(3, 1) == Edge{1, 3});
  CHECK(Edge{2, 4}.str() == "2-4");
}

TEST_CASE("drawing invariants") {
  const Graph g(2, {{1, 2}});
  CHECK_THROWS_AS(Drawing(g, {P(0, 0), P(1, 0)}, {{{1, 2}, Polyline({P(0, 0), P(2, 0)})}}), EndpointMismatch);
  CHECK_THROWS_AS(Drawing(g, {P(0, 0), P(1, 0)}, {}), SchemaError);
  const Drawing d(g, {P(0, 0), P(1, 0)}, {{{1, 2}, Polyline({P(0, 0), P(1, 1), P(1, 0)})}});
  CHECK(d.oriented(2, 1).front() == P(1, 0));
  CHECK(d.oriented(2, 1)[1] == P(1, 1));
}

TEST_CASE("restriction to a cycle") {
  const Drawing tri = straight(Graph(3, {{1, 2}, {1, 3}, {2, 3}}), {P(0, 0), P(1, 0), P(0, 1)});
  CHECK(restriction_to_cycle(tri, {1, 2, 3}).size() == 3);
  Drawing d = base_k4();
  d = d.with_line({3, 4}, Polyline({P(0, 6), P(1, 7), P(2, 7), P(3, 6), P(3, 4), P(2, 2)}));
  const Cycle c = restriction_to_cycle(d, {2, 3, 4});
  CHECK(c.points() == std::vector<Pt>{P(6, 0), P(0, 6), P(1, 7), P(2, 7), P(3, 6), P(3, 4), P(2, 2)});
  CHECK_THROWS_AS(restriction_to_cycle(d, {1, 3}), NotACycle);
  CHECK_THROWS_AS(restriction_to_cycle(straight(Graph(3, {{1, 2}, {2, 3}}), {P(0, 0), P(1, 0), P(0, 1)}), {1, 2, 3}),
                  NotACycle);
}

TEST_CASE("almost embeddings of K4") {
  CHECK(is_almost_embedding(base_k4()).is_almost_embedding);
  const ValidationReport r = is_almost_embedding(straight(Graph::k4(), {P(0, 0), P(1, 0), P(1, 1), P(0, 1)}));
  CHECK_FALSE(r.is_almost_embedding);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].first == Simplex::of({1, 3}));
  CHECK(r.violations[0].second == Simplex::of({2, 4}));
  // A vertex on a non-incident edge.
  CHECK_FALSE(is_almost_embedding(straight(Graph::k4(), {P(0, 0), P(4, 0), P(0, 4), P(2, 2)})).is_almost_embedding);
  // Vertices 2 and 4 share an image.
  const std::vector<Pt> pos{P(0, 0), P(4, 0), P(0, 4), P(4, 0)};
  const Drawing same(Graph::k4(), pos,
                     {{{1, 2}, Polyline({P(0, 0), P(4, 0)})},
                      {{1, 3}, Polyline({P(0, 0), P(0, 4)})},
                      {{1, 4}, Polyline({P(0, 0), P(2, -1), P(4, 0)})},
                      {{2, 3}, Polyline({P(4, 0), P(0, 4)})},
                      {{2, 4}, Polyline({P(4, 0), P(5, 5), P(4, 0)})},
                      {{3, 4}, Polyline({P(0, 4), P(5, 1), P(4, 0)})}});
  const ValidationReport r2 = is_almost_embedding(same);
  CHECK_FALSE(r2.is_almost_embedding);
  CHECK(std::any_of(r2.violations.begin(), r2.violations.end(), [](const Violation& v) {
    return v.first == Simplex::vertex(2) && v.second == Simplex::vertex(4);
  }));
}

TEST_CASE("winding vectors of K4 drawings") {
  CHECK(winding_vector_k4(base_k4()) == WindingVector{{0, 0, 0, 1}});
  const Drawing cw = straight(Graph::k4(), {P(0, 0), P(0, 6), P(6, 0), P(2, 2)});
  CHECK(winding_vector_k4(cw) == WindingVector{{0, 0, 0, -1}});
  CHECK(oracle_vector(cw) == std::array<long, 4>{0, 0, 0, -1});
  CHECK(winding_vector_k4(base_k4()).str() == "(0, 0, 0, 1)");
  CHECK_THROWS_AS(winding_vector_k4(straight(Graph::k4(), {P(0, 0), P(1, 0), P(1, 1), P(0, 1)})), NotAlmostEmbedding);
  CHECK(k4_cycle(2) == std::vector<int>{1, 3, 4});
}

TEST_CASE("winding undefined at a vertex on its cycle") {
  // f(4) lies on the line of edge 12 passing the other way round: not an
  // almost embedding, so the stronger check rejects it first.
  Drawing d = base_k4().with_line({1, 2}, Polyline({P(0, 0), P(2, 2), P(6, 0)}));
  CHECK_FALSE(is_almost_embedding(d).is_almost_embedding);
  CHECK_THROWS(winding_vector_k4(d));
}

TEST_CASE("K5 minus 45 difference") {
  const Graph g = Graph::k5_minus_45();
  const Drawing d = straight(g, {P(0, 0), P(6, 0), P(0, 6), P(2, 2), P(10, -1)});
  REQUIRE(is_almost_embedding(d).is_almost_embedding);
  CHECK(oracle_almost_embedding(d));
  CHECK(k5_difference(d) == 1);
  const Drawing swapped = straight(g, {P(0, 0), P(6, 0), P(0, 6), P(10, -1), P(2, 2)});
  REQUIRE(is_almost_embedding(swapped).is_almost_embedding);
  CHECK(k5_difference(swapped) == -1);
  // With 5 at (10, 11) the segment from 1 to 5 crosses the segment from 3 to 4.
  const Drawing crossing = straight(g, {P(0, 0), P(6, 0), P(0, 6), P(2, 2), P(10, 11)});
  CHECK_FALSE(is_almost_embedding(crossing).is_almost_embedding);
  CHECK_FALSE(oracle_almost_embedding(crossing));
  CHECK_THROWS_AS(k5_difference(crossing), NotAlmostEmbedding);
}

TEST_CASE("validation agrees with the brute-force reference") {
  std::mt19937_64 rng(17);
  int accepted = 0;
  for (int i = 0; i < 400; ++i) {
    const Graph g = i % 2 ? Graph::k4() : Graph::k5_minus_45();
    std::vector<Pt> pos;
    for (int v = 0; v < g.vertex_count(); ++v) pos.push_back(testing_support::random_point(rng, 6));
    std::map<Edge, Polyline> lines;
    bool ok = true;
    for (const Edge& e : g.edges()) {
      std::vector<Pt> chain{pos[static_cast<std::size_t>(e.u - 1)]};
      if (rng() % 2) chain.push_back(testing_support::random_point(rng, 6));
      chain.push_back(pos[static_cast<std::size_t>(e.v - 1)]);
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) ok &= chain[k] != chain[k + 1];
      if (ok) lines.emplace(e, Polyline(chain));
    }
    if (!ok) continue;
    const Drawing d(g, pos, lines);
    const bool want = oracle_almost_embedding(d);
    const ValidationReport r = is_almost_embedding(d);
    CHECK(r.is_almost_embedding == want);
    CHECK(r.violations.empty() == r.is_almost_embedding);
    CHECK(quick_accept(d) == (want && r.windings_defined));
    if (want && r.windings_defined && g == Graph::k4()) {
      ++accepted;
      CHECK(winding_vector_k4(d).w == oracle_vector(d));
    }
  }
  CHECK(accepted > 10);
}

TEST_CASE("sampler") {
  const Drawing a = sample_random(Graph::k4(), 1);
  CHECK(is_almost_embedding(a).is_almost_embedding);
  CHECK(sample_random(Graph::k4(), 1) == a);
  CHECK_FALSE(sample_random(Graph::k4(), 2) == a);
  SamplerParams tight;
  tight.grid_side = 1;
  tight.max_attempts = 5;
  CHECK_THROWS_AS(sample_random(Graph::k5_minus_45(), 3, tight), SamplerExhausted);
  CHECK_THROWS_AS(sample_random(Graph(3, {{1, 2}}), 3), InvalidGraph);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Drawing d = sample_random(Graph::k4(), s);
    CHECK(oracle_almost_embedding(d));
    const WindingVector w = winding_vector_k4(d);
    CHECK(w.sum() % 2 != 0);
    CHECK(w.w == oracle_vector(d));
  }
}

TEST_CASE("winding vector invariances") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Drawing d = sample_random(Graph::k4(), 1000 + s);
    const WindingVector w = winding_vector_k4(d);
    // Subdivide every edge at a rational point of its first segment.
    Drawing sub = d;
    for (const auto& [e, l] : d.edge_lines()) {
      std::vector<Pt> q = l.points();
      q.insert(q.begin() + 1, lerp(q[0], q[1], Rat(2, 7)));
      sub = sub.with_line(e, Polyline(std::move(q)));
    }
    CHECK(winding_vector_k4(sub) == w);
    // Orientation-preserving affine map (determinant 7) and a reflection.
    const Drawing affine = map_points(d, [](const Pt& p) {
      return Pt{Rat(2) * p.x + p.y + Rat(1, 3), Rat(-1) * p.x + Rat(3) * p.y - Rat(5)};
    });
    CHECK(winding_vector_k4(affine) == w);
    const Drawing mirror = map_points(d, [](const Pt& p) { return Pt{-p.x, p.y}; });
    const WindingVector m = winding_vector_k4(mirror);
    for (std::size_t j = 0; j < 4; ++j) CHECK(m[j] == -w[j]);
  }
}

TEST_CASE("windings split into turning numbers of the cycle's edges") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Drawing d = sample_random(Graph::k4(), 5000 + s);
    const WindingVector w = winding_vector_k4(d);
    for (int j = 1; j <= 4; ++j) {
      const auto cyc = k4_cycle(j);
      double total = 0;
      for (std::size_t k = 0; k < 3; ++k) total += turning_open(d.oriented(cyc[k], cyc[(k + 1) % 3]), d.position(j));
      CHECK(std::fabs(total - static_cast<double>(w[static_cast<std::size_t>(j - 1)])) < 1e-6);
    }
  }
}
