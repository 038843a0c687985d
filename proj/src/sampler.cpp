#include <map>
#include <optional>
#include <random>

#include "winding/errors.hpp"
#include "winding/graph_drawing.hpp"

namespace winding {

namespace {

std::optional<Drawing> draw_once(const Graph& g, std::mt19937_64& rng, const SamplerParams& params) {
  std::uniform_int_distribution<long> coord(0, params.grid_side);
  std::uniform_int_distribution<int> bends(0, params.max_bends);
  auto random_point = [&] {
    const long x = coord(rng);
    const long y = coord(rng);
    return Pt{Rat(x), Rat(y)};
  };

  std::vector<Pt> positions;
  positions.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) positions.push_back(random_point());

  std::map<Edge, Polyline> lines;
  bool degenerate = false;
  for (const Edge& e : g.edges()) {
    std::vector<Pt> pts{positions[static_cast<std::size_t>(e.u - 1)]};
    const int k = bends(rng);
    for (int i = 0; i < k; ++i) pts.push_back(random_point());
    pts.push_back(positions[static_cast<std::size_t>(e.v - 1)]);
    // Keep drawing the remaining edges so the stream consumed per attempt
    // does not depend on where the first degeneracy occurred.
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) degenerate |= pts[i] == pts[i + 1];
    if (!degenerate) lines.emplace(e, Polyline(std::move(pts)));
  }
  if (degenerate) return std::nullopt;
  return Drawing(g, std::move(positions), std::move(lines));
}

}  // namespace

SampleResult sample_random_counted(const Graph& g, std::uint64_t seed, const SamplerParams& params) {
  if (g != Graph::k4() && g != Graph::k5_minus_45()) {
    throw InvalidGraph("the sampler supports K4 and K5 - 45 only");
  }
  if (params.grid_side < 1 || params.max_bends < 0 || params.max_attempts < 1) {
    throw InvalidGraph("invalid sampler settings");
  }
  std::mt19937_64 rng(seed);
  for (long attempt = 1; attempt <= params.max_attempts; ++attempt) {
    auto d = draw_once(g, rng, params);
    if (d && quick_accept(*d)) return {std::move(*d), attempt};
  }
  throw SamplerExhausted("no almost embedding found after " +
                         std::to_string(params.max_attempts) + " attempts (seed " +
                         std::to_string(seed) + ")");
}

Drawing sample_random(const Graph& g, std::uint64_t seed, const SamplerParams& params) {
  return sample_random_counted(g, seed, params).drawing;
}

}  // namespace winding
