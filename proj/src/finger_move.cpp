#include <algorithm>

#include "winding/constructor.hpp"
#include "winding/errors.hpp"

namespace winding {

FingerMoveParts plan_finger_move(const Drawing& g, long n) {
  if (g.graph() != Graph::k4()) throw InvalidGraph("finger move needs a drawing of K4");
  for (const auto& [e, l] : g.edge_lines()) {
    if (!is_simple(l)) throw NotSimple("edge " + e.str() + " is not a simple polygonal line");
  }
  const Polyline inner = g.oriented(2, 4);
  const Polyline outer = g.oriented(1, 3);
  SeparatingLoop sep = separating_loop(inner, outer);
  Polyline path = access_path(g.position(3), sep.loop, inner, sep.grid_cell);

  const auto& pts = sep.loop.points();
  const auto base = std::find(pts.begin(), pts.end(), path.back());
  if (base == pts.end()) throw ConstructionFailure("access path does not end on the loop");
  Cycle loop = sep.loop.rotated(static_cast<std::size_t>(base - pts.begin()));
  return {std::move(loop), std::move(path), n, std::move(sep.grid_cell)};
}

Drawing finger_move(const Drawing& g, long n) {
  if (n == 0) return g;
  const FingerMoveParts parts = plan_finger_move(g, n);
  // f|13 = g|13 P L^n P^-1
  Polyline line = concat(g.oriented(1, 3), parts.path);
  line = concat(line, power(parts.loop, n, 0));
  line = concat(line, reverse(parts.path));
  return g.with_line(make_edge(1, 3), std::move(line));
}

ReductionParams reduction_params(long n1, long n2, long n3, long n4) {
  const long sum = n1 + n2 + n3 + n4;
  if (sum % 2 == 0) {
    throw ParityViolation("the winding numbers of an almost embedding of K4 have odd sum; got " +
                          std::to_string(sum));
  }
  return {(1 - n1 - n2 - n3 - n4) / 2, (1 - n1 + n2 - n3 - n4) / 2};
}

Drawing realize(long n1, long n2, long n3, long n4) {
  const ReductionParams r = reduction_params(n1, n2, n3, n4);
  Drawing f = finger_move(base_embedding(n1, r.a, n3), r.b);
  const WindingVector got = winding_vector_k4(f);
  const WindingVector want{{n1, n2, n3, n4}};
  if (got != want) {
    throw ConstructionFailure("realized winding vector " + got.str() + " differs from " +
                              want.str());
  }
  return f;
}

Drawing realize(const WindingVector& target) {
  return realize(target[0], target[1], target[2], target[3]);
}

}  // namespace winding
