#pragma once

// Explicit constructions of almost embeddings of K4 with prescribed winding
// numbers: interleaved spiral pairs inside a triangle, the base embedding
// built from three of them, and the finger move that wraps edge 13 around a
// loop enclosing edge 24.

#include "winding/exact_geom.hpp"
#include "winding/graph_drawing.hpp"
#include "winding/polyline.hpp"

namespace winding {

/// Two disjoint simple polylines in the triangle ABC with centroid O:
/// gamma joins A to O, lambda joins B to C, and closing them up gives
///   w(gamma + OA, B) = m,  w(gamma + OA, C) = 0,
///   w(lambda + CB, O) = -m, w(lambda + CB, A) = 0.
struct SpiralPair {
  Polyline gamma;
  Polyline lambda;
  long m;
};

/// Requires orient(a, b, c) == +1 (else DegenerateTriangle). The result is
/// checked before it is returned; a failed check raises ConstructionFailure.
SpiralPair spiral_pair(const Pt& a, const Pt& b, const Pt& c, long m);

/// Same construction without the runtime certification.
SpiralPair spiral_pair_unchecked(const Pt& a, const Pt& b, const Pt& c, long m);

/// Simple almost embedding of K4 with winding vector
/// (m1, -m2, m3, 1 - m1 - m2 - m3).
Drawing base_embedding(long m1, long m2, long m3);

/// Simple counterclockwise closed line with `inner` in its bounded face and
/// `outer` in its unbounded face: an offset outline of `inner` at distance
/// about `grid_cell`.
struct SeparatingLoop {
  Cycle loop;
  Rat grid_cell;
};

/// Throws InputsIntersect when the lines meet, SeparationFailure when the
/// refinement budget runs out.
SeparatingLoop separating_loop(const Polyline& inner, const Polyline& outer);

/// Polyline from `start` to a vertex of `loop` that misses `obstacle`.
/// Throws PointOnCurve if start is on the obstacle, PathNotFound if the grid
/// search fails.
Polyline access_path(const Pt& start, const Cycle& loop, const Polyline& obstacle,
                     const Rat& grid_cell);

/// The pieces of a finger move: edge 13 becomes line13 + path + loop^n + path^-1.
struct FingerMoveParts {
  Cycle loop;       // counterclockwise, based at path.back()
  Polyline path;    // from f(3) to loop[0]
  long n;
  Rat grid_cell;
};

/// Throws NotSimple if some edge line of g self-intersects.
FingerMoveParts plan_finger_move(const Drawing& g, long n);

/// Almost embedding with winding vector (w1, w2 + n, w3, w4 - n) where
/// (w1, ..., w4) is that of g. Requires g simple; n == 0 returns g.
Drawing finger_move(const Drawing& g, long n);

/// Almost embedding of K4 whose winding vector is (n1, n2, n3, n4).
/// Throws ParityViolation when the sum is even.
Drawing realize(long n1, long n2, long n3, long n4);
Drawing realize(const WindingVector& target);

/// The (a, b) of the reduction: realize(n) = finger_move(base_embedding(n1, a, n3), b).
struct ReductionParams {
  long a;
  long b;
};
ReductionParams reduction_params(long n1, long n2, long n3, long n4);

}  // namespace winding
