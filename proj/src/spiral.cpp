#include <algorithm>
#include <cstdlib>

#include "winding/constructor.hpp"
#include "winding/errors.hpp"

namespace winding {

SpiralPair spiral_pair_unchecked(const Pt& a, const Pt& b, const Pt& c, long m) {
  if (orient(a, b, c) != 1) {
    throw DegenerateTriangle("spiral pair needs a counterclockwise triangle");
  }
  const Rat third(1, 3);
  const Pt o = third * (a + b + c);
  if (m == 0) return {Polyline({a, o}), Polyline({b, c}), 0};

  const long k = std::labs(m);
  const Pt t = midpoint(a, c);
  const Pt x = lerp(b, t, third);
  const Pt r = Rat(2) * x - t;
  // The point on side BA and the point on side BC (at a third from B) trade
  // roles when the turn direction flips.
  const Pt on_ba = lerp(b, a, third);
  const Pt on_bc = lerp(b, c, third);
  const Pt s = m > 0 ? on_ba : on_bc;
  auto reflect = [&](const Pt& p) { return Rat(2) * x - p; };

  // Zigzag from O to T through the parallelogram with diagonals SQ and TR:
  // O Q1 R1 S2 T2 Q3 R3 ... Q(2k-1) R(2k-1) S T.
  std::vector<Pt> z{o};
  z.reserve(static_cast<std::size_t>(4 * k + 1));
  for (long i = 1; i < 2 * k; ++i) {
    const Rat frac(i, 2 * k);
    const Pt si = lerp(x, s, frac);
    const Pt ti = lerp(o, t, frac);
    if (i % 2 == 1) {
      z.push_back(reflect(si));
      z.push_back(reflect(ti));
    } else {
      z.push_back(si);
      z.push_back(ti);
    }
  }
  z.push_back(s);
  z.push_back(t);

  // The mirror image of the zigzag starts at the reflection of O, which is B.
  std::vector<Pt> zr;
  zr.reserve(z.size() + 1);
  for (const Pt& p : z) zr.push_back(reflect(p));
  if (zr.front() != b) throw ConstructionFailure("reflection of the centroid is not B");
  zr.push_back(c);

  std::vector<Pt> g{a};
  g.insert(g.end(), z.rbegin(), z.rend());
  return {Polyline(std::move(g)), Polyline(std::move(zr)), m};
}

SpiralPair spiral_pair(const Pt& a, const Pt& b, const Pt& c, long m) {
  SpiralPair sp = spiral_pair_unchecked(a, b, c, m);
  const Pt o = Rat(1, 3) * (a + b + c);
  auto fail = [](const std::string& what) {
    throw ConstructionFailure("spiral pair check failed: " + what);
  };
  if (!is_simple(sp.gamma)) fail("gamma is not simple");
  if (!is_simple(sp.lambda)) fail("lambda is not simple");
  if (!disjoint(sp.gamma, sp.lambda)) fail("gamma meets lambda");
  if (m == 0) {
    // Both lines are single segments; closing them up encloses nothing.
    if (on_curve(sp.gamma, b) || on_curve(sp.gamma, c)) fail("gamma passes through B or C");
    if (on_curve(sp.lambda, o) || on_curve(sp.lambda, a)) fail("lambda passes through O or A");
    return sp;
  }
  try {
    const Cycle gamma_closed(sp.gamma.points());
    const Cycle lambda_closed(sp.lambda.points());
    if (winding_closed(gamma_closed, b) != m) fail("w(gamma + OA, B) != m");
    if (winding_closed(gamma_closed, c) != 0) fail("w(gamma + OA, C) != 0");
    if (winding_closed(lambda_closed, o) != -m) fail("w(lambda + CB, O) != -m");
    if (winding_closed(lambda_closed, a) != 0) fail("w(lambda + CB, A) != 0");
  } catch (const PointOnCurve& e) {
    fail(e.what());
  }
  return sp;
}

Drawing base_embedding(long m1, long m2, long m3) {
  const long d = std::max({1L, std::labs(m1), std::labs(m2), std::labs(m3)});
  const std::vector<Pt> pos{
      {Rat(0), Rat(0)}, {Rat(6 * d), Rat(0)}, {Rat(0), Rat(6 * d)}, {Rat(2 * d), Rat(2 * d)}};
  const long m[3] = {m1, m2, m3};

  std::map<Edge, Polyline> lines;
  // (i, j, k) runs over the counterclockwise rotations of (1, 2, 3); the
  // pair for triple (i, j, k) draws edges i4 and jk and uses m_j.
  const int triples[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& tr : triples) {
    const int i = tr[0];
    const int j = tr[1];
    const int k = tr[2];
    SpiralPair sp = spiral_pair(pos[static_cast<std::size_t>(i - 1)], pos[static_cast<std::size_t>(j - 1)],
                                pos[static_cast<std::size_t>(k - 1)], m[j - 1]);
    lines.emplace(make_edge(i, 4), std::move(sp.gamma));
    lines.emplace(make_edge(j, k), j < k ? std::move(sp.lambda) : reverse(sp.lambda));
  }
  return Drawing(Graph::k4(), pos, std::move(lines));
}

}  // namespace winding
