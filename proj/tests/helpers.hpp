#pragma once

#include <random>
#include <vector>

#include "winding/exact_geom.hpp"
#include "winding/polyline.hpp"

namespace testing_support {

inline winding::Pt P(long x, long y) { return {winding::Rat(x), winding::Rat(y)}; }
inline winding::Pt P(winding::Rat x, winding::Rat y) { return {std::move(x), std::move(y)}; }

inline std::vector<winding::Pt> pts(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<winding::Pt> out;
  for (auto [x, y] : xy) out.push_back(P(x, y));
  return out;
}

/// Random integer point in [-bound, bound]^2.
inline winding::Pt random_point(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  const long x = d(rng);
  const long y = d(rng);
  return P(x, y);
}

/// Random rational point with denominators up to `den`.
inline winding::Pt random_rational_point(std::mt19937_64& rng, long bound, long den) {
  std::uniform_int_distribution<long> n(-bound * den, bound * den);
  std::uniform_int_distribution<long> d(1, den);
  const long a = n(rng), b = d(rng), c = n(rng), e = d(rng);
  return P(winding::Rat(a, b), winding::Rat(c, e));
}

/// Random point list of the given length with no two consecutive points
/// equal (and, when `closed`, last != first).
inline std::vector<winding::Pt> random_chain(std::mt19937_64& rng, std::size_t n, long bound,
                                             bool closed) {
  std::vector<winding::Pt> out;
  while (out.size() < n) {
    winding::Pt p = random_point(rng, bound);
    if (!out.empty() && out.back() == p) continue;
    if (closed && out.size() + 1 == n && p == out.front()) continue;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace testing_support
