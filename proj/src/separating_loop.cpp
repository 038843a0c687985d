#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "winding/constructor.hpp"
#include "winding/errors.hpp"

namespace winding {

namespace {

constexpr int kMaxRefinements = 12;
constexpr long kMaxSearchCells = 1L << 24;

// Grid cell (i, j) is the closed square [i h, (i+1) h] x [j h, (j+1) h];
// lattice vertex (i, j) is the point (i h, j h).
struct Cell {
  long i;
  long j;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(c.i) << 32) ^
                                      static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.j)));
  }
};

using CellSet = std::unordered_set<Cell, CellHash>;

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw SeparationFailure("grid index out of range");
  return z.get_si();
}

// Marks every cell whose closed square meets the closed segment pq.
void rasterize_segment(const Pt& p, const Pt& q, const Rat& h, CellSet& cells) {
  const Rat u0 = p.x / h;
  const Rat v0 = p.y / h;
  const Rat u1 = q.x / h;
  const Rat v1 = q.y / h;
  const Rat& umin = min(u0, u1);
  const Rat& umax = max(u0, u1);
  const long c_lo = to_long(umin.ceil()) - 1;
  const long c_hi = to_long(umax.floor());
  const bool vertical = u0 == u1;
  const Rat slope = vertical ? Rat(0) : (v1 - v0) / (u1 - u0);
  for (long c = c_lo; c <= c_hi; ++c) {
    const Rat xlo = max(umin, Rat(c));
    const Rat xhi = min(umax, Rat(c + 1));
    if (xhi < xlo) continue;
    Rat vlo;
    Rat vhi;
    if (vertical) {
      vlo = min(v0, v1);
      vhi = max(v0, v1);
    } else {
      const Rat va = v0 + (xlo - u0) * slope;
      const Rat vb = v0 + (xhi - u0) * slope;
      vlo = min(va, vb);
      vhi = max(va, vb);
    }
    const long r_lo = to_long(vlo.ceil()) - 1;
    const long r_hi = to_long(vhi.floor());
    for (long r = r_lo; r <= r_hi; ++r) cells.insert({c, r});
  }
}

CellSet rasterize(const Polyline& l, const Rat& h) {
  CellSet cells;
  for (std::size_t i = 0; i + 1 < l.size(); ++i) rasterize_segment(l[i], l[i + 1], h, cells);
  return cells;
}

// Closed cells containing p (one, two or four of them).
std::vector<Cell> cells_containing(const Pt& p, const Rat& h) {
  const Rat u = p.x / h;
  const Rat v = p.y / h;
  const long i = to_long(u.floor());
  const long j = to_long(v.floor());
  std::vector<long> is{i};
  std::vector<long> js{j};
  if (u.is_integer()) is.push_back(i - 1);
  if (v.is_integer()) js.push_back(j - 1);
  std::vector<Cell> out;
  for (long a : is) {
    for (long b : js) out.push_back({a, b});
  }
  return out;
}


Rat min_dist2(const Polyline& a, const Polyline& b) {
  std::optional<Rat> best;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      Rat d = dist2_segments(a[i], a[i + 1], b[j], b[j + 1]);
      if (!best || d < *best) best = std::move(d);
    }
  }
  return *best;
}

// Largest power of two e with (8 e)^2 <= d2.
Rat initial_offset(const Rat& d2) {
  long ex = static_cast<long>(std::floor(std::log2(std::sqrt(d2.to_double()) / 8.0)));
  auto fits = [&](long k) {
    const Rat e = Rat::pow2(k);
    return Rat(64) * e * e <= d2;
  };
  while (!fits(ex)) --ex;
  while (fits(ex + 1)) ++ex;
  return Rat::pow2(ex);
}

Rat sup_norm(const Pt& v) { return max(abs(v.x), abs(v.y)); }

Pt perp_left(const Pt& v) { return {-v.y, v.x}; }

// Meeting point of the lines a + s u and b + t v (u, v not parallel).
Pt meet(const Pt& a, const Pt& u, const Pt& b, const Pt& v) {
  const Rat s = cross(b - a, v) / cross(u, v);
  return a + s * u;
}

// Closed line at offset e around `l`: each segment is pushed out by e along
// its normal scaled to unit sup norm, so every vertex stays rational. Turns
// get a miter on their inner side and a bevel on their outer side; the ends
// get square caps.
std::vector<Pt> offset_outline(const Polyline& l, const Rat& e) {
  const std::size_t n = l.size() - 1;
  std::vector<Pt> t;
  std::vector<Pt> nrm;
  t.reserve(n);
  nrm.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Pt d = l[i + 1] - l[i];
    t.push_back((Rat(1) / sup_norm(d)) * d);
    nrm.push_back(perp_left(t.back()));
  }

  // One side of the line, walked forwards; sgn = +1 is the left side.
  auto side = [&](int sgn) {
    const Rat s = sgn > 0 ? e : -e;
    std::vector<Pt> out{l[0] + s * nrm[0]};
    for (std::size_t i = 1; i < n; ++i) {
      const int turn = cross(t[i - 1], t[i]).sign();
      const Pt a = l[i] + s * nrm[i - 1];
      const Pt b = l[i] + s * nrm[i];
      if (turn == 0) {
        out.push_back(b);
      } else if (turn == sgn) {
        out.push_back(meet(a, t[i - 1], b, t[i]));
      } else {
        out.push_back(a);
        out.push_back(b);
      }
    }
    out.push_back(l[n] + s * nrm[n - 1]);
    return out;
  };

  std::vector<Pt> right = side(-1);
  std::vector<Pt> left = side(+1);
  // Right side forwards, cap, left side backwards, cap: counterclockwise.
  std::vector<Pt> pts = right;
  pts.push_back(l[n] + e * t[n - 1] - e * nrm[n - 1]);
  pts.push_back(l[n] + e * t[n - 1] + e * nrm[n - 1]);
  pts.insert(pts.end(), left.rbegin(), left.rend());
  pts.push_back(l[0] - e * t[0] + e * nrm[0]);
  pts.push_back(l[0] - e * t[0] - e * nrm[0]);

  std::vector<Pt> clean;
  clean.reserve(pts.size());
  for (Pt& p : pts) {
    if (clean.empty() || clean.back() != p) clean.push_back(std::move(p));
  }
  while (clean.size() > 1 && clean.back() == clean.front()) clean.pop_back();
  return clean;
}

std::optional<Cycle> try_loop(const Polyline& inner, const Polyline& outer, const Rat& e) {
  std::vector<Pt> pts = offset_outline(inner, e);
  if (pts.size() < 3) return std::nullopt;
  Cycle loop(std::move(pts));
  if (signed_area2(loop).sign() <= 0) return std::nullopt;
  if (!is_simple(loop)) return std::nullopt;
  if (!disjoint(loop, inner) || !disjoint(loop, outer)) return std::nullopt;
  for (const Pt& q : inner.points()) {
    if (winding_closed(loop, q) != 1) return std::nullopt;
  }
  if (winding_closed(loop, outer.front()) != 0) return std::nullopt;
  return loop;
}

}  // namespace

SeparatingLoop separating_loop(const Polyline& inner, const Polyline& outer) {
  Rat d2 = min_dist2(inner, outer);
  if (d2.sign() == 0) throw InputsIntersect("the polylines to separate intersect");
  // Short segments of the inner line also bound the useful offset.
  for (std::size_t i = 0; i + 1 < inner.size(); ++i) {
    const Rat s = norm2(inner[i + 1] - inner[i]);
    if (s < d2) d2 = s;
  }
  Rat e = initial_offset(d2);
  for (int round = 0; round <= kMaxRefinements; ++round) {
    if (auto loop = try_loop(inner, outer, e)) return {std::move(*loop), e};
    e = e * Rat(1, 2);
  }
  throw SeparationFailure("no separating loop after " + std::to_string(kMaxRefinements) +
                          " refinements");
}

Polyline access_path(const Pt& start, const Cycle& loop, const Polyline& obstacle,
                     const Rat& grid_cell) {
  if (on_curve(obstacle, start)) throw PointOnCurve("path start lies on the obstacle");
  if (grid_cell.sign() <= 0) throw PathNotFound("grid cell must be positive");

  // Straight segments to the loop vertices, nearest first.
  std::vector<std::pair<Rat, std::size_t>> by_distance;
  by_distance.reserve(loop.size());
  for (std::size_t i = 0; i < loop.size(); ++i) by_distance.emplace_back(norm2(loop[i] - start), i);
  std::sort(by_distance.begin(), by_distance.end());
  if (by_distance.front().first.sign() == 0) throw PathNotFound("path start is a vertex of the loop");
  for (const auto& [d, i] : by_distance) {
    Polyline direct({start, loop[i]});
    if (disjoint(direct, obstacle)) return direct;
  }

  // Breadth-first search over cells that miss the obstacle. A path through
  // the centres of edge-adjacent free cells stays inside their union.
  const Rat& h = grid_cell;
  const CellSet blocked = rasterize(obstacle, h);
  std::unordered_map<Cell, std::size_t, CellHash> targets;
  for (std::size_t k = 0; k < loop.size(); ++k) {
    for (const Cell& c : cells_containing(loop[k], h)) {
      if (!blocked.count(c)) targets.emplace(c, k);
    }
  }
  std::vector<Cell> sources;
  for (const Cell& c : cells_containing(start, h)) {
    if (!blocked.count(c)) sources.push_back(c);
  }
  if (sources.empty() || targets.empty()) throw PathNotFound("no free cell at an endpoint");

  long i_lo = sources.front().i, i_hi = i_lo, j_lo = sources.front().j, j_hi = j_lo;
  auto widen = [&](const Cell& c) {
    i_lo = std::min(i_lo, c.i);
    i_hi = std::max(i_hi, c.i);
    j_lo = std::min(j_lo, c.j);
    j_hi = std::max(j_hi, c.j);
  };
  for (const Cell& c : blocked) widen(c);
  for (const auto& [c, k] : targets) widen(c);
  for (const Cell& c : sources) widen(c);
  --i_lo, --j_lo, ++i_hi, ++j_hi;
  const long width = i_hi - i_lo + 1;
  const long height = j_hi - j_lo + 1;
  if (width > kMaxSearchCells / height) throw PathNotFound("search grid too large");
  auto index = [&](const Cell& c) { return static_cast<std::size_t>((c.i - i_lo) * height + (c.j - j_lo)); };

  std::vector<std::int64_t> parent(static_cast<std::size_t>(width * height), -2);
  for (const Cell& c : blocked) parent[index(c)] = -3;
  std::deque<Cell> queue;
  for (const Cell& c : sources) {
    parent[index(c)] = -1;
    queue.push_back(c);
  }
  std::optional<Cell> goal;
  while (!queue.empty() && !goal) {
    const Cell c = queue.front();
    queue.pop_front();
    if (targets.count(c)) {
      goal = c;
      break;
    }
    const Cell nbrs[4] = {{c.i + 1, c.j}, {c.i - 1, c.j}, {c.i, c.j + 1}, {c.i, c.j - 1}};
    for (const Cell& nb : nbrs) {
      if (nb.i < i_lo || nb.i > i_hi || nb.j < j_lo || nb.j > j_hi) continue;
      auto& slot = parent[index(nb)];
      if (slot != -2) continue;
      slot = static_cast<std::int64_t>(index(c));
      queue.push_back(nb);
    }
  }
  if (!goal) throw PathNotFound("grid search found no route to the loop");

  std::vector<Cell> route{*goal};
  for (std::int64_t p = parent[index(*goal)]; p >= 0; p = parent[static_cast<std::size_t>(p)]) {
    route.push_back({i_lo + p / height, j_lo + p % height});
  }
  std::reverse(route.begin(), route.end());

  std::vector<Pt> pts{start};
  const Rat half(1, 2);
  for (std::size_t k = 0; k < route.size(); ++k) {
    // Interior cells in a straight run add nothing to the shape.
    if (k > 0 && k + 1 < route.size()) {
      const Cell& a = route[k - 1];
      const Cell& b = route[k];
      const Cell& c = route[k + 1];
      if ((b.i - a.i) == (c.i - b.i) && (b.j - a.j) == (c.j - b.j)) continue;
    }
    Pt centre{(Rat(route[k].i) + half) * h, (Rat(route[k].j) + half) * h};
    if (centre != pts.back()) pts.push_back(std::move(centre));
  }
  const Pt& end = loop[targets.at(*goal)];
  if (end != pts.back()) pts.push_back(end);
  if (pts.size() < 2) throw PathNotFound("degenerate path");
  Polyline path(std::move(pts));
  if (!disjoint(path, obstacle)) throw PathNotFound("routed path meets the obstacle");
  return path;
}

}  // namespace winding
