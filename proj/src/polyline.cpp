#include "winding/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "winding/errors.hpp"

namespace winding {

namespace {

void require_no_zero_segments(const std::vector<Pt>& pts, bool closed) {
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] == pts[i + 1]) {
      throw InvalidPolyline("zero-length segment at index " + std::to_string(i));
    }
  }
  if (closed && pts.front() == pts.back()) {
    throw InvalidPolyline("closed line lists its first point again at the end");
  }
}

}  // namespace

Polyline::Polyline(std::vector<Pt> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidPolyline("polyline needs at least 2 points");
  require_no_zero_segments(points_, false);
}

Cycle::Cycle(std::vector<Pt> points) : points_(std::move(points)) {
  if (points_.size() < 3) throw InvalidPolyline("cycle needs at least 3 points");
  require_no_zero_segments(points_, true);
}

Cycle Cycle::rotated(std::size_t start) const {
  std::vector<Pt> pts(points_.begin() + static_cast<std::ptrdiff_t>(start % points_.size()),
                      points_.end());
  pts.insert(pts.end(), points_.begin(),
             points_.begin() + static_cast<std::ptrdiff_t>(start % points_.size()));
  return Cycle(std::move(pts));
}

Polyline concat(const Polyline& l1, const Polyline& l2) {
  if (l1.back() != l2.front()) {
    throw EndpointMismatch("cannot concatenate: last point of the first line is not the "
                           "first point of the second");
  }
  std::vector<Pt> pts;
  pts.reserve(l1.size() + l2.size() - 1);
  pts.insert(pts.end(), l1.points().begin(), l1.points().end());
  pts.insert(pts.end(), l2.points().begin() + 1, l2.points().end());
  return Polyline(std::move(pts));
}

Polyline reverse(const Polyline& l) {
  return Polyline(std::vector<Pt>(l.points().rbegin(), l.points().rend()));
}

Cycle reverse(const Cycle& c) {
  return Cycle(std::vector<Pt>(c.points().rbegin(), c.points().rend()));
}

Polyline power(const Cycle& c, long n, std::size_t basepoint_index) {
  if (n == 0) throw ZeroPower("power of a closed line with exponent 0 is undefined");
  if (basepoint_index >= c.size()) throw InvalidPolyline("basepoint index out of range");
  const Cycle base = c.rotated(basepoint_index);
  const Cycle loop = n > 0 ? base : reverse(base).rotated(base.size() - 1);
  const std::size_t turns = static_cast<std::size_t>(n > 0 ? n : -n);
  std::vector<Pt> pts;
  pts.reserve(turns * loop.size() + 1);
  for (std::size_t t = 0; t < turns; ++t) {
    pts.insert(pts.end(), loop.points().begin(), loop.points().end());
  }
  pts.push_back(loop[0]);
  return Polyline(std::move(pts));
}

bool on_curve(const Polyline& l, const Pt& p) {
  const Box pb = box_of(p);
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    if (box_of(l[i], l[i + 1]).overlaps(pb) && on_segment(p, l[i], l[i + 1])) return true;
  }
  return false;
}

bool on_curve(const Cycle& c, const Pt& p) {
  const Box pb = box_of(p);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (box_of(c[i], c.next(i)).overlaps(pb) && on_segment(p, c[i], c.next(i))) return true;
  }
  return false;
}

long winding_closed(const Cycle& c, const Pt& p) {
  if (on_curve(c, p)) throw PointOnCurve("point lies on the closed line");
  long w = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Pt& q = c[i];
    const Pt& r = c.next(i);
    if (q.y <= p.y) {
      if (p.y < r.y && orient(q, r, p) > 0) ++w;  // upward, p on the left
    } else if (r.y <= p.y && orient(q, r, p) < 0) {
      --w;  // downward, p on the right
    }
  }
  return w;
}

double turning_open(const Polyline& l, const Pt& p) {
  if (on_curve(l, p)) throw PointOnCurve("point lies on the polygonal line");
  double total = 0.0;
  Pt u = l[0] - p;
  for (std::size_t i = 1; i < l.size(); ++i) {
    Pt v = l[i] - p;
    total += std::atan2(cross(u, v).to_double(), dot(u, v).to_double());
    u = std::move(v);
  }
  return total / (2.0 * std::numbers::pi);
}

std::vector<SegmentRef> segments_of(const Polyline& l) {
  std::vector<SegmentRef> segs;
  segs.reserve(l.segment_count());
  for (std::size_t i = 0; i + 1 < l.size(); ++i) segs.push_back({&l[i], &l[i + 1]});
  return segs;
}

std::vector<SegmentRef> segments_of(const Cycle& c) {
  std::vector<SegmentRef> segs;
  segs.reserve(c.segment_count());
  for (std::size_t i = 0; i < c.size(); ++i) segs.push_back({&c[i], &c.next(i)});
  return segs;
}

namespace detail {

std::vector<BoxedIndex> sorted_boxes(std::span<const SegmentRef> a,
                                     std::span<const SegmentRef> b) {
  std::vector<BoxedIndex> items;
  items.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) items.push_back({box_of(*a[i].p, *a[i].q), i, 0});
  for (std::size_t i = 0; i < b.size(); ++i) items.push_back({box_of(*b[i].p, *b[i].q), i, 1});
  std::sort(items.begin(), items.end(), [](const BoxedIndex& x, const BoxedIndex& y) {
    return x.box.xlo < y.box.xlo;
  });
  return items;
}

}  // namespace detail

namespace {

// Adjacent segments s = pq and t = qr (sharing q) meet only in q unless they
// fold back over each other.
bool adjacent_overlap(const Pt& p, const Pt& q, const Pt& r) {
  if (orient(p, q, r) != 0) return false;
  return on_segment(r, p, q) || on_segment(p, q, r);
}

bool simple_impl(std::span<const SegmentRef> segs, bool closed) {
  const std::size_t n = segs.size();
  auto adjacent = [&](std::size_t i, std::size_t j) {
    if (j == i + 1 || i == j + 1) return true;
    return closed && n > 2 && ((i == 0 && j == n - 1) || (j == 0 && i == n - 1));
  };
  // Consecutive pairs first: they may only share their common endpoint.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (adjacent_overlap(*segs[i].p, *segs[i].q, *segs[i + 1].q)) return false;
  }
  if (closed && adjacent_overlap(*segs[n - 1].p, *segs[n - 1].q, *segs[0].q)) return false;
  if (closed && n == 3) return true;

  std::vector<detail::BoxedIndex> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) items.push_back({box_of(*segs[i].p, *segs[i].q), i, 0});
  std::sort(items.begin(), items.end(),
            [](const auto& x, const auto& y) { return x.box.xlo < y.box.xlo; });
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n && items[b].box.xlo <= items[a].box.xhi; ++b) {
      const std::size_t i = items[a].index;
      const std::size_t j = items[b].index;
      if (adjacent(i, j) || !items[a].box.overlaps(items[b].box)) continue;
      if (segments_intersect(*segs[i].p, *segs[i].q, *segs[j].p, *segs[j].q)) return false;
    }
  }
  return true;
}

bool disjoint_impl(std::span<const SegmentRef> a, std::span<const SegmentRef> b) {
  return !for_each_box_overlap(a, b, [&](std::size_t i, std::size_t j) {
    return segments_intersect(*a[i].p, *a[i].q, *b[j].p, *b[j].q);
  });
}

}  // namespace

bool is_simple(const Polyline& l) {
  const auto segs = segments_of(l);
  return simple_impl(segs, false);
}

bool is_simple(const Cycle& c) {
  const auto segs = segments_of(c);
  return simple_impl(segs, true);
}

bool disjoint(const Polyline& l1, const Polyline& l2) {
  const auto a = segments_of(l1);
  const auto b = segments_of(l2);
  return disjoint_impl(a, b);
}

bool disjoint(const Cycle& c, const Polyline& l) {
  const auto a = segments_of(c);
  const auto b = segments_of(l);
  return disjoint_impl(a, b);
}

Rat signed_area2(const Cycle& c) {
  mpq_class acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Pt& p = c[i];
    const Pt& q = c.next(i);
    acc += p.x.value() * q.y.value() - p.y.value() * q.x.value();
  }
  return Rat(acc);
}

}  // namespace winding
