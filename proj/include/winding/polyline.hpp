#pragma once

// Polygonal lines: open (Polyline) and closed (Cycle), their algebra
// (concatenation, reversal, powers), exact winding numbers of closed lines,
// and the floating-point turning number of open lines.

#include <cstddef>
#include <span>
#include <vector>

#include "winding/exact_geom.hpp"

namespace winding {

/// Open polygonal line A1...Am, m >= 2, with no zero-length segment.
class Polyline {
 public:
  /// Throws InvalidPolyline when the invariants fail.
  explicit Polyline(std::vector<Pt> points);

  const std::vector<Pt>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t segment_count() const { return points_.size() - 1; }
  const Pt& front() const { return points_.front(); }
  const Pt& back() const { return points_.back(); }
  const Pt& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const Polyline&, const Polyline&) = default;

 private:
  std::vector<Pt> points_;
};

/// Closed polygonal line A1...Am, m >= 3. The closing segment Am->A1 is
/// implied and never stored, so Am != A1.
class Cycle {
 public:
  explicit Cycle(std::vector<Pt> points);

  const std::vector<Pt>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t segment_count() const { return points_.size(); }
  const Pt& operator[](std::size_t i) const { return points_[i]; }
  /// End point of segment i (wraps around).
  const Pt& next(std::size_t i) const { return points_[i + 1 == points_.size() ? 0 : i + 1]; }

  /// The same closed line with point `start` listed first.
  Cycle rotated(std::size_t start) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Pt> points_;
};

/// l1 followed by l2, the shared point listed once. Throws EndpointMismatch.
Polyline concat(const Polyline& l1, const Polyline& l2);

Polyline reverse(const Polyline& l);
Cycle reverse(const Cycle& c);

/// Opens c at `basepoint_index` and traverses it |n| times, reversed when
/// n < 0. Throws ZeroPower for n == 0.
Polyline power(const Cycle& c, long n, std::size_t basepoint_index);

/// True iff p lies on some segment of the line.
bool on_curve(const Polyline& l, const Pt& p);
bool on_curve(const Cycle& c, const Pt& p);

/// Exact winding number of c around p by signed crossings of the rightward
/// horizontal ray (half-open rule at vertices). Throws PointOnCurve.
long winding_closed(const Cycle& c, const Pt& p);

/// Sum of the oriented angles A_i p A_{i+1}, each in (-pi, pi], over 2 pi.
/// Each angle is evaluated from exact cross and dot products, so the error
/// is a few ulps per segment. Throws PointOnCurve.
double turning_open(const Polyline& l, const Pt& p);

bool is_simple(const Polyline& l);
bool is_simple(const Cycle& c);

/// True iff no segment of l1 meets any segment of l2.
bool disjoint(const Polyline& l1, const Polyline& l2);
bool disjoint(const Cycle& c, const Polyline& l);

/// Twice the signed area of c (positive for counterclockwise).
Rat signed_area2(const Cycle& c);

/// Finds, among pairs (i, j) with segment i taken from `a` and segment j
/// from `b`, the ones whose bounding boxes overlap, and calls
/// visit(i, j). Stops early when visit returns true; returns whether it did.
/// Segments are given as consecutive point pairs through the accessors.
struct SegmentRef {
  const Pt* p;
  const Pt* q;
};
template <class Visit>
bool for_each_box_overlap(std::span<const SegmentRef> a, std::span<const SegmentRef> b,
                          Visit&& visit);

std::vector<SegmentRef> segments_of(const Polyline& l);
std::vector<SegmentRef> segments_of(const Cycle& c);

namespace detail {
struct BoxedIndex {
  Box box;
  std::size_t index;
  int side;
};
std::vector<BoxedIndex> sorted_boxes(std::span<const SegmentRef> a, std::span<const SegmentRef> b);
}  // namespace detail

template <class Visit>
bool for_each_box_overlap(std::span<const SegmentRef> a, std::span<const SegmentRef> b,
                          Visit&& visit) {
  // Sort-and-sweep on x; only pairs from different sides are reported.
  const auto items = detail::sorted_boxes(a, b);
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size() && items[j].box.xlo <= items[i].box.xhi; ++j) {
      if (items[i].side == items[j].side || !items[i].box.overlaps(items[j].box)) continue;
      const bool stop = items[i].side == 0 ? visit(items[i].index, items[j].index)
                                           : visit(items[j].index, items[i].index);
      if (stop) return true;
    }
  }
  return false;
}

}  // namespace winding
