#pragma once

// Exact rational scalars and planar points, and the predicates built on them.
// Nothing in this header rounds: every result is a function of the exact
// input values only.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace winding {

/// Arbitrary-precision rational number, always in canonical reduced form
/// with a positive denominator.
class Rat {
 public:
  Rat() = default;

  template <std::signed_integral I>
  Rat(I value) : v_(static_cast<long>(value)) {}  // NOLINT: implicit by design of the arithmetic

  Rat(long num, long den);
  explicit Rat(const mpz_class& integer) : v_(integer) {}
  explicit Rat(mpq_class value);

  /// Parses "n" or "n/d" (optional leading '-'); throws BadRational.
  static Rat parse(std::string_view text);
  /// The exact value of a finite double.
  static Rat from_double(double value);
  /// 2^exponent, exponent may be negative.
  static Rat pow2(long exponent);

  const mpq_class& value() const { return v_; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Nearest double (truncated toward zero by GMP).
  double to_double() const { return v_.get_d(); }
  /// "n" when the denominator is 1, "n/d" otherwise.
  std::string str() const;

  mpz_class floor() const;
  mpz_class ceil() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }
  friend Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

const Rat& min(const Rat& a, const Rat& b);
const Rat& max(const Rat& a, const Rat& b);

/// Exact point in the plane.
struct Pt {
  Rat x;
  Rat y;

  friend bool operator==(const Pt&, const Pt&) = default;
  friend Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
  friend Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
  friend Pt operator*(const Rat& s, const Pt& p) { return {s * p.x, s * p.y}; }
};

std::ostream& operator<<(std::ostream& os, const Pt& p);

/// Lexicographic (x, then y) order; used for deterministic sorting only.
bool lex_less(const Pt& a, const Pt& b);

Rat cross(const Pt& u, const Pt& v);
Rat dot(const Pt& u, const Pt& v);
Rat norm2(const Pt& v);
Pt midpoint(const Pt& a, const Pt& b);
/// a + t (b - a)
Pt lerp(const Pt& a, const Pt& b, const Rat& t);

/// Sign of (b - a) x (c - a): +1 when c is strictly left of the directed line a->b.
int orient(const Pt& a, const Pt& b, const Pt& c);

/// True iff p lies on the closed segment ab (a == b allowed).
bool on_segment(const Pt& p, const Pt& a, const Pt& b);

/// True iff the closed segments ab and cd share a point.
bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

/// Squared Euclidean distance from p to the closed segment ab.
Rat dist2_point_segment(const Pt& p, const Pt& a, const Pt& b);

/// Squared distance between closed segments; zero iff they intersect.
Rat dist2_segments(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

/// Axis-aligned box with double bounds rounded outward, so that a negative
/// overlap test is a proof of disjointness of the exact geometry.
struct Box {
  double xlo;
  double xhi;
  double ylo;
  double yhi;

  bool overlaps(const Box& o) const {
    return xlo <= o.xhi && o.xlo <= xhi && ylo <= o.yhi && o.ylo <= yhi;
  }
  bool contains(double x, double y) const {
    return xlo <= x && x <= xhi && ylo <= y && y <= yhi;
  }
};

Box box_of(const Pt& a, const Pt& b);
Box box_of(const Pt& p);

}  // namespace winding

template <>
struct std::hash<winding::Rat> {
  std::size_t operator()(const winding::Rat& r) const noexcept;
};
