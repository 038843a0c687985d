#include "winding/exact_geom.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "winding/errors.hpp"

namespace winding {

Rat::Rat(long num, long den) {
  if (den == 0) throw BadRational("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(mpq_class value) : v_(std::move(value)) {
  if (v_.get_den() == 0) throw BadRational("zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw BadRational("empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && t[0] == '-') i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  const std::string_view sv(s);
  if (slash == std::string::npos) {
    if (!valid_int(sv, true)) throw BadRational("malformed rational '" + s + "'");
    return Rat(mpz_class(s, 10));
  }
  const auto num = sv.substr(0, slash);
  const auto den = sv.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw BadRational("malformed rational '" + s + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw BadRational("zero denominator in '" + s + "'");
  return Rat(mpq_class(n, d));
}

Rat Rat::from_double(double value) {
  if (!std::isfinite(value)) throw BadRational("non-finite double");
  return Rat(mpq_class(value));
}

Rat Rat::pow2(long exponent) {
  mpz_class p = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return Rat(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  return Rat(mpq_class(mpz_class(1), p));
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class Rat::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.sign() == 0) throw BadRational("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Pt& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

bool lex_less(const Pt& a, const Pt& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Rat cross(const Pt& u, const Pt& v) { return u.x * v.y - u.y * v.x; }
Rat dot(const Pt& u, const Pt& v) { return u.x * v.x + u.y * v.y; }
Rat norm2(const Pt& v) { return dot(v, v); }
Pt midpoint(const Pt& a, const Pt& b) { return Rat(1, 2) * (a + b); }
Pt lerp(const Pt& a, const Pt& b, const Rat& t) { return a + t * (b - a); }

namespace {

constexpr long kSmall = 1L << 60;

bool small_int(const Rat& r, long& out) {
  const mpq_class& q = r.value();
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return false;
  out = q.get_num().get_si();
  return out > -kSmall && out < kSmall;
}

}  // namespace

int orient(const Pt& a, const Pt& b, const Pt& c) {
  // Integer inputs (the sampler's grid) take a 128-bit fast path.
  long ax, ay, bx, by, cx, cy;
  if (small_int(a.x, ax) && small_int(a.y, ay) && small_int(b.x, bx) && small_int(b.y, by) &&
      small_int(c.x, cx) && small_int(c.y, cy)) {
    const __int128 d = static_cast<__int128>(bx - ax) * (cy - ay) -
                       static_cast<__int128>(by - ay) * (cx - ax);
    return (d > 0) - (d < 0);
  }
  const mpq_class& axq = a.x.value();
  const mpq_class& ayq = a.y.value();
  mpq_class lhs = (b.x.value() - axq) * (c.y.value() - ayq);
  mpq_class rhs = (b.y.value() - ayq) * (c.x.value() - axq);
  return cmp(lhs, rhs);
}

bool on_segment(const Pt& p, const Pt& a, const Pt& b) {
  if (orient(a, b, p) != 0) return false;
  return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y &&
         p.y <= max(a.y, b.y);
}

bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(c, a, b)) return true;
  if (o2 == 0 && on_segment(d, a, b)) return true;
  if (o3 == 0 && on_segment(a, c, d)) return true;
  if (o4 == 0 && on_segment(b, c, d)) return true;
  return false;
}

Rat dist2_point_segment(const Pt& p, const Pt& a, const Pt& b) {
  const Pt ab = b - a;
  const Rat len2 = norm2(ab);
  if (len2.sign() == 0) return norm2(p - a);
  const Rat t = dot(p - a, ab);
  if (t.sign() <= 0) return norm2(p - a);
  if (t >= len2) return norm2(p - b);
  // |ap|^2 - (ap.ab)^2 / |ab|^2
  return norm2(p - a) - t * t / len2;
}

Rat dist2_segments(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  if (segments_intersect(a, b, c, d)) return Rat(0);
  Rat best = dist2_point_segment(a, c, d);
  best = min(best, dist2_point_segment(b, c, d));
  best = min(best, dist2_point_segment(c, a, b));
  best = min(best, dist2_point_segment(d, a, b));
  return best;
}

namespace {

// mpq_get_d truncates toward zero; stepping one ulp outward on each side
// brackets the exact value.
double down(const Rat& r) {
  return std::nextafter(r.to_double(), -std::numeric_limits<double>::infinity());
}
double up(const Rat& r) {
  return std::nextafter(r.to_double(), std::numeric_limits<double>::infinity());
}

}  // namespace

Box box_of(const Pt& a, const Pt& b) {
  const Rat& xl = min(a.x, b.x);
  const Rat& xh = max(a.x, b.x);
  const Rat& yl = min(a.y, b.y);
  const Rat& yh = max(a.y, b.y);
  return {down(xl), up(xh), down(yl), up(yh)};
}

Box box_of(const Pt& p) { return box_of(p, p); }

}  // namespace winding

std::size_t std::hash<winding::Rat>::operator()(const winding::Rat& r) const noexcept {
  const mpq_class& q = r.value();
  const std::size_t hn = mpz_get_ui(q.get_num_mpz_t()) ^ (static_cast<std::size_t>(sgn(q)) << 1);
  const std::size_t hd = mpz_get_ui(q.get_den_mpz_t());
  return hn * 1000003u ^ hd;
}
