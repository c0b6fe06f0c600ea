#pragma once

#include "areal/rational.hpp"

#include <array>
#include <stdexcept>

namespace areal {

struct Point {
  Rational x, y;
  friend bool operator==(const Point& a, const Point& b) = default;
};

/// Homogeneous 3x3 determinant of a triangle; twice its signed area,
/// positive for counterclockwise vertex order.
inline Rational det3(const Point& a, const Point& b, const Point& c) {
  return a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y);
}

// (x, y) -> (a x + b y + tx, c x + d y + ty)
struct AffineMap {
  Rational a, b, c, d, tx, ty;

  Point operator()(const Point& p) const {
    return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
  }
  Rational determinant() const { return a * d - b * c; }

  static AffineMap identity() {
    return {Rational(1), Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)};
  }

  /// The unique affine map sending src[i] to dst[i]. Throws if the source
  /// triangle is degenerate.
  static AffineMap from_triangles(const std::array<Point, 3>& src, const std::array<Point, 3>& dst) {
    Rational det = det3(src[0], src[1], src[2]);
    if (sign(det) == 0) throw std::invalid_argument("AffineMap: degenerate source triangle");
    Rational u1 = src[1].x - src[0].x, v1 = src[1].y - src[0].y;
    Rational u2 = src[2].x - src[0].x, v2 = src[2].y - src[0].y;
    Rational p1 = dst[1].x - dst[0].x, q1 = dst[1].y - dst[0].y;
    Rational p2 = dst[2].x - dst[0].x, q2 = dst[2].y - dst[0].y;
    // Solve M * [u v]^T = [p q]^T for the two basis vectors.
    Rational inv = Rational(1) / (u1 * v2 - u2 * v1);
    AffineMap m;
    m.a = (p1 * v2 - p2 * v1) * inv;
    m.b = (p2 * u1 - p1 * u2) * inv;
    m.c = (q1 * v2 - q2 * v1) * inv;
    m.d = (q2 * u1 - q1 * u2) * inv;
    m.tx = dst[0].x - (m.a * src[0].x + m.b * src[0].y);
    m.ty = dst[0].y - (m.c * src[0].x + m.d * src[0].y);
    return m;
  }
};

}  // namespace areal
