#ifndef BLUNDON_ORACLE_HPP
#define BLUNDON_ORACLE_HPP

// Plane-coordinate oracle. Places the triangle in the plane from its side
// lengths and answers distance and angle questions with ordinary vector
// arithmetic, independently of the barycentric formulas in kernel.hpp and
// engine.hpp.

#include <algorithm>
#include <array>
#include <cmath>

#include "blundon/error.hpp"
#include "blundon/kernel.hpp"

namespace blundon::oracle {

struct Point2 {
  double x = 0;
  double y = 0;

  friend Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
  friend Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
  friend Point2 operator*(double k, Point2 p) { return {k * p.x, k * p.y}; }
};

inline double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
inline double norm_sq(Point2 p) { return dot(p, p); }
inline double distance_sq(Point2 p, Point2 q) { return norm_sq(p - q); }

/// B = (0, 0), C = (a, 0), A above the x-axis (below it when mirrored).
struct Placement {
  Point2 A, B, C;

  std::array<Point2, 3> vertices() const { return {A, B, C}; }
};

inline Placement place(const TriangleSides<double>& sides, bool mirrored = false) {
  const double a = sides.a(), b = sides.b(), c = sides.c();
  const double x = (a * a + c * c - b * b) / (2 * a);
  const double y = std::sqrt(std::max(0.0, (c - x) * (c + x)));
  if (!(y > 0)) {
    throw GeometryError(ErrorKind::DegenerateTriangle, "placement collapsed onto a line");
  }
  return {{x, mirrored ? -y : y}, {0, 0}, {a, 0}};
}

inline Point2 bary_to_cartesian(const BaryPoint<double>& p, const Placement& pl) {
  const double total = p.sum();
  return {(p[0] * pl.A.x + p[1] * pl.B.x + p[2] * pl.C.x) / total,
          (p[0] * pl.A.y + p[1] * pl.B.y + p[2] * pl.C.y) / total};
}

/// Areal coordinates of a plane point (signed sub-triangle areas).
inline std::array<double, 3> cartesian_to_bary(Point2 point, const Placement& pl) {
  const double whole = cross(pl.B - pl.A, pl.C - pl.A);
  return {cross(pl.B - point, pl.C - point) / whole, cross(pl.C - point, pl.A - point) / whole,
          cross(pl.A - point, pl.B - point) / whole};
}

/// Intersection of the perpendicular bisectors, computed relative to A.
inline Point2 circumcenter_cartesian(const Placement& pl) {
  const Point2 u = pl.B - pl.A;
  const Point2 v = pl.C - pl.A;
  const double d = 2 * cross(u, v);
  if (d == 0) {
    throw GeometryError(ErrorKind::DegenerateTriangle, "vertices are collinear");
  }
  const double uu = norm_sq(u);
  const double vv = norm_sq(v);
  return pl.A + Point2{(v.y * uu - u.y * vv) / d, (u.x * vv - v.x * uu) / d};
}

inline double oracle_dist_sq(const BaryPoint<double>& p, const BaryPoint<double>& q, const Placement& pl) {
  return distance_sq(bary_to_cartesian(p, pl), bary_to_cartesian(q, pl));
}

/// Vectors O->P and O->Q.
inline std::array<Point2, 2> rays_from_circumcenter(const BaryPoint<double>& p, const BaryPoint<double>& q,
                                                    const Placement& pl) {
  const Point2 o = circumcenter_cartesian(pl);
  return {bary_to_cartesian(p, pl) - o, bary_to_cartesian(q, pl) - o};
}

/// cos(POQ) from the normalized dot product; UndefinedAngle when either
/// point lies on O within `tolerance` times the circumradius.
inline double oracle_angle_cos(const BaryPoint<double>& p, const BaryPoint<double>& q, const Placement& pl,
                               double tolerance = 1e-12) {
  const Point2 o = circumcenter_cartesian(pl);
  const double R = std::sqrt(distance_sq(o, pl.A));
  const auto [op, oq] = rays_from_circumcenter(p, q, pl);
  const double lp = std::hypot(op.x, op.y);
  const double lq = std::hypot(oq.x, oq.y);
  if (lp <= tolerance * R || lq <= tolerance * R) {
    throw GeometryError(ErrorKind::UndefinedAngle, "point coincides with the circumcenter");
  }
  return dot(op, oq) / (lp * lq);
}

/// cos of the angle at p2 in the triangle p1 p2 p3.
inline double oracle_vertex_cos(const BaryPoint<double>& p1, const BaryPoint<double>& p2,
                                const BaryPoint<double>& p3, const Placement& pl) {
  const Point2 x1 = bary_to_cartesian(p1, pl);
  const Point2 x2 = bary_to_cartesian(p2, pl);
  const Point2 x3 = bary_to_cartesian(p3, pl);
  const Point2 u = x1 - x2;
  const Point2 v = x3 - x2;
  return dot(u, v) / (std::hypot(u.x, u.y) * std::hypot(v.x, v.y));
}

/// Point-to-line distance from `p` to the line through `u` and `v`.
inline double distance_to_line(Point2 p, Point2 u, Point2 v) {
  const Point2 d = v - u;
  return std::abs(cross(d, p - u)) / std::hypot(d.x, d.y);
}

}  // namespace blundon::oracle

#endif  // BLUNDON_ORACLE_HPP
