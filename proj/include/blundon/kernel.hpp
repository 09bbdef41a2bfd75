#ifndef BLUNDON_KERNEL_HPP
#define BLUNDON_KERNEL_HPP

// Triangle elements and barycentric distance formulas.
//
// Every formula that classically carries barycentric coordinates in a
// denominator is evaluated here in its cleared-denominator form, so points
// with a zero coordinate (Cevian feet, points on a sideline) are legal
// inputs. The only excluded triples are those summing to zero.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "blundon/error.hpp"
#include "blundon/scalar.hpp"

namespace blundon {

/// Side lengths a = BC, b = CA, c = AB of a non-degenerate triangle.
template <Scalar T>
class TriangleSides {
 public:
  TriangleSides(T a, T b, T c, const T& degeneracy = degeneracy_tolerance<T>())
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (!is_finite_value(a_) || !is_finite_value(b_) || !is_finite_value(c_)) {
      throw GeometryError(ErrorKind::DegenerateTriangle, "side lengths must be finite");
    }
    if (!(a_ > 0 && b_ > 0 && c_ > 0)) {
      throw GeometryError(ErrorKind::DegenerateTriangle, "side lengths must be positive");
    }
    const T slack = std::min({T(a_ + b_ - c_), T(b_ + c_ - a_), T(c_ + a_ - b_)});
    if (slack <= degeneracy * (a_ + b_ + c_)) {
      throw GeometryError(ErrorKind::DegenerateTriangle, "triangle inequality fails");
    }
  }

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  const T& c() const { return c_; }

  T perimeter() const { return a_ + b_ + c_; }
  T semiperimeter() const { return (a_ + b_ + c_) / 2; }
  std::array<T, 3> lengths() const { return {a_, b_, c_}; }
  std::array<T, 3> squares() const { return {a_ * a_, b_ * b_, c_ * c_}; }

  /// Sides relabeled so that vertex A takes the role of B (a' = b, ...).
  TriangleSides rotated() const { return TriangleSides(b_, c_, a_); }

  friend bool operator==(const TriangleSides&, const TriangleSides&) = default;

 private:
  T a_, b_, c_;
};

/// 16 S^2 in Kahan's ordering, which keeps the small factor accurate for
/// needle-shaped triangles. Exact for rationals.
template <Scalar T>
T sixteen_area_squared(const TriangleSides<T>& sides) {
  std::array<T, 3> v = sides.lengths();
  std::sort(v.begin(), v.end(), [](const T& x, const T& y) { return x > y; });
  const T& a = v[0];
  const T& b = v[1];
  const T& c = v[2];
  return (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
}

template <Scalar T>
T area_squared(const TriangleSides<T>& sides) {
  return sixteen_area_squared(sides) / 16;
}

/// R^2 = a^2 b^2 c^2 / (16 S^2).
template <Scalar T>
T circumradius_squared(const TriangleSides<T>& sides) {
  const T abc = sides.a() * sides.b() * sides.c();
  return abc * abc / sixteen_area_squared(sides);
}

/// Classical elements of a triangle. Lengths need square roots, so this is
/// only available for floating scalars; see SquaredElements for the exact
/// counterpart.
template <FloatingScalar T>
struct TriangleElements {
  T a, b, c;
  T s;         // semiperimeter
  T area;      // S
  T R;         // circumradius
  T r;         // inradius
  T r_a, r_b, r_c;
  T a2, b2, c2;

  T exradius(int vertex) const { return vertex == 0 ? r_a : vertex == 1 ? r_b : r_c; }
  T sum_of_squares() const { return a2 + b2 + c2; }
};

template <FloatingScalar T>
TriangleElements<T> derive_elements(const TriangleSides<T>& sides) {
  TriangleElements<T> e{};
  e.a = sides.a();
  e.b = sides.b();
  e.c = sides.c();
  e.s = sides.semiperimeter();
  e.area = std::sqrt(sixteen_area_squared(sides)) / 4;
  e.R = e.a * e.b * e.c / (4 * e.area);
  e.r = e.area / e.s;
  // s - a computed as (b + c - a) / 2 to avoid subtracting from s.
  e.r_a = 2 * e.area / (e.b + e.c - e.a);
  e.r_b = 2 * e.area / (e.c + e.a - e.b);
  e.r_c = 2 * e.area / (e.a + e.b - e.c);
  e.a2 = e.a * e.a;
  e.b2 = e.b * e.b;
  e.c2 = e.c * e.c;
  return e;
}

/// Elements that stay rational for rational sides.
template <Scalar T>
struct SquaredElements {
  T s;
  T area_sq;
  T R_sq;
  T r_sq;
  T r_a_sq, r_b_sq, r_c_sq;
  T a2, b2, c2;
};

template <Scalar T>
SquaredElements<T> derive_squared_elements(const TriangleSides<T>& sides) {
  SquaredElements<T> e{};
  const T sixteen_s2 = sixteen_area_squared(sides);
  e.s = sides.semiperimeter();
  e.area_sq = sixteen_s2 / 16;
  e.R_sq = circumradius_squared(sides);
  e.r_sq = e.area_sq / (e.s * e.s);
  const T sa = e.s - sides.a();
  const T sb = e.s - sides.b();
  const T sc = e.s - sides.c();
  e.r_a_sq = e.area_sq / (sa * sa);
  e.r_b_sq = e.area_sq / (sb * sb);
  e.r_c_sq = e.area_sq / (sc * sc);
  e.a2 = sides.a() * sides.a();
  e.b2 = sides.b() * sides.b();
  e.c2 = sides.c() * sides.c();
  return e;
}

/// S_l = a^l + b^l + c^l. Rationals accept integral l only.
template <Scalar T>
T power_sum(const TriangleSides<T>& sides, const T& l) {
  return pow_of(sides.a(), l) + pow_of(sides.b(), l) + pow_of(sides.c(), l);
}

/// Homogeneous barycentric triple t1 : t2 : t3 of a finite point.
template <Scalar T>
class BaryPoint {
 public:
  BaryPoint(T t1, T t2, T t3) : t_{std::move(t1), std::move(t2), std::move(t3)} {
    for (const auto& v : t_) {
      if (!is_finite_value(v)) {
        throw GeometryError(ErrorKind::PointAtInfinity, "non-finite barycentric coordinate");
      }
    }
    const T magnitude = abs_of(t_[0]) + abs_of(t_[1]) + abs_of(t_[2]);
    if (is_zero_sum(sum(), magnitude)) {
      throw GeometryError(ErrorKind::PointAtInfinity, "barycentric coordinates sum to zero");
    }
  }

  explicit BaryPoint(const std::array<T, 3>& t) : BaryPoint(t[0], t[1], t[2]) {}

  const T& operator[](std::size_t i) const { return t_[i]; }
  const std::array<T, 3>& coords() const { return t_; }

  T sum() const { return t_[0] + t_[1] + t_[2]; }

  /// Coordinates divided by their sum (areal coordinates).
  std::array<T, 3> normalized() const {
    const T total = sum();
    return {t_[0] / total, t_[1] / total, t_[2] / total};
  }

  BaryPoint scaled(const T& lambda) const {
    return BaryPoint(t_[0] * lambda, t_[1] * lambda, t_[2] * lambda);
  }

  /// Same point up to homogeneous scale: all 2x2 minors vanish.
  bool proportional_to(const BaryPoint& other) const {
    const auto& u = other.t_;
    return t_[0] * u[1] == t_[1] * u[0] && t_[1] * u[2] == t_[2] * u[1] &&
           t_[0] * u[2] == t_[2] * u[0];
  }

 private:
  std::array<T, 3> t_;
};

/// y z a^2 + z x b^2 + x y c^2, the quadratic form behind every barycentric
/// distance. For a displacement (x, y, z) summing to zero it equals minus the
/// squared length.
template <Scalar T>
T side_form(const T& x, const T& y, const T& z, const TriangleSides<T>& sides) {
  const auto sq = sides.squares();
  return y * z * sq[0] + z * x * sq[1] + x * y * sq[2];
}

/// MP^2 from the distances MA, MB, MC (Lagrange's relation, cleared of
/// denominators).
template <Scalar T>
T lagrange_point_dist_sq(const BaryPoint<T>& t, const T& ma2, const T& mb2, const T& mc2,
                         const TriangleSides<T>& sides) {
  const T total = t.sum();
  const T weighted = t[0] * ma2 + t[1] * mb2 + t[2] * mc2;
  return (weighted * total - side_form(t[0], t[1], t[2], sides)) / (total * total);
}

/// Power of P with respect to the circumcircle, R^2 - OP^2.
template <Scalar T>
T circum_power(const BaryPoint<T>& t, const TriangleSides<T>& sides) {
  const T total = t.sum();
  return side_form(t[0], t[1], t[2], sides) / (total * total);
}

/// PQ^2 = -(beta gamma a^2 + gamma alpha b^2 + alpha beta c^2) with
/// (alpha, beta, gamma) the difference of the normalized coordinates.
template <Scalar T>
T dist_sq_between(const BaryPoint<T>& p, const BaryPoint<T>& q, const TriangleSides<T>& sides) {
  if (p.proportional_to(q)) return T(0);
  const auto pn = p.normalized();
  const auto qn = q.normalized();
  const T alpha = qn[0] - pn[0];
  const T beta = qn[1] - pn[1];
  const T gamma = qn[2] - pn[2];
  return -side_form(alpha, beta, gamma, sides);
}

/// 2 (P - V).(Q - V) for a common vertex V, from the polarized side form of
/// the two normalized displacements. Equals VP^2 + VQ^2 - PQ^2 but keeps its
/// relative accuracy when VP or VQ is much shorter than PQ.
template <Scalar T>
T twice_dot_at(const BaryPoint<T>& v, const BaryPoint<T>& p, const BaryPoint<T>& q, const TriangleSides<T>& sides) {
  const auto vn = v.normalized();
  const auto pn = p.normalized();
  const auto qn = q.normalized();
  std::array<T, 3> d, e;
  for (int i = 0; i < 3; ++i) {
    d[i] = pn[i] - vn[i];
    e[i] = qn[i] - vn[i];
  }
  const auto sq = sides.squares();
  return -(sq[0] * (d[1] * e[2] + d[2] * e[1]) + sq[1] * (d[2] * e[0] + d[0] * e[2]) +
           sq[2] * (d[0] * e[1] + d[1] * e[0]));
}

/// Lower bound 4 s^2 t1 t2 t3 / t^3 on the circumcircle power of a point with
/// positive coordinates; attained exactly at the incenter.
template <Scalar T>
T bergstrom_bound(const BaryPoint<T>& t, const TriangleSides<T>& sides) {
  if (!(t[0] > 0 && t[1] > 0 && t[2] > 0)) {
    throw GeometryError(ErrorKind::NonPositiveWeights, "Bergstrom bound needs positive weights");
  }
  const T s = sides.semiperimeter();
  const T total = t.sum();
  return 4 * s * s * t[0] * t[1] * t[2] / (total * total * total);
}

/// Circumcenter O = a^2(b^2+c^2-a^2) : b^2(c^2+a^2-b^2) : c^2(a^2+b^2-c^2).
template <Scalar T>
BaryPoint<T> circumcenter_bary(const TriangleSides<T>& sides) {
  const auto [a2, b2, c2] = sides.squares();
  return BaryPoint<T>(a2 * (b2 + c2 - a2), b2 * (c2 + a2 - b2), c2 * (a2 + b2 - c2));
}

/// OP^2 as the barycentric distance from P to O. Equal to
/// R^2 - circum_power(P), but does not cancel when P is close to O.
template <Scalar T>
T circumcenter_dist_sq(const BaryPoint<T>& p, const TriangleSides<T>& sides) {
  return dist_sq_between(p, circumcenter_bary(sides), sides);
}

}  // namespace blundon

#endif  // BLUNDON_KERNEL_HPP
