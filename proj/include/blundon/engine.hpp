#ifndef BLUNDON_ENGINE_HPP
#define BLUNDON_ENGINE_HPP

// Angle POQ at the circumcenter from barycentric coordinates, the
// Blundon-type bounds it generates, and the closed-form specializations for
// the classical (I, N), dual (I_v, N_v) and Cevian-rank point pairs.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string_view>

#include "blundon/centers.hpp"
#include "blundon/error.hpp"
#include "blundon/kernel.hpp"
#include "blundon/scalar.hpp"

namespace blundon {

enum class AngleClass { Generic, CollinearSameSide, CollinearOppositeSide, Undefined };

inline std::string_view to_string(AngleClass c) {
  switch (c) {
    case AngleClass::Generic: return "generic";
    case AngleClass::CollinearSameSide: return "collinear_same_side";
    case AngleClass::CollinearOppositeSide: return "collinear_opposite_side";
    case AngleClass::Undefined: return "undefined";
  }
  return "unknown";
}

struct AngleTolerances {
  /// OP * OQ below this multiple of R^2 means one point sits on O.
  double undefined = 1e-12;
  /// 1 - |cos| below this is classified as collinear.
  double collinear = 1e-9;
};

/// lower <= middle <= upper, with upper = -lower = 2 OP OQ and
/// middle = OP^2 + OQ^2 - PQ^2 = 2 OP OQ cos(POQ).
struct BoundTriple {
  double lower = 0;
  double middle = 0;
  double upper = 0;

  /// Largest violation of the two inequalities (<= 0 when both hold).
  double violation() const { return std::max(lower - middle, middle - upper); }
};

struct AngleReport {
  double cos_value = std::numeric_limits<double>::quiet_NaN();
  double op_sq = 0;
  double oq_sq = 0;
  double pq_sq = 0;
  BoundTriple bounds;
  AngleClass classification = AngleClass::Undefined;

  bool defined() const { return classification != AngleClass::Undefined; }
};

/// The three squared distances of triangle POQ, exact for rational scalars.
template <Scalar T>
struct SquaredAngleTerms {
  T op_sq;
  T oq_sq;
  T pq_sq;
  T R_sq;
  /// OP^2 + OQ^2 - PQ^2, evaluated as 2 OP.OQ.
  T middle;
};

template <Scalar T>
SquaredAngleTerms<T> angle_terms(const BaryPoint<T>& p, const BaryPoint<T>& q,
                                 const TriangleSides<T>& sides) {
  return {circumcenter_dist_sq(p, sides), circumcenter_dist_sq(q, sides), dist_sq_between(p, q, sides),
          circumradius_squared(sides), twice_dot_at(circumcenter_bary(sides), p, q, sides)};
}

template <Scalar T>
AngleReport make_angle_report(const SquaredAngleTerms<T>& terms, const AngleTolerances& tol = {}) {
  AngleReport report;
  report.op_sq = to_double(terms.op_sq);
  report.oq_sq = to_double(terms.oq_sq);
  report.pq_sq = to_double(terms.pq_sq);
  report.bounds.middle = to_double(terms.middle);
  const double R_sq = to_double(terms.R_sq);
  const double product = std::max(0.0, report.op_sq) * std::max(0.0, report.oq_sq);
  report.bounds.upper = 2 * std::sqrt(product);
  report.bounds.lower = -report.bounds.upper;
  const double threshold = tol.undefined * R_sq;
  if (product <= threshold * threshold) {
    report.classification = AngleClass::Undefined;
    return report;
  }
  report.cos_value = report.bounds.middle / report.bounds.upper;
  if (report.cos_value >= 1 - tol.collinear) {
    report.classification = AngleClass::CollinearSameSide;
  } else if (report.cos_value <= -1 + tol.collinear) {
    report.classification = AngleClass::CollinearOppositeSide;
  } else {
    report.classification = AngleClass::Generic;
  }
  return report;
}

/// cos of the angle POQ at the circumcenter, (OP^2 + OQ^2 - PQ^2) / (2 OP OQ).
/// The numerator is taken from the dot product so it does not cancel when
/// one of the points is close to O. A point on O is not an error; the
/// report is classified Undefined with a NaN cosine.
template <Scalar T>
AngleReport cos_angle_at_O(const BaryPoint<T>& p, const BaryPoint<T>& q, const TriangleSides<T>& sides,
                           const AngleTolerances& tol = {}) {
  return make_angle_report(angle_terms(p, q, sides), tol);
}

template <Scalar T>
BoundTriple blundon_bounds(const BaryPoint<T>& p, const BaryPoint<T>& q, const TriangleSides<T>& sides) {
  return cos_angle_at_O(p, q, sides).bounds;
}

/// The middle member of the bound chain written term by term:
/// -PQ^2 + 2R^2 - (R^2 - OP^2) - (R^2 - OQ^2).
template <Scalar T>
T bound_middle_expanded(const BaryPoint<T>& p, const BaryPoint<T>& q, const TriangleSides<T>& sides) {
  return -dist_sq_between(p, q, sides) + 2 * circumradius_squared(sides) - circum_power(p, sides) -
         circum_power(q, sides);
}

// ---------------------------------------------------------------------------
// Closed forms in R, r, s, exradii.

namespace closed_form {

/// cos(ION) = (2R^2 + 10Rr - r^2 - s^2) / (2 (R - 2r) sqrt(R^2 - 2Rr)).
template <FloatingScalar T>
T classical_cos_ION(const TriangleElements<T>& e, T equilateral_tolerance = T(1e-12)) {
  const T gap = e.R - 2 * e.r;
  if (gap <= equilateral_tolerance * e.R) {
    throw GeometryError(ErrorKind::EquilateralDegenerate, "R - 2r vanishes; I = N = O");
  }
  return (2 * e.R * e.R + 10 * e.R * e.r - e.r * e.r - e.s * e.s) /
         (2 * gap * std::sqrt(e.R * e.R - 2 * e.R * e.r));
}

/// 2(R - 2r) sqrt(R^2 - 2Rr) - |s^2 - 2R^2 - 10Rr + r^2|; nonnegative for
/// every triangle.
template <FloatingScalar T>
T fundamental_residual(const TriangleElements<T>& e) {
  const T R = e.R;
  const T r = e.r;
  const T half_width = 2 * (R - 2 * r) * std::sqrt(std::max(T(0), R * R - 2 * R * r));
  return half_width - std::abs(e.s * e.s - 2 * R * R - 10 * R * r + r * r);
}

/// cos(I_v O N_v) = (R^2 - 3R r_v - r_v^2 - (a^2+b^2+c^2)/4)
///                  / ((R + 2 r_v) sqrt(R^2 + 2R r_v)).
template <FloatingScalar T>
T dual_cos(Vertex v, const TriangleElements<T>& e) {
  const T R = e.R;
  const T rv = e.exradius(static_cast<int>(v));
  return (R * R - 3 * R * rv - rv * rv - e.sum_of_squares() / 4) /
         ((R + 2 * rv) * std::sqrt(R * R + 2 * R * rv));
}

/// Right-hand side of the dual Blundon inequality
/// (a^2+b^2+c^2)/4 <= R^2 - 3R r_v - r_v^2 + (R + 2r_v) sqrt(R^2 + 2R r_v).
template <FloatingScalar T>
T dual_upper_bound(Vertex v, const TriangleElements<T>& e) {
  const T R = e.R;
  const T rv = e.exradius(static_cast<int>(v));
  return R * R - 3 * R * rv - rv * rv + (R + 2 * rv) * std::sqrt(R * R + 2 * R * rv);
}

/// LHS - RHS of -a^2/(r_b r_c) + b^2/(r r_b) + c^2/(r r_c) = 4R/r_a + 4,
/// relabeled cyclically for vertices B and C.
template <FloatingScalar T>
T exradii_identity_residual(const TriangleElements<T>& e, Vertex v = Vertex::A) {
  const int i = static_cast<int>(v);
  const std::array<T, 3> sq{e.a2, e.b2, e.c2};
  const std::array<T, 3> ex{e.r_a, e.r_b, e.r_c};
  const T own_sq = sq[i];
  const T next_sq = sq[(i + 1) % 3];
  const T prev_sq = sq[(i + 2) % 3];
  const T own_ex = ex[i];
  const T next_ex = ex[(i + 1) % 3];
  const T prev_ex = ex[(i + 2) % 3];
  const T lhs = -own_sq / (next_ex * prev_ex) + next_sq / (e.r * next_ex) + prev_sq / (e.r * prev_ex);
  return lhs - (4 * e.R / own_ex + 4);
}

/// Cross term beta gamma a^2 + ... for the pair (I, N): -s^2 - 5r^2 + 16Rr.
template <FloatingScalar T>
T incenter_nagel_cross(const TriangleElements<T>& e) {
  return -e.s * e.s - 5 * e.r * e.r + 16 * e.R * e.r;
}

/// R^2 - OI^2 = 2Rr.
template <FloatingScalar T>
T incenter_power(const TriangleElements<T>& e) {
  return 2 * e.R * e.r;
}

/// R^2 - ON^2 = 4Rr - 4r^2.
template <FloatingScalar T>
T nagel_power(const TriangleElements<T>& e) {
  return 4 * e.R * e.r - 4 * e.r * e.r;
}

/// R^2 - OI_v^2 = -2R r_v.
template <FloatingScalar T>
T excenter_power(Vertex v, const TriangleElements<T>& e) {
  return -2 * e.R * e.exradius(static_cast<int>(v));
}

/// R^2 - ON_v^2 = -4R r_v - 4 r_v^2.
template <FloatingScalar T>
T adjoint_nagel_power(Vertex v, const TriangleElements<T>& e) {
  const T rv = e.exradius(static_cast<int>(v));
  return -4 * e.R * rv - 4 * rv * rv;
}

/// Cross term for the pair (I_v, N_v): -12R r_v - 6 r_v^2 - (a^2+b^2+c^2)/2.
template <FloatingScalar T>
T excenter_adjoint_cross(Vertex v, const TriangleElements<T>& e) {
  const T rv = e.exradius(static_cast<int>(v));
  return -12 * e.R * rv - 6 * rv * rv - e.sum_of_squares() / 2;
}

/// cos(GOI) = (6R^2 - s^2 - r^2 + 2Rr)
///            / (2 sqrt(9R^2 - 2s^2 + 2r^2 + 8Rr) sqrt(R^2 - 2Rr)).
template <FloatingScalar T>
T centroid_incenter_cos(const TriangleElements<T>& e) {
  const T R = e.R, r = e.r, s = e.s;
  const T og9 = 9 * R * R - 2 * s * s + 2 * r * r + 8 * R * r;
  const T oi = R * R - 2 * R * r;
  if (!(og9 > 0 && oi > 0)) {
    throw GeometryError(ErrorKind::UndefinedAngle, "G or I coincides with O");
  }
  return (6 * R * R - s * s - r * r + 2 * R * r) / (2 * std::sqrt(og9) * std::sqrt(oi));
}

/// cos(IOL) = (R S_2 + r S_2 - 4 r s^2) / (sqrt(R^2 - 2Rr) sqrt(S_2^2 - 48 r^2 s^2)),
/// S_2 = a^2 + b^2 + c^2. A variant with an extra factor 2 in the
/// denominator is kept as alternate::incenter_lemoine_cos.
template <FloatingScalar T>
T incenter_lemoine_cos(const TriangleElements<T>& e) {
  const T R = e.R, r = e.r, s = e.s;
  const T S2 = e.sum_of_squares();
  const T oi = R * R - 2 * R * r;
  const T ol = S2 * S2 - 48 * r * r * s * s;
  if (!(oi > 0 && ol > 0)) {
    throw GeometryError(ErrorKind::UndefinedAngle, "I or L coincides with O");
  }
  return (R * S2 + r * S2 - 4 * r * s * s) / (std::sqrt(oi) * std::sqrt(ol));
}

/// cos of the angle at O between the Cevian points of ranks k1 and k2,
/// written with power sums S_l = a^l + b^l + c^l:
///   R^2 - OI_k^2 = (abc)^k S_{2-k} / S_k^2.
template <FloatingScalar T>
T cevian_rank_cos(T k1, T k2, const TriangleSides<T>& sides, T undefined_tolerance = T(1e-12)) {
  const T a = sides.a(), b = sides.b(), c = sides.c();
  const T R_sq = circumradius_squared(sides);
  const T abc = a * b * c;
  auto power_term = [&](T k) {
    const T sk = power_sum(sides, k);
    return std::pow(abc, k) * power_sum(sides, T(2 - k)) / (sk * sk);
  };
  const T term1 = power_term(k1);
  const T term2 = power_term(k2);
  const T op1 = R_sq - term1;
  const T op2 = R_sq - term2;
  const T threshold = undefined_tolerance * R_sq;
  if (!(op1 > 0 && op2 > 0) || op1 * op2 <= threshold * threshold) {
    throw GeometryError(ErrorKind::UndefinedAngle, "a Cevian rank point coincides with O");
  }
  const T s1 = power_sum(sides, k1);
  const T s2 = power_sum(sides, k2);
  auto diff = [&](T side) { return std::pow(side, k1) / s1 - std::pow(side, k2) / s2; };
  const T da = diff(a), db = diff(b), dc = diff(c);
  const T cross = db * dc * a * a + dc * da * b * b + da * db * c * c;
  return (2 * R_sq - term1 - term2 + cross) / (2 * std::sqrt(op1 * op2));
}

}  // namespace closed_form

// ---------------------------------------------------------------------------
// Angle at the middle point of three barycentric points.

struct TripleReport {
  double cos_value = 0;
  double d12_sq = 0;
  double d23_sq = 0;
  double d31_sq = 0;
  /// -2 I1I2 I2I3 <= I1I2^2 + I2I3^2 - I3I1^2 <= 2 I1I2 I2I3.
  BoundTriple bounds;
};

/// cos of the angle I1 I2 I3 (vertex at the second point) from the three
/// barycentric squared distances. Throws DegenerateVertexAngle when two of
/// the points coincide.
template <Scalar T>
TripleReport triple_angle(const BaryPoint<T>& p1, const BaryPoint<T>& p2, const BaryPoint<T>& p3,
                          const TriangleSides<T>& sides, double coincidence_tolerance = 1e-24) {
  const T d12 = dist_sq_between(p1, p2, sides);
  const T d23 = dist_sq_between(p2, p3, sides);
  const T d31 = dist_sq_between(p3, p1, sides);
  const double R_sq = to_double(circumradius_squared(sides));
  TripleReport report;
  report.d12_sq = to_double(d12);
  report.d23_sq = to_double(d23);
  report.d31_sq = to_double(d31);
  const double floor = coincidence_tolerance * R_sq;
  if (report.d12_sq <= floor || report.d23_sq <= floor || report.d31_sq <= floor) {
    throw GeometryError(ErrorKind::DegenerateVertexAngle, "two of the three points coincide");
  }
  report.bounds.middle = to_double(twice_dot_at(p2, p1, p3, sides));
  report.bounds.upper = 2 * std::sqrt(report.d12_sq * report.d23_sq);
  report.bounds.lower = -report.bounds.upper;
  report.cos_value = report.bounds.middle / report.bounds.upper;
  return report;
}

template <Scalar T>
double triple_cevian_cos(const BaryPoint<T>& p1, const BaryPoint<T>& p2, const BaryPoint<T>& p3,
                         const TriangleSides<T>& sides) {
  return triple_angle(p1, p2, p3, sides).cos_value;
}

// ---------------------------------------------------------------------------
// Variant closed forms that disagree with the general path, kept only to
// measure by how much.

namespace alternate {

/// (6R^2 S_2 - S_2^2 + 4 S_4) / (2 sqrt(9R^2 - S_2) sqrt(R^2 - S_2^2 - 48 (Rrs)^2))
/// with S_4 = S_2^2 - 2[(s^2 + r^2 + 4Rr)^2 - 16Rrs^2]. The second radicand
/// mixes length^2 and length^4 terms; returns NaN when a radicand is negative.
template <FloatingScalar T>
T centroid_lemoine_cos(const TriangleElements<T>& e) {
  const T R = e.R, r = e.r, s = e.s;
  const T S2 = e.sum_of_squares();
  const T q = s * s + r * r + 4 * R * r;
  const T S4 = S2 * S2 - 2 * (q * q - 16 * R * r * s * s);
  const T left = 9 * R * R - S2;
  const T right = R * R - S2 * S2 - 48 * (R * r * s) * (R * r * s);
  if (!(left > 0 && right > 0)) return std::numeric_limits<T>::quiet_NaN();
  return (6 * R * R * S2 - S2 * S2 + 4 * S4) / (2 * std::sqrt(left) * std::sqrt(right));
}

/// (R S_2 + r S_2 - 4 r s^2) / (2 sqrt(R^2 - 2Rr) sqrt(S_2^2 - 48 r^2 s^2)):
/// half of the true cosine.
template <FloatingScalar T>
T incenter_lemoine_cos(const TriangleElements<T>& e) {
  return closed_form::incenter_lemoine_cos(e) / 2;
}

/// A three-point expansion whose c^2 term has the opposite sign
/// to the Law-of-Cosines composition:
///   [-a^2(b12 g12 + b23 g23 - b31 g31) - b^2(g12 a12 + g23 a23 - g31 a31)
///    + c^2(a12 b12 + a23 b23 - a31 b31)] / (2 I1I2 I2I3)
/// with (a_ij, b_ij, g_ij) = normalized(I_j) - normalized(I_i).
template <Scalar T>
double triple_cos(const BaryPoint<T>& p1, const BaryPoint<T>& p2, const BaryPoint<T>& p3,
                  const TriangleSides<T>& sides) {
  const std::array<std::array<T, 3>, 3> n{p1.normalized(), p2.normalized(), p3.normalized()};
  auto delta = [&](int i, int j) {
    return std::array<T, 3>{n[j][0] - n[i][0], n[j][1] - n[i][1], n[j][2] - n[i][2]};
  };
  const auto d12 = delta(0, 1);
  const auto d23 = delta(1, 2);
  const auto d31 = delta(2, 0);
  const auto [a2, b2, c2] = sides.squares();
  const T numerator = -a2 * (d12[1] * d12[2] + d23[1] * d23[2] - d31[1] * d31[2]) -
                      b2 * (d12[2] * d12[0] + d23[2] * d23[0] - d31[2] * d31[0]) +
                      c2 * (d12[0] * d12[1] + d23[0] * d23[1] - d31[0] * d31[1]);
  const T len12 = -side_form(d12[0], d12[1], d12[2], sides);
  const T len23 = -side_form(d23[0], d23[1], d23[2], sides);
  return to_double(numerator) / (2 * std::sqrt(to_double(len12)) * std::sqrt(to_double(len23)));
}

}  // namespace alternate

}  // namespace blundon

#endif  // BLUNDON_ENGINE_HPP
