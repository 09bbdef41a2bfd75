#include <gtest/gtest.h>

#include "blundon/centers.hpp"
#include "blundon/oracle.hpp"

using namespace blundon;

namespace {

const TriangleSides<double> kRight{3, 4, 5};

std::array<double, 3> coords(std::string_view spec, const TriangleSides<double>& sides = kRight) {
  return resolve(parse_center_spec<double>(spec), sides).coords();
}

void expect_proportional(const std::array<double, 3>& t, const std::array<double, 3>& u) {
  EXPECT_NEAR(t[0] * u[1], t[1] * u[0], 1e-12 * (std::abs(t[0] * u[1]) + 1));
  EXPECT_NEAR(t[1] * u[2], t[2] * u[1], 1e-12 * (std::abs(t[1] * u[2]) + 1));
}

}  // namespace

TEST(CenterSpec, ParsesGrammar) {
  EXPECT_TRUE(std::holds_alternative<center::Incenter>(parse_center_spec<double>("InCenter")));
  EXPECT_TRUE(std::holds_alternative<center::Lemoine>(parse_center_spec<double>(" lemoine ")));
  const auto ex = parse_center_spec<double>("EXCENTER:b");
  ASSERT_TRUE(std::holds_alternative<center::Excenter>(ex));
  EXPECT_EQ(std::get<center::Excenter>(ex).vertex, Vertex::B);
  const auto rank = std::get<center::CevianRank<double>>(parse_center_spec<double>("cevian:1.5,-2,0"));
  EXPECT_EQ(rank.k, 1.5);
  EXPECT_EQ(rank.l, -2);
  const auto raw = std::get<center::Raw<Rational>>(parse_center_spec<Rational>("raw:0.1,2,-3"));
  EXPECT_EQ(raw.t1, Rational(1, 10));
}

TEST(CenterSpec, RejectsMalformedSpecs) {
  for (const char* bad : {"", "orthocenter", "incenter:A", "excenter", "excenter:D", "cevian:1,2",
                          "raw:1,2,x", "cevian:1,2,3,4"}) {
    try {
      parse_center_spec<double>(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const GeometryError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidCenterSpec) << bad;
    }
  }
}

TEST(CenterSpec, ToStringRoundTrips) {
  for (const char* spec : {"incenter", "centroid", "nagel", "lemoine", "excenter:C", "adjnagel:A",
                           "cevian:1,0.5,-2", "raw:1,0,-3"}) {
    const auto parsed = parse_center_spec<double>(spec);
    EXPECT_EQ(to_string(parse_center_spec<double>(to_string(parsed))), to_string(parsed));
  }
}

TEST(Resolve, NamedCenters) {
  EXPECT_EQ(coords("incenter"), (std::array<double, 3>{3, 4, 5}));
  EXPECT_EQ(coords("centroid"), (std::array<double, 3>{1, 1, 1}));
  EXPECT_EQ(coords("nagel"), (std::array<double, 3>{3, 2, 1}));
  EXPECT_EQ(coords("lemoine"), (std::array<double, 3>{9, 16, 25}));
  EXPECT_EQ(coords("excenter:A"), (std::array<double, 3>{-3, 4, 5}));
  EXPECT_EQ(coords("excenter:B"), (std::array<double, 3>{3, -4, 5}));
  EXPECT_EQ(coords("excenter:C"), (std::array<double, 3>{3, 4, -5}));
  EXPECT_EQ(coords("adjnagel:A"), (std::array<double, 3>{6, -1, -2}));
  EXPECT_EQ(coords("adjnagel:B"), (std::array<double, 3>{-1, 6, -3}));
  EXPECT_EQ(coords("adjnagel:C"), (std::array<double, 3>{-2, -3, 6}));
  EXPECT_EQ(coords("raw:1,0,-3"), (std::array<double, 3>{1, 0, -3}));
}

TEST(Resolve, CoordinateSums) {
  const double s = 6;
  EXPECT_EQ(resolve(parse_center_spec<double>("adjnagel:A"), kRight).sum(), s - 3);
  EXPECT_EQ(resolve(parse_center_spec<double>("adjnagel:B"), kRight).sum(), s - 4);
  EXPECT_EQ(resolve(parse_center_spec<double>("excenter:C"), kRight).sum(), 2 * (s - 5));
}

TEST(Resolve, CevianRanksReproduceNamedCenters) {
  const TriangleSides<double> t(2, 3, 4);
  expect_proportional(coords("cevian:0,0,0", t), coords("centroid", t));
  expect_proportional(coords("cevian:1,0,0", t), coords("incenter", t));
  expect_proportional(coords("cevian:2,0,0", t), coords("lemoine", t));
  expect_proportional(coords("cevian:0,1,0", t), coords("nagel", t));
}

TEST(Resolve, ExactModeRejectsNonIntegralRanks) {
  const TriangleSides<Rational> t(Rational(3), Rational(4), Rational(5));
  EXPECT_NO_THROW(resolve(parse_center_spec<Rational>("cevian:2,1,-1"), t));
  try {
    resolve(parse_center_spec<Rational>("cevian:0.5,0,0"), t);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InexactValue);
  }
}

TEST(Resolve, ExcentersAreEquidistantFromSidelines) {
  const TriangleSides<double> t(2, 3, 4);
  const auto pl = oracle::place(t);
  const auto e = derive_elements(t);
  const std::array<const char*, 3> specs{"excenter:A", "excenter:B", "excenter:C"};
  for (int v = 0; v < 3; ++v) {
    const auto p = oracle::bary_to_cartesian(resolve(parse_center_spec<double>(specs[v]), t), pl);
    const double rv = e.exradius(v);
    EXPECT_NEAR(oracle::distance_to_line(p, pl.B, pl.C), rv, 1e-12);
    EXPECT_NEAR(oracle::distance_to_line(p, pl.C, pl.A), rv, 1e-12);
    EXPECT_NEAR(oracle::distance_to_line(p, pl.A, pl.B), rv, 1e-12);
  }
}

TEST(Resolve, AdjointNagelPointsFollowRelabeling) {
  // adjnagel:B of (a, b, c) is adjnagel:A of the relabeled triangle (b, c, a).
  const TriangleSides<double> t(2, 3, 4);
  const auto pl = oracle::place(t);
  const auto rotated = t.rotated();
  const oracle::Placement relabeled{pl.B, pl.C, pl.A};
  const auto x = oracle::bary_to_cartesian(resolve(parse_center_spec<double>("adjnagel:B"), t), pl);
  const auto y =
      oracle::bary_to_cartesian(resolve(parse_center_spec<double>("adjnagel:A"), rotated), relabeled);
  EXPECT_NEAR(x.x, y.x, 1e-12);
  EXPECT_NEAR(x.y, y.y, 1e-12);
}

TEST(CevianTriangle, BisectorFoot) {
  const auto feet = cevian_triangle(BaryPoint<double>(3, 4, 5));
  EXPECT_EQ(feet[0].coords(), (std::array<double, 3>{0, 4, 5}));
  const auto pl = oracle::place(kRight);
  const auto d = oracle::bary_to_cartesian(feet[0], pl);
  // BD / DC = c / b.
  EXPECT_NEAR(std::sqrt(oracle::distance_sq(pl.B, d)) / std::sqrt(oracle::distance_sq(d, pl.C)), 5.0 / 4.0,
              1e-14);
}

TEST(CevianTriangle, VertexHasNoFootOppositeIt) {
  try {
    cevian_triangle(BaryPoint<double>(1, 0, 0));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PointAtInfinity);
  }
}
