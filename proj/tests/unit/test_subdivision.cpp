#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "vfunc/error.hpp"
#include "vfunc/experiments.hpp"
#include "vfunc/functional2d.hpp"
#include "vfunc/subdivision.hpp"

using namespace vfunc;

namespace {

Triangulation2 single(Point2 a, Point2 b, Point2 c) { return delaunay(PointSet2{{a, b, c}}); }

}  // namespace

TEST(Subdivide, Combinatorics2D) {
  const auto sd = barycentric_subdivide(single({0, 0}, {1, 0}, {0.3, 0.8}));
  EXPECT_EQ(sd.vertices.size(), 7u);
  EXPECT_EQ(sd.cells.size(), 6u);
  for (const auto& v : sd.vertices) {
    if (v.simplex.size() == 1) EXPECT_EQ(v.image, v.barycenter);
    if (v.simplex.size() == 2) {
      EXPECT_NEAR(v.image.x, v.barycenter.x, 1e-15);
      EXPECT_NEAR(v.image.y, v.barycenter.y, 1e-15);
    }
  }
  for (const auto& c : sd.cells) EXPECT_GT(signed_area(sd.source_cell(c)), 0.0);
}

TEST(Subdivide, Combinatorics3D) {
  const TetComplex3 t({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0.2, 0.3, 1}}, {{0, 1, 2, 3}});
  const auto sd = barycentric_subdivide(t);
  EXPECT_EQ(sd.vertices.size(), 15u);
  EXPECT_EQ(sd.cells.size(), 24u);
  double volume = 0.0;
  for (const auto& c : sd.cells) {
    const double v = signed_volume(sd.source_cell(c));
    EXPECT_GT(v, 0.0);
    volume += v;
  }
  EXPECT_NEAR(volume, std::abs(signed_volume(t.tetrahedron(0))), 1e-14);
}

TEST(Subdivide, HeightIsPowerOfCircumcenter) {
  const auto sd = barycentric_subdivide(single({0, 0}, {2, 0.1}, {0.7, 1.5}));
  for (const auto& v : sd.vertices) {
    if (v.simplex.size() == 3) {
      const Point2 c = oracle::circumcenter({0, 0}, {2, 0.1}, {0.7, 1.5});
      EXPECT_NEAR(v.height, norm2(c) - oracle::d2(c, {0, 0}), 1e-12);
    }
    if (v.simplex.size() == 1) EXPECT_NEAR(v.height, norm2(v.image), 1e-15);
  }
}

TEST(VfSdCell, RightTriangleHasSqueezedCells) {
  const auto sd = barycentric_subdivide(single({0, 0}, {1, 0}, {0, 1}));
  int squeezed = 0;
  for (const auto& c : sd.cells) {
    if (image_orientation(c, sd) == 0) {
      ++squeezed;
      EXPECT_NEAR(vf_sd_cell(c, sd), 0.0, 1e-15);
    }
  }
  EXPECT_EQ(squeezed, 2);
}

TEST(VfSdCell, AcuteSumsToClosedForm) {
  const Triangle2 t{{0, 0}, {3, 0.2}, {1.4, 2.5}};
  const auto sd = barycentric_subdivide(single(t.a, t.b, t.c));
  double sum = 0.0;
  for (const auto& c : sd.cells) {
    EXPECT_EQ(image_orientation(c, sd), 1);
    sum += vf_sd_cell(c, sd);
  }
  EXPECT_NEAR(sum, vf_triangle(t), 1e-10);
}

TEST(VfSdCell, ObtuseFlipsTheTwoCellsAtTheLongEdge) {
  const Triangle2 t{{0, 0}, {4, 0}, {1.5, 0.6}};
  const auto sd = barycentric_subdivide(single(t.a, t.b, t.c));
  int reversed = 0;
  for (const auto& c : sd.cells) {
    if (image_orientation(c, sd) >= 0) continue;
    ++reversed;
    // the flag's edge is the long edge {0, 1}
    bool long_edge = false;
    for (int v : c.vertices) long_edge = long_edge || sd.vertices[v].simplex == std::vector<int>{0, 1};
    EXPECT_TRUE(long_edge);
  }
  EXPECT_EQ(reversed, 2);
  EXPECT_NEAR(vf_via_sd(sd), vf_triangle(t), 1e-10);
}

TEST(VfViaSd, MatchesClosedFormOnEnumeratedTriangulations) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (const auto& t : enumerate_triangulations(random_point_set(7, seed))) {
      const double cf = vf_triangulation(t).total;
      EXPECT_NEAR(vf_via_sd(t), cf, 1e-9 * std::max(1.0, std::abs(cf)));
    }
  }
  const auto pair = validate_topological_configuration(topological_golden_points());
  EXPECT_NEAR(vf_via_sd(pair.folded), vf_triangulation(pair.folded).total, 1e-9);
}

TEST(Vf3, OctahedronDiagonals) {
  const auto p = octahedron_points();
  EXPECT_NEAR(vf3(tets_around_diagonal(p, octa::B, octa::E)), 3413.75, 0.05);
  EXPECT_NEAR(vf3(tets_around_diagonal(p, octa::A, octa::C)), 3432.96, 0.05);
}

TEST(Vf3, MatchesMonteCarloOfSdField) {
  const Tetrahedron3 tet = fold_tetrahedron();
  const TetComplex3 t({tet.a, tet.b, tet.c, tet.d}, {{0, 1, 2, 3}});
  const auto sd = barycentric_subdivide(t);
  Box3 box{{1e9, 1e9, 1e9}, {-1e9, -1e9, -1e9}};
  for (const auto& v : sd.vertices) {
    box.lo = {std::min(box.lo.x, v.image.x), std::min(box.lo.y, v.image.y), std::min(box.lo.z, v.image.z)};
    box.hi = {std::max(box.hi.x, v.image.x), std::max(box.hi.y, v.image.y), std::max(box.hi.z, v.image.z)};
  }
  const McEstimate mc = mc_integrate(box, [&](Point3 x) { return sd_field(sd, x); }, 400'000, kDefaultSeed);
  EXPECT_LE(std::abs(mc.value - vf3(sd)), 3.0 * mc.std_error);
}

TEST(Census, RegularTetrahedronPreservesAll) {
  const TetComplex3 t({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}, {{0, 1, 2, 3}});
  const OrientationCensus c = orientation_census(barycentric_subdivide(t));
  EXPECT_EQ(c.preserved, 24);
  EXPECT_EQ(c.reversed, 0);
}

TEST(Census, DegenerateTetrahedronRejected) {
  try {
    TetComplex3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, {{0, 1, 2, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateSimplex);
  }
}

TEST(InteriorCancellation, SquarePlusCentre) {
  const PointSet2 ps{{{0, 0}, {1, 0.02}, {1.01, 1}, {-0.03, 0.98}, {0.51, 0.49}}};
  const Triangulation2 d = delaunay(ps);
  const CancellationCheck c = interior_cancellation_check(d, 4);
  EXPECT_NEAR(c.lhs, c.rhs, 1e-9);
  for (int s : c.cell_signs) EXPECT_EQ(s, 1);
  EXPECT_THROW(interior_cancellation_check(d, 0), Error);
}

TEST(InteriorCancellation, ObtuseOppositeAngle) {
  // Interior vertex 0 with a flat neighbour triangle whose angle at the
  // outer vertex is obtuse.
  const PointSet2 ps{{{0, 0}, {2, -0.3}, {2.2, 0.5}, {-0.2, 2}, {-2, 0.2}, {-0.4, -2}, {1.0, -1.4}}};
  const Triangulation2 d = delaunay(ps);
  const CancellationCheck c = interior_cancellation_check(d, 0);
  EXPECT_NEAR(c.lhs, c.rhs, 1e-9 * std::max(1.0, std::abs(c.lhs)));
  int negative = 0;
  for (int s : c.cell_signs) negative += s < 0;
  EXPECT_GE(negative, 1);
}

TEST(InteriorCancellation, VoronoiPolygonMatchesBruteForce) {
  const PointSet2 ps = random_point_set(20, 77);
  const Box2 clip{{-1, -1}, {2, 2}};
  const auto poly = voronoi_polygon(ps.points, 3, clip);
  const auto in_poly = [&](Point2 x) {
    for (std::size_t i = 0; i < poly.size(); ++i)
      if (oracle::area2(poly[i], poly[(i + 1) % poly.size()], x) < 0) return false;
    return true;
  };
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 2);
  for (int i = 0; i < 5000; ++i) {
    const Point2 x{u(rng), u(rng)};
    int nearest = 0;
    for (int k = 1; k < static_cast<int>(ps.size()); ++k)
      if (oracle::d2(x, ps.points[k]) < oracle::d2(x, ps.points[nearest])) nearest = k;
    EXPECT_EQ(in_poly(x), nearest == 3);
  }
}

TEST(CellDecomposition, AcuteHullHasNoOutsideContribution) {
  PointSet2 ps;
  for (int i = 0; i < 6; ++i) ps.points.push_back({std::cos(M_PI * i / 3 + 0.01 * i), std::sin(M_PI * i / 3)});
  ps.points.push_back({0.03, -0.02});
  const Triangulation2 d = delaunay(ps);
  ASSERT_TRUE(hull_opposite_angles_acute(d));
  const VoronoiCellField g(ps.points);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 5000; ++i) {
    const Point2 x{u(rng), u(rng)};
    if (norm2(x) > 1.01) EXPECT_EQ(g(x), 0.0);
  }
}

TEST(CellDecomposition, ObtuseHullEdgeHasNegativeOutsideRegion) {
  const PointSet2 ps{{{0, 0}, {4, 0}, {2, 0.5}, {2, 3}}};
  const Triangulation2 d = delaunay(ps);
  ASSERT_FALSE(hull_opposite_angles_acute(d));
  const VoronoiCellField g(ps.points);
  EXPECT_LT(g({2, -0.1}), 0.0);
  EXPECT_NEAR(g({2, -0.1}), g_field(d, {2, -0.1}), 1e-12);
  const CellDecompositionCheck c = cell_decomposition_check(d, 1'000'000, kDefaultSeed);
  EXPECT_EQ(c.boundary_max_abs, 0.0);
  EXPECT_LE(std::abs(c.mc.value - c.closed_form), 3.0 * c.mc.std_error);
}
