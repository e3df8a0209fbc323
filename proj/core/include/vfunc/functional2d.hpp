#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "vfunc/geom.hpp"
#include "vfunc/tri2d.hpp"

namespace vfunc {

enum class FunctionalKind { Voronoi, Rajan, Radius };

std::string_view to_string(FunctionalKind kind);

/// Total of a triangulation functional together with its per-triangle terms.
struct FunctionalReport {
  FunctionalKind kind = FunctionalKind::Voronoi;
  double alpha = 0.0;  // only meaningful for FunctionalKind::Radius
  double total = 0.0;
  std::vector<double> per_simplex;  // indexed like Triangulation2::triangles()
};

/// (area / 12) (a^2 + b^2 + c^2 - 4 R^2). Negative for sufficiently obtuse
/// triangles; independent of the vertex order. Throws DegenerateSimplex.
double vf_triangle(const Triangle2& t);

/// (area / 12) (a^2 + b^2 + c^2): volume between paraboloid and lifted triangle.
double rajan_triangle(const Triangle2& t);

/// R^alpha * area.
double radius_triangle(const Triangle2& t, double alpha);

/// Product of the three edge lengths.
double edge_length_product(const Triangle2& t);

FunctionalReport vf_triangulation(const Triangulation2& t);
FunctionalReport rajan_functional(const Triangulation2& t);
FunctionalReport radius_functional(const Triangulation2& t, double alpha);

/// Integral of |x - apex|^2 over the triangle (apex, mid, cc), signed by its
/// orientation. Degenerate input gives 0.
double mu_term(Point2 apex, Point2 mid, Point2 cc);

/// One of the six terms splitting a triangle at its circumcenter.
struct MuTerm {
  int apex = 0;     // vertex index within the triangle
  int other = 0;    // the edge is apex-other
  int sign = 0;     // +1 when the image piece keeps the orientation of its flag
  double value = 0; // signed contribution to vf_triangle
};

/// The six circumcenter pieces; their values sum to vf_triangle(t).
std::array<MuTerm, 6> mu_decomposition(const Triangle2& t);

/// |x - N|^2 - |x - NV|^2 with the NV term zero on the closed triangle.
double g_triangle(const Triangle2& t, Point2 p);

/// Sum of sign * g_triangle over the triangles of t.
double g_field(const Triangulation2& t, Point2 p);

/// g_D(p) - g_K(p) for the two triangulations of a strictly convex
/// quadrangle, D being the Delaunay one. Vertices in any order.
double flip_delta(std::span<const Point2, 4> quad, Point2 p);

/// The two diagonals of a strictly convex quadrangle in cyclic order; index
/// 0 is the Delaunay diagonal. Throws NonConvexQuad.
struct QuadDiagonals {
  std::array<int, 4> cycle;  // counter-clockwise vertex order
  Edge delaunay;
  Edge other;
};
QuadDiagonals quad_diagonals(std::span<const Point2, 4> quad);

/// Signed volume under the plane z = 2 R x - R^2 over the right triangle with
/// hypotenuse (0,0)-(R,0) and angle phi at the origin, by slicing along x.
double angle_lemma_volume(double radius, double phi);
/// Closed form R^4 sin(4 phi) / 24.
double angle_lemma_closed_form(double radius, double phi);

}  // namespace vfunc
