#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "vfunc/geom.hpp"
#include "vfunc/integrate.hpp"
#include "vfunc/tri2d.hpp"

namespace vfunc {

// ---------------------------------------------------------------------------
// Barycentric subdivision with circumcenter map (Gamma) and height map (H).
//
// Every Sd vertex is the barycenter of one source simplex; its Gamma-image is
// that simplex's circumcenter z and its height is |z|^2 - r^2. Every Sd cell
// is a flag vertex < edge < triangle (< tetrahedron), stored with vertices in
// flag order, and swapped if necessary so that the cell is positively
// oriented in the source complex.
// ---------------------------------------------------------------------------

template <class P>
struct SdVertex {
  std::vector<int> simplex;  // sorted source vertex labels
  P barycenter;
  P image;
  double height = 0.0;
};

template <std::size_t N>
struct SdCell {
  std::array<int, N> vertices;  // Sd vertex ids; vertices[0] is the source vertex's barycenter
  int source_vertex = 0;
  int source_simplex = 0;  // index of the top-dimensional source simplex
  int source_sign = 1;     // orientation sign of the source simplex (topological 2D input)
};

struct SubdividedComplex2 {
  std::vector<SdVertex<Point2>> vertices;
  std::vector<SdCell<3>> cells;

  Triangle2 source_cell(const SdCell<3>& c) const;
  Triangle2 image_cell(const SdCell<3>& c) const;
};

struct SubdividedComplex3 {
  std::vector<SdVertex<Point3>> vertices;
  std::vector<SdCell<4>> cells;

  Tetrahedron3 source_cell(const SdCell<4>& c) const;
  Tetrahedron3 image_cell(const SdCell<4>& c) const;
};

/// Tetrahedral complex in R^3; tetrahedra are reordered to positive volume.
class TetComplex3 {
public:
  TetComplex3(std::vector<Point3> positions, std::vector<std::array<int, 4>> tets);

  const std::vector<Point3>& positions() const { return positions_; }
  const std::vector<std::array<int, 4>>& tets() const { return tets_; }
  Tetrahedron3 tetrahedron(std::size_t i) const;

private:
  std::vector<Point3> positions_;
  std::vector<std::array<int, 4>> tets_;
};

SubdividedComplex2 barycentric_subdivide(const Triangulation2& t);
SubdividedComplex3 barycentric_subdivide(const TetComplex3& t);

/// Orientation of the Gamma-image of a cell: +1 kept, -1 folded, 0 squeezed.
int image_orientation(const SdCell<3>& c, const SubdividedComplex2& sd);
int image_orientation(const SdCell<4>& c, const SubdividedComplex3& sd);

/// sign(Gamma(cell)) * integral over Gamma(cell) of |x - A|^2, A the cell's
/// source vertex; multiplied by the source triangle's sign in 2D.
double vf_sd_cell(const SdCell<3>& c, const SubdividedComplex2& sd);
double vf_sd_cell(const SdCell<4>& c, const SubdividedComplex3& sd);

double vf_via_sd(const Triangulation2& t);
double vf_via_sd(const SubdividedComplex2& sd);
double vf3(const TetComplex3& t);
double vf3(const SubdividedComplex3& sd);

struct OrientationCensus {
  int preserved = 0;
  int reversed = 0;
  int squeezed = 0;
};

OrientationCensus orientation_census(const SubdividedComplex2& sd);
OrientationCensus orientation_census(const SubdividedComplex3& sd);

/// One flag (vertex < edge < face) on the boundary of a tetrahedron, and
/// whether the circumcenter map reverses it within the face's plane.
struct FaceFlag {
  std::array<int, 3> face;  // tetrahedron vertex indices 0..3
  int vertex = 0;
  int edge_other = 0;  // the flag's edge is vertex-edge_other
  bool reversed = false;
};

std::vector<FaceFlag> face_fold_census(const Tetrahedron3& t);

/// Pointwise signed coverage: sum over cells whose image contains x of
/// sign * |x - A|^2. Integrates to vf3.
double sd_field(const SubdividedComplex3& sd, Point3 x);

// ---------------------------------------------------------------------------
// Delaunay-specific checks.
// ---------------------------------------------------------------------------

/// Voronoi polygon of site i (counter-clockwise), clipped to `clip`.
std::vector<Point2> voronoi_polygon(std::span<const Point2> sites, int i, const Box2& clip);

struct CancellationCheck {
  double lhs = 0.0;  // integral of |x - A|^2 over the Voronoi polygon of A
  double rhs = 0.0;  // signed sum over the Sd star of A
  std::vector<int> cell_signs;
};

/// Throws NotInteriorVertex when `vertex` lies on the convex hull.
CancellationCheck interior_cancellation_check(const Triangulation2& d, int vertex);

/// g_D(x) = |x - N_S(x)|^2 - |x - NV_S(x)|^2, the NV term vanishing on conv(S).
class VoronoiCellField {
public:
  explicit VoronoiCellField(std::span<const Point2> sites);

  double operator()(Point2 x) const;
  const std::vector<int>& hull() const { return hull_; }

private:
  std::vector<Point2> sites_;
  std::vector<int> hull_;
};

/// True when every angle opposite a convex hull edge is acute.
bool hull_opposite_angles_acute(const Triangulation2& d);

/// Bounding box of the points inflated by the largest circumdiameter of t.
Box2 support_box(const Triangulation2& t);

struct CellDecompositionCheck {
  double closed_form = 0.0;
  McEstimate mc;
  Box2 box;
  double boundary_max_abs = 0.0;  // |g_D| on the box boundary; must be 0
};

CellDecompositionCheck cell_decomposition_check(const Triangulation2& d, std::uint64_t samples,
                                                std::uint64_t seed, unsigned threads = 1);

}  // namespace vfunc
