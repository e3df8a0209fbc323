#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vfunc/geom.hpp"

namespace vfunc {

/// Labelled planar point set; a point's label is its index.
struct PointSet2 {
  std::vector<Point2> points;

  std::size_t size() const { return points.size(); }
};

using TriangleIds = std::array<int, 3>;

/// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct FlipMove {
  Edge edge;
};

enum class TriKind { Geometric, Topological };

/// Indexed triangulation over labelled positions, geometric or topological.
///
/// Geometric triangulations store every triangle counter-clockwise with sign
/// +1. Topological triangulations keep the vertex order of the geometric
/// complex they were derived from; the sign of a triangle is the orientation
/// of its mapped image. Instances are validated on construction and immutable.
class Triangulation2 {
public:
  /// Orients triangles counter-clockwise and validates that they form a
  /// geometric triangulation of the convex hull of `positions`.
  static Triangulation2 geometric(std::vector<Point2> positions, std::vector<TriangleIds> triangles);

  /// Validates disk topology; signs are recomputed from the positions
  /// relative to `reference_orientation` (one entry per triangle, +1 or -1).
  static Triangulation2 topological(std::vector<Point2> positions, std::vector<TriangleIds> triangles,
                                    std::span<const int> reference_orientation);

  const std::vector<Point2>& positions() const { return positions_; }
  const std::vector<TriangleIds>& triangles() const { return triangles_; }
  const std::vector<int>& signs() const { return signs_; }
  TriKind kind() const { return kind_; }
  std::size_t size() const { return triangles_.size(); }
  std::size_t vertex_count() const { return positions_.size(); }

  Triangle2 triangle(std::size_t i) const;

  std::vector<Edge> edges() const;
  std::vector<Edge> interior_edges() const;
  std::vector<Edge> boundary_edges() const;

  /// Sorted list of sorted label triples; equal iff same abstract complex.
  std::vector<TriangleIds> canonical() const;

private:
  struct Unchecked {};
  Triangulation2(Unchecked, std::vector<Point2> positions, std::vector<TriangleIds> triangles,
                 std::vector<int> signs, TriKind kind);

  std::vector<Point2> positions_;
  std::vector<TriangleIds> triangles_;
  std::vector<int> signs_;
  TriKind kind_ = TriKind::Geometric;

  friend Triangulation2 delaunay(const PointSet2& ps);
  friend Triangulation2 flip(const Triangulation2& t, FlipMove m);
  friend std::vector<Triangulation2> enumerate_triangulations(const PointSet2& ps, std::size_t cap);
  friend Triangulation2 make_topological(const Triangulation2& t, std::span<const int> relabeling);
};

/// Counter-clockwise convex hull (Andrew's monotone chain) as point labels.
std::vector<int> convex_hull(std::span<const Point2> points);

/// Diagnostic naming the first collinear triple, if any.
std::optional<std::string> find_collinear_triple(const PointSet2& ps);
/// Diagnostic naming the first cocircular quadruple, if any. O(n^4).
std::optional<std::string> find_cocircular_quadruple(const PointSet2& ps);

/// Delaunay triangulation: lexicographic sweep followed by Lawson flips.
/// Throws NotGeneralPosition on collinear triples or a cocircular Delaunay edge.
Triangulation2 delaunay(const PointSet2& ps);

/// True when `e` is interior and its two triangles form a strictly convex quadrangle.
bool is_flippable(const Triangulation2& t, Edge e);

/// Replaces the diagonal `m.edge` by the opposite one. Geometric kind only.
Triangulation2 flip(const Triangulation2& t, FlipMove m);

/// Every geometric triangulation of `ps`, by breadth-first search of the flip
/// graph starting at the Delaunay triangulation (which is element 0).
std::vector<Triangulation2> enumerate_triangulations(const PointSet2& ps, std::size_t cap = 100000);

/// Same abstract complex with vertex i placed at position relabeling[i].
Triangulation2 make_topological(const Triangulation2& t, std::span<const int> relabeling);

/// Number of triangles whose closed image contains p, and the signed count.
int cover_count(const Triangulation2& t, Point2 p);
int signed_cover(const Triangulation2& t, Point2 p);

/// All triangle angles, ascending.
std::vector<double> sorted_angles(const Triangulation2& t);

}  // namespace vfunc
