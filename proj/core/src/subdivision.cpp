#include "vfunc/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "vfunc/error.hpp"
#include "vfunc/functional2d.hpp"

namespace vfunc {

namespace {

template <class P, class Circum>
int sd_vertex_id(std::map<std::vector<int>, int>& ids, std::vector<SdVertex<P>>& out, std::vector<int> simplex,
                 std::span<const P> positions, Circum&& circum) {
  std::sort(simplex.begin(), simplex.end());
  const auto it = ids.find(simplex);
  if (it != ids.end()) return it->second;
  SdVertex<P> v;
  v.simplex = simplex;
  P sum{};
  for (int s : simplex) sum = sum + positions[s];
  v.barycenter = sum / static_cast<double>(simplex.size());
  const auto [center, radius] = circum(simplex);
  v.image = center;
  v.height = norm2(center) - radius * radius;
  const int id = static_cast<int>(out.size());
  out.push_back(std::move(v));
  ids.emplace(std::move(simplex), id);
  return id;
}

}  // namespace

Triangle2 SubdividedComplex2::source_cell(const SdCell<3>& c) const {
  return {vertices[c.vertices[0]].barycenter, vertices[c.vertices[1]].barycenter, vertices[c.vertices[2]].barycenter};
}

Triangle2 SubdividedComplex2::image_cell(const SdCell<3>& c) const {
  return {vertices[c.vertices[0]].image, vertices[c.vertices[1]].image, vertices[c.vertices[2]].image};
}

Tetrahedron3 SubdividedComplex3::source_cell(const SdCell<4>& c) const {
  return {vertices[c.vertices[0]].barycenter, vertices[c.vertices[1]].barycenter, vertices[c.vertices[2]].barycenter,
          vertices[c.vertices[3]].barycenter};
}

Tetrahedron3 SubdividedComplex3::image_cell(const SdCell<4>& c) const {
  return {vertices[c.vertices[0]].image, vertices[c.vertices[1]].image, vertices[c.vertices[2]].image,
          vertices[c.vertices[3]].image};
}

TetComplex3::TetComplex3(std::vector<Point3> positions, std::vector<std::array<int, 4>> tets)
    : positions_(std::move(positions)), tets_(std::move(tets)) {
  for (auto& t : tets_) {
    for (int v : t)
      if (v < 0 || static_cast<std::size_t>(v) >= positions_.size())
        throw Error(ErrorCode::InvalidArgument, "tetrahedron references unknown vertex " + std::to_string(v));
    const int o = orient3({positions_[t[0]], positions_[t[1]], positions_[t[2]], positions_[t[3]]});
    if (o == 0) throw Error(ErrorCode::DegenerateSimplex, "degenerate tetrahedron");
    if (o < 0) std::swap(t[2], t[3]);
  }
}

Tetrahedron3 TetComplex3::tetrahedron(std::size_t i) const {
  const auto& t = tets_.at(i);
  return {positions_[t[0]], positions_[t[1]], positions_[t[2]], positions_[t[3]]};
}

SubdividedComplex2 barycentric_subdivide(const Triangulation2& t) {
  SubdividedComplex2 sd;
  std::map<std::vector<int>, int> ids;
  const std::span<const Point2> pos(t.positions());
  const auto circum = [&](const std::vector<int>& s) -> std::pair<Point2, double> {
    switch (s.size()) {
      case 1: return {pos[s[0]], 0.0};
      case 2: return {0.5 * (pos[s[0]] + pos[s[1]]), 0.5 * norm(pos[s[0]] - pos[s[1]])};
      default: {
        const Circle2 c = circumcircle({pos[s[0]], pos[s[1]], pos[s[2]]});
        return {c.center, c.radius};
      }
    }
  };

  for (std::size_t ti = 0; ti < t.size(); ++ti) {
    const auto& tri = t.triangles()[ti];
    const int top = sd_vertex_id(ids, sd.vertices, {tri[0], tri[1], tri[2]}, pos, circum);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        SdCell<3> cell;
        cell.vertices = {sd_vertex_id(ids, sd.vertices, {tri[i]}, pos, circum),
                         sd_vertex_id(ids, sd.vertices, {tri[i], tri[j]}, pos, circum), top};
        cell.source_vertex = tri[i];
        cell.source_simplex = static_cast<int>(ti);
        cell.source_sign = t.signs()[ti];
        if (orient2(sd.source_cell(cell)) < 0) std::swap(cell.vertices[1], cell.vertices[2]);
        sd.cells.push_back(cell);
      }
    }
  }
  return sd;
}

SubdividedComplex3 barycentric_subdivide(const TetComplex3& t) {
  SubdividedComplex3 sd;
  std::map<std::vector<int>, int> ids;
  const std::span<const Point3> pos(t.positions());
  const auto circum = [&](const std::vector<int>& s) -> std::pair<Point3, double> {
    switch (s.size()) {
      case 1: return {pos[s[0]], 0.0};
      case 2: return {0.5 * (pos[s[0]] + pos[s[1]]), 0.5 * norm(pos[s[0]] - pos[s[1]])};
      case 3: {
        const Sphere3 c = circumcircle(pos[s[0]], pos[s[1]], pos[s[2]]);
        return {c.center, c.radius};
      }
      default: {
        const Sphere3 c = circumsphere({pos[s[0]], pos[s[1]], pos[s[2]], pos[s[3]]});
        return {c.center, c.radius};
      }
    }
  };

  for (std::size_t ti = 0; ti < t.tets().size(); ++ti) {
    const auto& tet = t.tets()[ti];
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      const int a = tet[perm[0]], b = tet[perm[1]], c = tet[perm[2]];
      SdCell<4> cell;
      cell.vertices = {sd_vertex_id(ids, sd.vertices, {a}, pos, circum),
                       sd_vertex_id(ids, sd.vertices, {a, b}, pos, circum),
                       sd_vertex_id(ids, sd.vertices, {a, b, c}, pos, circum),
                       sd_vertex_id(ids, sd.vertices, {tet[0], tet[1], tet[2], tet[3]}, pos, circum)};
      cell.source_vertex = a;
      cell.source_simplex = static_cast<int>(ti);
      if (orient3(sd.source_cell(cell)) < 0) std::swap(cell.vertices[2], cell.vertices[3]);
      sd.cells.push_back(cell);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return sd;
}

int image_orientation(const SdCell<3>& c, const SubdividedComplex2& sd) { return orient2(sd.image_cell(c)); }
int image_orientation(const SdCell<4>& c, const SubdividedComplex3& sd) { return orient3(sd.image_cell(c)); }

double vf_sd_cell(const SdCell<3>& c, const SubdividedComplex2& sd) {
  const Point2 a = sd.vertices[c.vertices[0]].barycenter;
  return c.source_sign * quad_triangle(sd.image_cell(c), [a](Point2 x) { return dist2(x, a); });
}

double vf_sd_cell(const SdCell<4>& c, const SubdividedComplex3& sd) {
  const Point3 a = sd.vertices[c.vertices[0]].barycenter;
  return c.source_sign * quad_tetra(sd.image_cell(c), [a](Point3 x) { return dist2(x, a); });
}

double vf_via_sd(const SubdividedComplex2& sd) {
  double sum = 0.0;
  for (const auto& c : sd.cells) sum += vf_sd_cell(c, sd);
  return sum;
}

double vf_via_sd(const Triangulation2& t) { return vf_via_sd(barycentric_subdivide(t)); }

double vf3(const SubdividedComplex3& sd) {
  double sum = 0.0;
  for (const auto& c : sd.cells) sum += vf_sd_cell(c, sd);
  return sum;
}

double vf3(const TetComplex3& t) { return vf3(barycentric_subdivide(t)); }

namespace {

template <class Sd>
OrientationCensus census_of(const Sd& sd) {
  OrientationCensus out;
  for (const auto& c : sd.cells) {
    switch (image_orientation(c, sd)) {
      case 1: ++out.preserved; break;
      case -1: ++out.reversed; break;
      default: ++out.squeezed; break;
    }
  }
  return out;
}

}  // namespace

OrientationCensus orientation_census(const SubdividedComplex2& sd) { return census_of(sd); }
OrientationCensus orientation_census(const SubdividedComplex3& sd) { return census_of(sd); }

std::vector<FaceFlag> face_fold_census(const Tetrahedron3& t) {
  const auto v = t.vertices();
  static constexpr std::array<std::array<int, 3>, 4> kFaces{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
  std::vector<FaceFlag> out;
  for (const auto& f : kFaces) {
    const Point3 normal = cross(v[f[1]] - v[f[0]], v[f[2]] - v[f[0]]);
    const Point3 centroid = (v[f[0]] + v[f[1]] + v[f[2]]) / 3.0;
    const Point3 cc = circumcircle(v[f[0]], v[f[1]], v[f[2]]).center;
    for (int i : f) {
      for (int j : f) {
        if (i == j) continue;
        const Point3 mid = 0.5 * (v[i] + v[j]);
        const double src = dot(cross(mid - v[i], centroid - v[i]), normal);
        const double img = dot(cross(mid - v[i], cc - v[i]), normal);
        out.push_back({f, i, j, src * img < 0.0});
      }
    }
  }
  return out;
}

double sd_field(const SubdividedComplex3& sd, Point3 x) {
  double sum = 0.0;
  for (const auto& c : sd.cells) {
    const Tetrahedron3 img = sd.image_cell(c);
    const int o = orient3(img);
    if (o == 0 || !contains(img, x)) continue;
    sum += c.source_sign * o * dist2(x, sd.vertices[c.vertices[0]].barycenter);
  }
  return sum;
}

// ---------------------------------------------------------------------------

std::vector<Point2> voronoi_polygon(std::span<const Point2> sites, int i, const Box2& clip) {
  std::vector<Point2> poly{clip.lo, {clip.hi.x, clip.lo.y}, clip.hi, {clip.lo.x, clip.hi.y}};
  const Point2 a = sites[i];
  for (std::size_t j = 0; j < sites.size() && !poly.empty(); ++j) {
    if (static_cast<int>(j) == i) continue;
    // Keep {x : <x, b - a> <= (|b|^2 - |a|^2) / 2}.
    const Point2 n = sites[j] - a;
    const double c = 0.5 * (norm2(sites[j]) - norm2(a));
    const auto side = [&](Point2 x) { return dot(x, n) - c; };
    std::vector<Point2> next;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Point2 p = poly[k], q = poly[(k + 1) % poly.size()];
      const double sp = side(p), sq = side(q);
      if (sp <= 0.0) next.push_back(p);
      if ((sp < 0.0 && sq > 0.0) || (sp > 0.0 && sq < 0.0)) next.push_back(p + (sp / (sp - sq)) * (q - p));
    }
    poly = std::move(next);
  }
  return poly;
}

Box2 support_box(const Triangulation2& t) {
  const auto& pts = t.positions();
  Box2 b{pts.front(), pts.front()};
  for (const auto& p : pts) {
    b.lo = {std::min(b.lo.x, p.x), std::min(b.lo.y, p.y)};
    b.hi = {std::max(b.hi.x, p.x), std::max(b.hi.y, p.y)};
  }
  double pad = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) pad = std::max(pad, 2.0 * circumcircle(t.triangle(i)).radius);
  b.lo = b.lo - Point2{pad, pad};
  b.hi = b.hi + Point2{pad, pad};
  return b;
}

CancellationCheck interior_cancellation_check(const Triangulation2& d, int vertex) {
  for (const Edge& e : d.boundary_edges())
    if (e.u == vertex || e.v == vertex)
      throw Error(ErrorCode::NotInteriorVertex, "vertex " + std::to_string(vertex) + " lies on the convex hull");
  const auto& pts = d.positions();
  const Point2 a = pts.at(vertex);

  CancellationCheck out;
  const auto poly = voronoi_polygon(pts, vertex, support_box(d));
  for (std::size_t k = 0; k < poly.size(); ++k)
    out.lhs += quad_triangle(Triangle2{a, poly[k], poly[(k + 1) % poly.size()]},
                             [a](Point2 x) { return dist2(x, a); });

  const auto sd = barycentric_subdivide(d);
  for (const auto& c : sd.cells) {
    if (c.source_vertex != vertex) continue;
    out.rhs += vf_sd_cell(c, sd);
    out.cell_signs.push_back(image_orientation(c, sd));
  }
  return out;
}

VoronoiCellField::VoronoiCellField(std::span<const Point2> sites)
    : sites_(sites.begin(), sites.end()), hull_(convex_hull(sites)) {}

double VoronoiCellField::operator()(Point2 x) const {
  double nearest = dist2(x, sites_[0]);
  for (std::size_t i = 1; i < sites_.size(); ++i) nearest = std::min(nearest, dist2(x, sites_[i]));

  const std::size_t h = hull_.size();
  bool inside = true;
  for (std::size_t i = 0; i < h && inside; ++i)
    inside = cross(sites_[hull_[(i + 1) % h]] - sites_[hull_[i]], x - sites_[hull_[i]]) >= 0.0;
  if (inside) return nearest;

  double visible = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < h; ++i) {
    const Point2 apex = sites_[hull_[i]];
    if (visible_at_corner(apex, sites_[hull_[(i + h - 1) % h]], sites_[hull_[(i + 1) % h]], x))
      visible = std::min(visible, dist2(x, apex));
  }
  return nearest - visible;
}

bool hull_opposite_angles_acute(const Triangulation2& d) {
  const std::set<Edge> boundary = [&] {
    const auto b = d.boundary_edges();
    return std::set<Edge>(b.begin(), b.end());
  }();
  const auto& pts = d.positions();
  for (const auto& tri : d.triangles())
    for (int k = 0; k < 3; ++k) {
      const int u = tri[k], v = tri[(k + 1) % 3], w = tri[(k + 2) % 3];
      if (boundary.count(Edge::of(u, v)) && dot(pts[u] - pts[w], pts[v] - pts[w]) <= 0.0) return false;
    }
  return true;
}

CellDecompositionCheck cell_decomposition_check(const Triangulation2& d, std::uint64_t samples, std::uint64_t seed,
                                                unsigned threads) {
  CellDecompositionCheck out;
  out.closed_form = vf_triangulation(d).total;
  out.box = support_box(d);
  const VoronoiCellField field(d.positions());
  out.mc = mc_integrate(out.box, field, samples, seed, threads);

  constexpr int kPerSide = 256;
  const Box2& b = out.box;
  for (int i = 0; i <= kPerSide; ++i) {
    const double s = static_cast<double>(i) / kPerSide;
    const Point2 probes[4] = {{b.lo.x + s * (b.hi.x - b.lo.x), b.lo.y},
                              {b.lo.x + s * (b.hi.x - b.lo.x), b.hi.y},
                              {b.lo.x, b.lo.y + s * (b.hi.y - b.lo.y)},
                              {b.hi.x, b.lo.y + s * (b.hi.y - b.lo.y)}};
    for (const Point2& p : probes) out.boundary_max_abs = std::max(out.boundary_max_abs, std::abs(field(p)));
  }
  return out;
}

}  // namespace vfunc
