#include "vfunc/tri2d.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "vfunc/error.hpp"

namespace vfunc {

namespace {

std::string describe_points(std::span<const int> labels, std::span<const Point2> pts) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ", ";
    const Point2 p = pts[labels[i]];
    os << labels[i] << "=(" << p.x << ", " << p.y << ")";
  }
  return os.str();
}

std::int64_t key(int u, int v) { return (static_cast<std::int64_t>(u) << 32) | static_cast<std::uint32_t>(v); }

// Directed-edge adjacency over a mutable triangle list; each triangle owns
// its three directed edges.
class HalfEdgeIndex {
public:
  explicit HalfEdgeIndex(const std::vector<TriangleIds>& tris) {
    for (std::size_t i = 0; i < tris.size(); ++i) insert(tris[i], static_cast<int>(i));
  }

  void insert(const TriangleIds& t, int owner) {
    for (int k = 0; k < 3; ++k) {
      const auto [it, fresh] = owner_.emplace(key(t[k], t[(k + 1) % 3]), owner);
      if (!fresh)
        throw Error(ErrorCode::InvalidTriangulation,
                    "edge " + std::to_string(t[k]) + "-" + std::to_string(t[(k + 1) % 3]) +
                        " is used twice with the same direction");
    }
  }

  void erase(const TriangleIds& t) {
    for (int k = 0; k < 3; ++k) owner_.erase(key(t[k], t[(k + 1) % 3]));
  }

  int owner(int u, int v) const {
    const auto it = owner_.find(key(u, v));
    return it == owner_.end() ? -1 : it->second;
  }

private:
  std::unordered_map<std::int64_t, int> owner_;
};

int third_vertex(const TriangleIds& t, int u, int v) {
  for (int w : t)
    if (w != u && w != v) return w;
  return -1;
}

struct QuadAround {
  int t1 = -1, t2 = -1;  // t1 owns u->v, t2 owns v->u
  int u = 0, v = 0, a = 0, b = 0;  // a is third vertex of t1, b of t2
};

std::optional<QuadAround> quad_around(const std::vector<TriangleIds>& tris, const HalfEdgeIndex& idx,
                                      Edge e) {
  QuadAround q;
  q.t1 = idx.owner(e.u, e.v);
  q.t2 = idx.owner(e.v, e.u);
  if (q.t1 < 0 || q.t2 < 0) return std::nullopt;
  q.u = e.u;
  q.v = e.v;
  q.a = third_vertex(tris[q.t1], e.u, e.v);
  q.b = third_vertex(tris[q.t2], e.u, e.v);
  return q;
}

// Replaces (u,v,a), (v,u,b) by (u,b,a), (b,v,a); both ccw when the quad u,b,v,a is convex.
void apply_flip(std::vector<TriangleIds>& tris, HalfEdgeIndex& idx, const QuadAround& q) {
  idx.erase(tris[q.t1]);
  idx.erase(tris[q.t2]);
  tris[q.t1] = {q.u, q.b, q.a};
  tris[q.t2] = {q.b, q.v, q.a};
  idx.insert(tris[q.t1], q.t1);
  idx.insert(tris[q.t2], q.t2);
}

bool strictly_convex(std::span<const Point2> pts, const QuadAround& q) {
  return orient2(pts[q.u], pts[q.b], pts[q.a]) > 0 && orient2(pts[q.b], pts[q.v], pts[q.a]) > 0;
}

std::map<Edge, int> edge_use_count(const std::vector<TriangleIds>& tris) {
  std::map<Edge, int> count;
  for (const auto& t : tris)
    for (int k = 0; k < 3; ++k) ++count[Edge::of(t[k], t[(k + 1) % 3])];
  return count;
}

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidTriangulation, msg); }

void check_labels(const std::vector<TriangleIds>& tris, std::size_t n) {
  for (const auto& t : tris) {
    for (int v : t)
      if (v < 0 || static_cast<std::size_t>(v) >= n) invalid("triangle references unknown vertex " + std::to_string(v));
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) invalid("triangle repeats a vertex");
  }
}

// Edge-manifold, connected, Euler characteristic 1 and every vertex link a
// single path or cycle: the abstract complex is a disk.
void check_disk(const std::vector<TriangleIds>& tris, std::size_t n) {
  if (tris.empty()) invalid("empty triangulation");
  const auto uses = edge_use_count(tris);
  for (const auto& [e, c] : uses)
    if (c > 2) invalid("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " bounds more than two triangles");

  std::vector<bool> used(n, false);
  for (const auto& t : tris)
    for (int v : t) used[v] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) invalid("vertex " + std::to_string(i) + " is not used by any triangle");

  const long chi = static_cast<long>(n) - static_cast<long>(uses.size()) + static_cast<long>(tris.size());
  if (chi != 1) invalid("Euler characteristic is " + std::to_string(chi) + ", expected 1");

  // Vertex links: edges opposite to the vertex in its triangles.
  std::vector<std::vector<Edge>> link(n);
  for (const auto& t : tris)
    for (int k = 0; k < 3; ++k) link[t[k]].push_back(Edge::of(t[(k + 1) % 3], t[(k + 2) % 3]));
  for (std::size_t v = 0; v < n; ++v) {
    std::map<int, int> degree;
    for (const auto& e : link[v]) {
      ++degree[e.u];
      ++degree[e.v];
    }
    int ends = 0;
    for (const auto& [w, d] : degree) {
      if (d > 2) invalid("link of vertex " + std::to_string(v) + " branches");
      if (d == 1) ++ends;
    }
    if (ends != 0 && ends != 2) invalid("link of vertex " + std::to_string(v) + " is not a path or cycle");
    // connectivity of the link
    std::map<int, std::vector<int>> adj;
    for (const auto& e : link[v]) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::set<int> seen{adj.begin()->first};
    std::vector<int> stack{adj.begin()->first};
    while (!stack.empty()) {
      const int w = stack.back();
      stack.pop_back();
      for (int x : adj[w])
        if (seen.insert(x).second) stack.push_back(x);
    }
    if (seen.size() != adj.size()) invalid("link of vertex " + std::to_string(v) + " is disconnected");
  }

  // Connectivity of the triangle adjacency graph.
  std::map<Edge, std::vector<int>> owners;
  for (std::size_t i = 0; i < tris.size(); ++i)
    for (int k = 0; k < 3; ++k) owners[Edge::of(tris[i][k], tris[i][(k + 1) % 3])].push_back(static_cast<int>(i));
  std::vector<bool> reached(tris.size(), false);
  std::vector<int> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int k = 0; k < 3; ++k)
      for (int j : owners[Edge::of(tris[i][k], tris[i][(k + 1) % 3])])
        if (!reached[j]) {
          reached[j] = true;
          ++count;
          stack.push_back(j);
        }
  }
  if (count != tris.size()) invalid("triangulation is not connected");
}

}  // namespace

// ---------------------------------------------------------------------------
// Triangulation2
// ---------------------------------------------------------------------------

Triangulation2::Triangulation2(Unchecked, std::vector<Point2> positions, std::vector<TriangleIds> triangles,
                               std::vector<int> signs, TriKind kind)
    : positions_(std::move(positions)), triangles_(std::move(triangles)), signs_(std::move(signs)), kind_(kind) {}

Triangulation2 Triangulation2::geometric(std::vector<Point2> positions, std::vector<TriangleIds> triangles) {
  const std::size_t n = positions.size();
  check_labels(triangles, n);
  for (auto& t : triangles) {
    const int o = orient2(positions[t[0]], positions[t[1]], positions[t[2]]);
    if (o == 0) throw Error(ErrorCode::DegenerateSimplex, "geometric triangulation contains a degenerate triangle");
    if (o < 0) std::swap(t[1], t[2]);
  }
  check_disk(triangles, n);

  // Boundary must be exactly the convex hull, and the areas must add up to
  // its area; with all triangles positively oriented that rules out overlaps.
  const auto hull = convex_hull(positions);
  std::set<Edge> hull_edges;
  for (std::size_t i = 0; i < hull.size(); ++i) hull_edges.insert(Edge::of(hull[i], hull[(i + 1) % hull.size()]));
  std::set<Edge> boundary;
  for (const auto& [e, c] : edge_use_count(triangles))
    if (c == 1) boundary.insert(e);
  if (boundary != hull_edges) invalid("boundary of the triangulation is not the convex hull");

  double hull_area = 0.0;
  for (std::size_t i = 1; i + 1 < hull.size(); ++i)
    hull_area += signed_area({positions[hull[0]], positions[hull[i]], positions[hull[i + 1]]});
  double area = 0.0;
  for (const auto& t : triangles) area += signed_area({positions[t[0]], positions[t[1]], positions[t[2]]});
  if (std::abs(area - hull_area) > 1e-9 * std::max(1.0, hull_area)) invalid("triangles overlap");

  std::vector<int> signs(triangles.size(), 1);
  return Triangulation2(Unchecked{}, std::move(positions), std::move(triangles), std::move(signs), TriKind::Geometric);
}

Triangulation2 Triangulation2::topological(std::vector<Point2> positions, std::vector<TriangleIds> triangles,
                                           std::span<const int> reference_orientation) {
  const std::size_t n = positions.size();
  check_labels(triangles, n);
  if (reference_orientation.size() != triangles.size())
    throw Error(ErrorCode::InvalidArgument, "one reference orientation per triangle required");
  check_disk(triangles, n);
  std::vector<int> signs(triangles.size());
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const auto& t = triangles[i];
    const int o = orient2(positions[t[0]], positions[t[1]], positions[t[2]]);
    if (o == 0)
      throw Error(ErrorCode::CollinearImage, "triangle " + describe_points(t, positions) + " maps to a segment");
    signs[i] = o * (reference_orientation[i] < 0 ? -1 : 1);
  }
  return Triangulation2(Unchecked{}, std::move(positions), std::move(triangles), std::move(signs),
                        TriKind::Topological);
}

Triangle2 Triangulation2::triangle(std::size_t i) const {
  const auto& t = triangles_.at(i);
  return {positions_[t[0]], positions_[t[1]], positions_[t[2]]};
}

std::vector<Edge> Triangulation2::edges() const {
  std::vector<Edge> out;
  for (const auto& [e, c] : edge_use_count(triangles_)) out.push_back(e);
  return out;
}

std::vector<Edge> Triangulation2::interior_edges() const {
  std::vector<Edge> out;
  for (const auto& [e, c] : edge_use_count(triangles_))
    if (c == 2) out.push_back(e);
  return out;
}

std::vector<Edge> Triangulation2::boundary_edges() const {
  std::vector<Edge> out;
  for (const auto& [e, c] : edge_use_count(triangles_))
    if (c == 1) out.push_back(e);
  return out;
}

std::vector<TriangleIds> Triangulation2::canonical() const {
  std::vector<TriangleIds> out = triangles_;
  for (auto& t : out) std::sort(t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Point-set utilities
// ---------------------------------------------------------------------------

std::vector<int> convex_hull(std::span<const Point2> points) {
  std::vector<int> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    return points[i].x < points[j].x || (points[i].x == points[j].x && points[i].y < points[j].y);
  });
  if (idx.size() < 3) return idx;
  std::vector<int> hull(2 * idx.size());
  std::size_t k = 0;
  const auto turn = [&](int o, int a, int b) { return cross(points[a] - points[o], points[b] - points[o]); };
  for (int i : idx) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], i) <= 0.0) --k;
    hull[k++] = i;
  }
  for (std::size_t i = idx.size() - 1, lower = k + 1; i-- > 0;) {
    const int p = idx[i];
    while (k >= lower && turn(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

std::optional<std::string> find_collinear_triple(const PointSet2& ps) {
  const auto& p = ps.points;
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orient2(p[i], p[j], p[k]) == 0) {
          const std::array<int, 3> ids{i, j, k};
          return "collinear triple " + describe_points(ids, p);
        }
  return std::nullopt;
}

std::optional<std::string> find_cocircular_quadruple(const PointSet2& ps) {
  const auto& p = ps.points;
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Triangle2 t{p[i], p[j], p[k]};
        const int o = orient2(t);
        if (o == 0) continue;
        if (o < 0) std::swap(t.b, t.c);
        for (int l = k + 1; l < n; ++l)
          if (in_circle(t, p[l]) == 0) {
            const std::array<int, 4> ids{i, j, k, l};
            return "cocircular quadruple " + describe_points(ids, p);
          }
      }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Delaunay
// ---------------------------------------------------------------------------

namespace {

// Sweep triangulation: insert points in lexicographic order, coning each new
// point to the hull edges it sees.
std::vector<TriangleIds> sweep_triangulation(std::span<const Point2> pts) {
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return pts[i].x < pts[j].x || (pts[i].x == pts[j].x && pts[i].y < pts[j].y);
  });

  std::vector<TriangleIds> tris;
  std::vector<int> hull{order[0], order[1], order[2]};
  if (orient2(pts[hull[0]], pts[hull[1]], pts[hull[2]]) < 0) std::swap(hull[1], hull[2]);
  tris.push_back({hull[0], hull[1], hull[2]});

  for (std::size_t s = 3; s < order.size(); ++s) {
    const int p = order[s];
    const std::size_t h = hull.size();
    std::vector<bool> visible(h);
    for (std::size_t i = 0; i < h; ++i) visible[i] = orient2(pts[hull[i]], pts[hull[(i + 1) % h]], pts[p]) < 0;
    // Visible edges form one circular run; find its start.
    std::size_t start = h;
    for (std::size_t i = 0; i < h; ++i)
      if (visible[i] && !visible[(i + h - 1) % h]) {
        start = i;
        break;
      }
    if (start == h) throw Error(ErrorCode::NotGeneralPosition, "sweep insertion found no visible hull edge");
    std::size_t i = start;
    std::size_t run = 0;
    while (visible[i % h]) {
      const int u = hull[i % h], v = hull[(i + 1) % h];
      tris.push_back({v, u, p});
      ++i;
      ++run;
    }
    // Keep hull[start], drop the `run - 1` interior vertices of the run, insert p.
    std::vector<int> next;
    next.reserve(h + 1);
    for (std::size_t k = 0; k < h; ++k) {
      const std::size_t pos = (start + k) % h;
      if (k == 0) {
        next.push_back(hull[pos]);
        next.push_back(p);
      } else if (k >= run) {
        next.push_back(hull[pos]);
      }
    }
    hull = std::move(next);
  }
  return tris;
}

}  // namespace

Triangulation2 delaunay(const PointSet2& ps) {
  const auto& pts = ps.points;
  if (pts.size() < 3) throw Error(ErrorCode::InvalidArgument, "delaunay needs at least 3 points");
  for (const auto& p : pts)
    if (!is_finite(p)) throw Error(ErrorCode::InvalidArgument, "point coordinates must be finite");
  if (auto why = find_collinear_triple(ps)) throw Error(ErrorCode::NotGeneralPosition, *why);

  std::vector<TriangleIds> tris = sweep_triangulation(pts);
  HalfEdgeIndex idx(tris);

  std::vector<Edge> stack;
  for (const auto& [e, c] : edge_use_count(tris))
    if (c == 2) stack.push_back(e);
  while (!stack.empty()) {
    const Edge e = stack.back();
    stack.pop_back();
    const auto q = quad_around(tris, idx, e);
    if (!q) continue;
    if (in_circle({pts[q->u], pts[q->v], pts[q->a]}, pts[q->b]) <= 0) continue;
    apply_flip(tris, idx, *q);
    stack.push_back(Edge::of(q->u, q->b));
    stack.push_back(Edge::of(q->b, q->v));
    stack.push_back(Edge::of(q->v, q->a));
    stack.push_back(Edge::of(q->a, q->u));
  }

  for (const auto& [e, c] : edge_use_count(tris)) {
    if (c != 2) continue;
    const auto q = quad_around(tris, idx, e);
    if (in_circle({pts[q->u], pts[q->v], pts[q->a]}, pts[q->b]) == 0) {
      const std::array<int, 4> ids{q->u, q->v, q->a, q->b};
      throw Error(ErrorCode::NotGeneralPosition, "cocircular quadruple " + describe_points(ids, pts));
    }
  }
  std::vector<int> signs(tris.size(), 1);
  return Triangulation2(Triangulation2::Unchecked{}, pts, std::move(tris), std::move(signs), TriKind::Geometric);
}

// ---------------------------------------------------------------------------
// Flips
// ---------------------------------------------------------------------------

bool is_flippable(const Triangulation2& t, Edge e) {
  if (t.kind() != TriKind::Geometric) return false;
  const auto& tris = t.triangles();
  const HalfEdgeIndex idx(tris);
  const auto q = quad_around(tris, idx, Edge::of(e.u, e.v));
  return q && strictly_convex(t.positions(), *q);
}

Triangulation2 flip(const Triangulation2& t, FlipMove m) {
  if (t.kind() != TriKind::Geometric)
    throw Error(ErrorCode::InvalidArgument, "flip requires a geometric triangulation");
  std::vector<TriangleIds> tris = t.triangles();
  HalfEdgeIndex idx(tris);
  const Edge e = Edge::of(m.edge.u, m.edge.v);
  const auto q = quad_around(tris, idx, e);
  if (!q)
    throw Error(ErrorCode::NotInteriorEdge,
                "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an interior edge");
  if (!strictly_convex(t.positions(), *q))
    throw Error(ErrorCode::NonConvexQuad,
                "quadrangle around edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not convex");
  apply_flip(tris, idx, *q);
  return Triangulation2(Triangulation2::Unchecked{}, t.positions(), std::move(tris), t.signs(), TriKind::Geometric);
}

std::vector<Triangulation2> enumerate_triangulations(const PointSet2& ps, std::size_t cap) {
  if (auto why = find_cocircular_quadruple(ps)) throw Error(ErrorCode::NotGeneralPosition, *why);
  std::vector<Triangulation2> found{delaunay(ps)};
  std::set<std::vector<TriangleIds>> seen{found.front().canonical()};
  for (std::size_t head = 0; head < found.size(); ++head) {
    const auto interior = found[head].interior_edges();
    for (const Edge& e : interior) {
      std::vector<TriangleIds> tris = found[head].triangles();
      HalfEdgeIndex idx(tris);
      const auto q = quad_around(tris, idx, e);
      if (!q || !strictly_convex(ps.points, *q)) continue;
      apply_flip(tris, idx, *q);
      Triangulation2 next(Triangulation2::Unchecked{}, ps.points, std::move(tris),
                          std::vector<int>(found[head].size(), 1), TriKind::Geometric);
      if (!seen.insert(next.canonical()).second) continue;
      if (found.size() >= cap)
        throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " triangulations");
      found.push_back(std::move(next));
    }
  }
  return found;
}

Triangulation2 make_topological(const Triangulation2& t, std::span<const int> relabeling) {
  if (t.kind() != TriKind::Geometric)
    throw Error(ErrorCode::InvalidArgument, "make_topological expects a geometric triangulation");
  const std::size_t n = t.vertex_count();
  if (relabeling.size() != n) throw Error(ErrorCode::InvalidArgument, "relabeling has wrong length");
  std::vector<bool> hit(n, false);
  for (int r : relabeling) {
    if (r < 0 || static_cast<std::size_t>(r) >= n || hit[r])
      throw Error(ErrorCode::InvalidArgument, "relabeling is not a permutation");
    hit[r] = true;
  }
  std::vector<Point2> moved(n);
  for (std::size_t i = 0; i < n; ++i) moved[i] = t.positions()[relabeling[i]];

  std::vector<int> signs(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& tri = t.triangles()[i];
    const int o = orient2(moved[tri[0]], moved[tri[1]], moved[tri[2]]);
    if (o == 0)
      throw Error(ErrorCode::CollinearImage, "triangle " + describe_points(tri, moved) + " maps to a segment");
    signs[i] = o;  // source triangles are counter-clockwise
  }
  return Triangulation2(Triangulation2::Unchecked{}, std::move(moved), t.triangles(), std::move(signs),
                        TriKind::Topological);
}

int cover_count(const Triangulation2& t, Point2 p) {
  int count = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (contains(t.triangle(i), p)) ++count;
  return count;
}

int signed_cover(const Triangulation2& t, Point2 p) {
  int count = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (contains(t.triangle(i), p)) count += t.signs()[i];
  return count;
}

std::vector<double> sorted_angles(const Triangulation2& t) {
  std::vector<double> out;
  out.reserve(3 * t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Triangle2 tri = t.triangle(i);
    for (int k = 0; k < 3; ++k) {
      const Point2 a = tri[k], b = tri[(k + 1) % 3], c = tri[(k + 2) % 3];
      out.push_back(std::atan2(std::abs(cross(b - a, c - a)), dot(b - a, c - a)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vfunc
