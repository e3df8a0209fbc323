#include "vfunc/functional2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vfunc/error.hpp"
#include "vfunc/integrate.hpp"

namespace vfunc {

std::string_view to_string(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::Voronoi: return "vf";
    case FunctionalKind::Rajan: return "rajan";
    case FunctionalKind::Radius: return "rf";
  }
  return "unknown";
}

namespace {

struct TriangleMetrics {
  double area;
  double a2, b2, c2;
  double r2;  // squared circumradius
};

TriangleMetrics metrics(const Triangle2& t) {
  if (orient2(t) == 0) throw Error(ErrorCode::DegenerateSimplex, "degenerate triangle");
  TriangleMetrics m{};
  m.area = std::abs(signed_area(t));
  m.a2 = dist2(t.b, t.c);
  m.b2 = dist2(t.c, t.a);
  m.c2 = dist2(t.a, t.b);
  m.r2 = m.a2 * m.b2 * m.c2 / (16.0 * m.area * m.area);
  return m;
}

template <class PerTriangle>
FunctionalReport sum_over(const Triangulation2& t, FunctionalKind kind, double alpha, PerTriangle&& f) {
  FunctionalReport r{kind, alpha, 0.0, {}};
  r.per_simplex.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double v = t.signs()[i] * f(t.triangle(i));
    r.per_simplex.push_back(v);
    r.total += v;
  }
  return r;
}

}  // namespace

double vf_triangle(const Triangle2& t) {
  const auto m = metrics(t);
  return m.area / 12.0 * (m.a2 + m.b2 + m.c2 - 4.0 * m.r2);
}

double rajan_triangle(const Triangle2& t) {
  const auto m = metrics(t);
  return m.area / 12.0 * (m.a2 + m.b2 + m.c2);
}

double radius_triangle(const Triangle2& t, double alpha) {
  const auto m = metrics(t);
  return std::pow(m.r2, 0.5 * alpha) * m.area;
}

double edge_length_product(const Triangle2& t) {
  return std::sqrt(dist2(t.a, t.b) * dist2(t.b, t.c) * dist2(t.c, t.a));
}

FunctionalReport vf_triangulation(const Triangulation2& t) {
  return sum_over(t, FunctionalKind::Voronoi, 0.0, vf_triangle);
}

FunctionalReport rajan_functional(const Triangulation2& t) {
  return sum_over(t, FunctionalKind::Rajan, 0.0, rajan_triangle);
}

FunctionalReport radius_functional(const Triangulation2& t, double alpha) {
  return sum_over(t, FunctionalKind::Radius, alpha, [alpha](const Triangle2& tri) { return radius_triangle(tri, alpha); });
}

double mu_term(Point2 apex, Point2 mid, Point2 cc) {
  return quad_triangle(Triangle2{apex, mid, cc}, [apex](Point2 x) { return dist2(x, apex); });
}

std::array<MuTerm, 6> mu_decomposition(const Triangle2& t) {
  const Point2 cc = circumcircle(t).center;
  const Point2 centroid = (t.a + t.b + t.c) / 3.0;
  std::array<MuTerm, 6> out{};
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const Point2 apex = t[i];
      const Point2 mid = 0.5 * (t[i] + t[j]);
      const int flag_sign = orient2(apex, mid, centroid);
      const double mu = mu_term(apex, mid, cc);
      const int image_sign = mu > 0.0 ? 1 : (mu < 0.0 ? -1 : 0);
      out[k++] = MuTerm{i, j, flag_sign * image_sign, flag_sign * mu};
    }
  }
  return out;
}

double g_triangle(const Triangle2& t, Point2 p) {
  const VertexHit n = nearest_vertex(t, p);
  const auto nv = nearest_visible_vertex(t, p);
  return nv ? n.dist2 - nv->dist2 : n.dist2;
}

double g_field(const Triangulation2& t, Point2 p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) sum += t.signs()[i] * g_triangle(t.triangle(i), p);
  return sum;
}

QuadDiagonals quad_diagonals(std::span<const Point2, 4> quad) {
  const std::vector<Point2> pts(quad.begin(), quad.end());
  const auto hull = convex_hull(pts);
  if (hull.size() != 4) throw Error(ErrorCode::NonConvexQuad, "points are not in convex position");
  for (int i = 0; i < 4; ++i)
    if (orient2(pts[hull[i]], pts[hull[(i + 1) % 4]], pts[hull[(i + 2) % 4]]) <= 0)
      throw Error(ErrorCode::NonConvexQuad, "quadrangle is not strictly convex");
  QuadDiagonals d{};
  std::copy(hull.begin(), hull.end(), d.cycle.begin());
  const Triangle2 t{pts[hull[0]], pts[hull[1]], pts[hull[2]]};
  const int in = in_circle(t, pts[hull[3]]);
  if (in == 0) throw Error(ErrorCode::NotGeneralPosition, "quadrangle is cocircular");
  const Edge e02 = Edge::of(hull[0], hull[2]);
  const Edge e13 = Edge::of(hull[1], hull[3]);
  // Fourth vertex outside circle(0,1,2) means diagonal 0-2 is Delaunay.
  d.delaunay = in < 0 ? e02 : e13;
  d.other = in < 0 ? e13 : e02;
  return d;
}

double flip_delta(std::span<const Point2, 4> quad, Point2 p) {
  const QuadDiagonals d = quad_diagonals(quad);
  const auto pair_value = [&](Edge diag) {
    int others[2];
    int k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != diag.u && i != diag.v) others[k++] = i;
    const Triangle2 t1{quad[diag.u], quad[diag.v], quad[others[0]]};
    const Triangle2 t2{quad[diag.u], quad[diag.v], quad[others[1]]};
    return g_triangle(t1, p) + g_triangle(t2, p);
  };
  return pair_value(d.delaunay) - pair_value(d.other);
}

double angle_lemma_volume(double radius, double phi) {
  // Cross-section of the right triangle at abscissa x is a segment of length
  // w(x); the altitude foot sits at x = R cos^2 phi.
  const double foot = radius * std::cos(phi) * std::cos(phi);
  const double tan_phi = std::tan(phi);
  const auto width = [&](double x) { return x <= foot ? x * tan_phi : (radius - x) / tan_phi; };
  const auto height = [&](double x) { return 2.0 * radius * x - radius * radius; };

  // Composite 5-point Gauss-Legendre on each side of the foot.
  static constexpr std::array<double, 5> node{0.0, -0.5384693101056831, 0.5384693101056831,
                                              -0.9061798459386640, 0.9061798459386640};
  static constexpr std::array<double, 5> weight{0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                                0.2369268850561891, 0.2369268850561891};
  constexpr int kPanels = 16;
  const auto integrate = [&](double lo, double hi) {
    double sum = 0.0;
    const double h = (hi - lo) / kPanels;
    for (int p = 0; p < kPanels; ++p) {
      const double mid = lo + (p + 0.5) * h;
      for (std::size_t i = 0; i < node.size(); ++i) {
        const double x = mid + 0.5 * h * node[i];
        sum += 0.5 * h * weight[i] * width(x) * height(x);
      }
    }
    return sum;
  };
  return integrate(0.0, foot) + integrate(foot, radius);
}

double angle_lemma_closed_form(double radius, double phi) {
  const double r2 = radius * radius;
  return r2 * r2 * std::sin(4.0 * phi) / 24.0;
}

}  // namespace vfunc
