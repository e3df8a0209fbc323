#include "vfunc/geom.hpp"

#include <algorithm>
#include <string>

#include "vfunc/error.hpp"

namespace vfunc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::NonConvexQuad: return "NonConvexQuad";
    case ErrorCode::NotInteriorEdge: return "NotInteriorEdge";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::CollinearImage: return "CollinearImage";
    case ErrorCode::InvalidRegion: return "InvalidRegion";
    case ErrorCode::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorCode::NotInteriorVertex: return "NotInteriorVertex";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }
bool is_finite(Point3 p) { return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z); }

double signed_area(const Triangle2& t) { return 0.5 * cross(t.b - t.a, t.c - t.a); }

double signed_volume(const Tetrahedron3& t) {
  return dot(t.b - t.a, cross(t.c - t.a, t.d - t.a)) / 6.0;
}

namespace {

int sign_with_tolerance(double value, double scale) {
  if (std::abs(value) <= kGeomTolerance * scale) return 0;
  return value > 0.0 ? 1 : -1;
}

[[noreturn]] void throw_degenerate(const char* what) {
  throw Error(ErrorCode::DegenerateSimplex, std::string("degenerate simplex in ") + what);
}

}  // namespace

int orient2(Point2 a, Point2 b, Point2 c) {
  const Point2 u = b - a;
  const Point2 v = c - a;
  const double scale = std::max({norm2(u), norm2(v), norm2(c - b)});
  return sign_with_tolerance(cross(u, v), scale);
}

int orient2(const Triangle2& t) { return orient2(t.a, t.b, t.c); }

int orient3(const Tetrahedron3& t) {
  const Point3 u = t.b - t.a, v = t.c - t.a, w = t.d - t.a;
  const double m = std::max({norm(u), norm(v), norm(w)});
  return sign_with_tolerance(dot(u, cross(v, w)), m * m * m);
}

Circle2 circumcircle(const Triangle2& t) {
  if (orient2(t) == 0) throw_degenerate("circumcircle");
  const Point2 u = t.b - t.a;
  const Point2 v = t.c - t.a;
  const double d = 2.0 * cross(u, v);
  const double uu = norm2(u), vv = norm2(v);
  const Point2 offset{(v.y * uu - u.y * vv) / d, (u.x * vv - v.x * uu) / d};
  return {t.a + offset, norm(offset)};
}

Sphere3 circumcircle(Point3 a, Point3 b, Point3 c) {
  const Point3 u = b - a, v = c - a;
  const Point3 w = cross(u, v);
  const double ww = norm2(w);
  if (ww <= kGeomTolerance * kGeomTolerance * norm2(u) * norm2(v) || ww == 0.0)
    throw_degenerate("circumcircle3");
  const Point3 offset = (norm2(u) * cross(v, w) + norm2(v) * cross(w, u)) / (2.0 * ww);
  return {a + offset, norm(offset)};
}

Sphere3 circumsphere(const Tetrahedron3& t) {
  if (orient3(t) == 0) throw_degenerate("circumsphere");
  const Point3 u = t.b - t.a, v = t.c - t.a, w = t.d - t.a;
  const double det = 2.0 * dot(u, cross(v, w));
  const Point3 offset = (norm2(u) * cross(v, w) + norm2(v) * cross(w, u) + norm2(w) * cross(u, v)) / det;
  return {t.a + offset, norm(offset)};
}

int in_circle(const Triangle2& t, Point2 p) {
  if (orient2(t) == 0) throw_degenerate("in_circle");
  const Point2 a = t.a - p, b = t.b - p, c = t.c - p;
  const double la = norm2(a), lb = norm2(b), lc = norm2(c);
  const double det = la * cross(b, c) + lb * cross(c, a) + lc * cross(a, b);
  const double m = std::max({la, lb, lc});
  return sign_with_tolerance(det, m * m);
}

int in_sphere(const Tetrahedron3& t, Point3 p) {
  const Sphere3 s = circumsphere(t);
  const double r2 = s.radius * s.radius;
  return sign_with_tolerance(r2 - dist2(p, s.center), r2);
}

bool contains(const Triangle2& t, Point2 p) {
  const double o = signed_area(t);
  if (o == 0.0) return false;
  const double s = o > 0.0 ? 1.0 : -1.0;
  return s * cross(t.b - t.a, p - t.a) >= 0.0 && s * cross(t.c - t.b, p - t.b) >= 0.0 &&
         s * cross(t.a - t.c, p - t.c) >= 0.0;
}

bool contains(const Tetrahedron3& t, Point3 p) {
  const double v = signed_volume(t);
  if (v == 0.0) return false;
  const double s = v > 0.0 ? 1.0 : -1.0;
  const auto vol = [](Point3 a, Point3 b, Point3 c, Point3 d) {
    return dot(b - a, cross(c - a, d - a));
  };
  return s * vol(p, t.b, t.c, t.d) >= 0.0 && s * vol(t.a, p, t.c, t.d) >= 0.0 &&
         s * vol(t.a, t.b, p, t.d) >= 0.0 && s * vol(t.a, t.b, t.c, p) >= 0.0;
}

VertexHit nearest_vertex(const Triangle2& t, Point2 p) {
  VertexHit best{0, dist2(t.a, p)};
  for (int i = 1; i < 3; ++i) {
    const double d = dist2(t[i], p);
    if (d < best.dist2) best = {i, d};
  }
  return best;
}

bool visible_at_corner(Point2 apex, Point2 prev, Point2 next, Point2 p) {
  // Write p - apex = s (prev - apex) + t (next - apex); the corner is the cone s, t >= 0.
  const Point2 u = prev - apex, v = next - apex, w = p - apex;
  const double det = cross(u, v);
  const double s = cross(w, v) / det;
  const double t = cross(u, w) / det;
  return s < 0.0 || t < 0.0;
}

std::optional<VertexHit> nearest_visible_vertex(const Triangle2& t, Point2 p) {
  if (orient2(t) == 0) throw_degenerate("nearest_visible_vertex");
  if (contains(t, p)) return std::nullopt;
  std::optional<VertexHit> best;
  for (int i = 0; i < 3; ++i) {
    const Point2 apex = t[i];
    if (!visible_at_corner(apex, t[(i + 1) % 3], t[(i + 2) % 3], p)) continue;
    const double d = dist2(apex, p);
    if (!best || d < best->dist2) best = VertexHit{i, d};
  }
  return best;
}

}  // namespace vfunc
