#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>

namespace vfunc {

/// Relative tolerance used by every predicate in the library.
inline constexpr double kGeomTolerance = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Point3 operator*(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr Point3 operator*(Point3 a, double s) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr Point3 operator/(Point3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }
  friend constexpr bool operator==(Point3, Point3) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
constexpr Point3 cross(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
constexpr double norm2(Point2 a) { return dot(a, a); }
constexpr double norm2(Point3 a) { return dot(a, a); }
constexpr double dist2(Point2 a, Point2 b) { return norm2(a - b); }
constexpr double dist2(Point3 a, Point3 b) { return norm2(a - b); }
inline double norm(Point2 a) { return std::sqrt(norm2(a)); }
inline double norm(Point3 a) { return std::sqrt(norm2(a)); }

bool is_finite(Point2 p);
bool is_finite(Point3 p);

/// Vertices are kept in the order given; the signed area may have any sign.
struct Triangle2 {
  Point2 a, b, c;

  std::array<Point2, 3> vertices() const { return {a, b, c}; }
  Point2 operator[](int i) const { return i == 0 ? a : (i == 1 ? b : c); }
};

struct Tetrahedron3 {
  Point3 a, b, c, d;

  std::array<Point3, 4> vertices() const { return {a, b, c, d}; }
};

/// Center and radius of the smallest sphere through a simplex's vertices.
template <class P>
struct CircumData {
  P center;
  double radius = 0.0;
};
using Circle2 = CircumData<Point2>;
using Sphere3 = CircumData<Point3>;

double signed_area(const Triangle2& t);
double signed_volume(const Tetrahedron3& t);

// Orientation signs in {-1, 0, +1}; zero within kGeomTolerance of degenerate.
int orient2(Point2 a, Point2 b, Point2 c);
int orient2(const Triangle2& t);
int orient3(const Tetrahedron3& t);

// All throw Error(DegenerateSimplex) for degenerate input.
Circle2 circumcircle(const Triangle2& t);
Sphere3 circumcircle(Point3 a, Point3 b, Point3 c);
Sphere3 circumsphere(const Tetrahedron3& t);

/// +1 strictly inside the circumcircle, -1 outside, 0 on it, for a
/// positively oriented t. Reversing t's orientation flips the sign.
int in_circle(const Triangle2& t, Point2 p);

/// +1 strictly inside the circumsphere, -1 outside, 0 on it. Independent of
/// the orientation of t.
int in_sphere(const Tetrahedron3& t, Point3 p);

/// Closed containment; works for either orientation of t.
bool contains(const Triangle2& t, Point2 p);
bool contains(const Tetrahedron3& t, Point3 p);

struct VertexHit {
  int index = 0;  // 0, 1, 2 for a, b, c
  double dist2 = 0.0;
};

/// Ties go to the lowest vertex index.
VertexHit nearest_vertex(const Triangle2& t, Point2 p);

/// Nearest vertex whose connecting segment meets the closed triangle only in
/// that vertex. Returns nullopt ("inside") when p lies in the closed triangle.
std::optional<VertexHit> nearest_visible_vertex(const Triangle2& t, Point2 p);

/// True when the segment from p to `apex` meets the convex corner formed by
/// `apex` and its two neighbours only at `apex`.
bool visible_at_corner(Point2 apex, Point2 prev, Point2 next, Point2 p);

constexpr double paraboloid(Point2 x) { return norm2(x); }
constexpr Point3 lift(Point2 p) { return {p.x, p.y, norm2(p)}; }

/// f_A(x) = 2<x, A> - |A|^2, the tangent plane of the paraboloid at A.
constexpr double tangent_value(Point2 a, Point2 x) { return 2.0 * dot(x, a) - norm2(a); }
constexpr double tangent_value(Point3 a, Point3 x) { return 2.0 * dot(x, a) - norm2(a); }

}  // namespace vfunc
