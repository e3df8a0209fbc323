#pragma once

// Reference implementations used as test oracles. They deliberately avoid the
// library's algorithms: brute force, textbook formulas or plain sampling.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "vfunc/geom.hpp"

namespace oracle {

using vfunc::Point2;
using vfunc::Point3;

inline double d2(Point2 a, Point2 b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); }

inline double area2(Point2 a, Point2 b, Point2 c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

/// Circumcenter by intersecting two perpendicular bisectors.
inline Point2 circumcenter(Point2 a, Point2 b, Point2 c) {
  const double a1 = b.x - a.x, b1 = b.y - a.y, c1 = 0.5 * (b.x * b.x - a.x * a.x + b.y * b.y - a.y * a.y);
  const double a2 = c.x - a.x, b2 = c.y - a.y, c2 = 0.5 * (c.x * c.x - a.x * a.x + c.y * c.y - a.y * a.y);
  const double det = a1 * b2 - a2 * b1;
  return {(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
}

/// All triangles whose circumcircle has no other point inside.
inline std::vector<std::array<int, 3>> brute_delaunay(const std::vector<Point2>& p) {
  std::vector<std::array<int, 3>> out;
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (std::abs(area2(p[i], p[j], p[k])) < 1e-14) continue;
        const Point2 c = circumcenter(p[i], p[j], p[k]);
        const double r2 = d2(c, p[i]);
        bool empty = true;
        for (int m = 0; m < n && empty; ++m)
          if (m != i && m != j && m != k && d2(c, p[m]) < r2) empty = false;
        if (empty) out.push_back({i, j, k});
      }
  return out;
}

inline bool segments_cross(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double d1 = area2(a, b, c), d2v = area2(a, b, d), d3 = area2(c, d, a), d4 = area2(c, d, b);
  return ((d1 > 0) != (d2v > 0)) && ((d3 > 0) != (d4 > 0));
}

/// Number of triangulations as the number of maximal non-crossing edge sets
/// (points in general position).
inline long count_triangulations(const std::vector<Point2>& p) {
  std::vector<std::array<int, 2>> edges;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(p.size()); ++j) edges.push_back({i, j});
  const std::size_t m = edges.size();
  std::vector<std::vector<bool>> cross(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto& e = edges[i];
      const auto& f = edges[j];
      if (e[0] == f[0] || e[0] == f[1] || e[1] == f[0] || e[1] == f[1]) continue;
      cross[i][j] = segments_cross(p[e[0]], p[e[1]], p[f[0]], p[f[1]]);
    }
  std::vector<int> state(m, 0);  // 1 = taken
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      for (std::size_t e = 0; e < m; ++e) {
        if (state[e]) continue;
        bool blocked = false;
        for (std::size_t f = 0; f < m && !blocked; ++f) blocked = state[f] && cross[e][f];
        if (!blocked) return;
      }
      ++count;
      return;
    }
    bool free = true;
    for (std::size_t f = 0; f < i && free; ++f) free = !(state[f] && cross[i][f]);
    if (free) {
      state[i] = 1;
      rec(i + 1);
      state[i] = 0;
    }
    rec(i + 1);
  };
  rec(0);
  return count;
}

inline long catalan(int k) {
  long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

/// Pointwise field of one triangle from first principles: nearest vertex
/// minus nearest vertex reachable by a segment that does not cross the
/// opposite edge; zero visible term on the closed triangle.
inline double g_triangle(Point2 a, Point2 b, Point2 c, Point2 x) {
  const std::array<Point2, 3> v{a, b, c};
  double nearest = 1e300;
  for (Point2 q : v) nearest = std::min(nearest, d2(q, x));
  const double s = area2(a, b, c);
  const bool inside = area2(a, b, x) * s >= 0 && area2(b, c, x) * s >= 0 && area2(c, a, x) * s >= 0;
  if (inside) return nearest;
  double visible = 1e300;
  for (int i = 0; i < 3; ++i)
    if (!segments_cross(x, v[i], v[(i + 1) % 3], v[(i + 2) % 3])) visible = std::min(visible, d2(v[i], x));
  return nearest - visible;
}

/// Textbook Voronoi functional of a triangle: area/12 (a^2+b^2+c^2) - area R^2 / 3.
inline double vf_triangle(Point2 a, Point2 b, Point2 c) {
  const double la = std::sqrt(d2(b, c)), lb = std::sqrt(d2(c, a)), lc = std::sqrt(d2(a, b));
  const double area = 0.5 * area2(a, b, c);
  const double r = la * lb * lc / (4.0 * std::abs(area));
  return area / 12.0 * (la * la + lb * lb + lc * lc) - area * r * r / 3.0;
}

struct Estimate {
  double mean = 0.0;
  double se = 0.0;
};

/// Plain Monte Carlo over a box with std distributions.
inline Estimate mc_box(Point2 lo, Point2 hi, const std::function<double(Point2)>& f, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y);
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = f({ux(rng), uy(rng)});
    s += v;
    s2 += v * v;
  }
  const double area = (hi.x - lo.x) * (hi.y - lo.y);
  const double mean = s / n;
  const double var = std::max(0.0, s2 / n - mean * mean);
  return {area * mean, area * std::sqrt(var / (n - 1))};
}

/// Integral over a triangle by splitting into k^2 similar pieces and using
/// the centroid of each.
inline double refine_triangle(Point2 a, Point2 b, Point2 c, const std::function<double(Point2)>& f, int k) {
  const Point2 u = (b - a) / k, v = (c - a) / k;
  const double piece = 0.5 * area2(a, b, c) / (static_cast<double>(k) * k);
  double sum = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; i + j < k; ++j) {
      const Point2 p0 = a + i * u + j * v;
      sum += f(p0 + (u + v) / 3.0);
      if (i + j + 1 < k) sum += f(p0 + 2.0 * (u + v) / 3.0);
    }
  return sum * piece;
}

}  // namespace oracle
