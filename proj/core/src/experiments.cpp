#include "vfunc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "vfunc/error.hpp"
#include "vfunc/functional2d.hpp"

namespace vfunc {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

double diameter(std::span<const Point2> pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, dist2(pts[i], pts[j]));
  return std::sqrt(d);
}

bool acute(const Triangle2& t) {
  for (int k = 0; k < 3; ++k) {
    const Point2 a = t[k], b = t[(k + 1) % 3], c = t[(k + 2) % 3];
    if (dot(b - a, c - a) <= 0.0) return false;
  }
  return true;
}

bool general_position(const PointSet2& ps) {
  if (find_collinear_triple(ps)) return false;
  return ps.size() > 16 || !find_cocircular_quadruple(ps);
}

}  // namespace

PointSet2 random_point_set(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  PointSet2 ps;
  ps.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ps.points.push_back({uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 1.0)});
  for (int attempt = 0; !general_position(ps); ++attempt) {
    if (attempt > 1000) throw Error(ErrorCode::NotGeneralPosition, "could not jitter point set into general position");
    const double scale = 1e-6 * diameter(ps.points);
    for (auto& p : ps.points) p = p + Point2{uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
  }
  return ps;
}

// ---------------------------------------------------------------------------

ScanOutcome optimality_scan(int n, int trials, std::uint64_t seed, ScanFunctional functional) {
  if (n < 4 || n > 8) throw Error(ErrorCode::InvalidArgument, "optimality_scan needs 4 <= n <= 8");
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "optimality_scan needs at least one trial");
  const bool maximize = functional == ScanFunctional::Voronoi;

  ScanOutcome out;
  out.result.name = maximize ? "optimality_scan_vf" : "optimality_scan_rf2";
  out.result.seed = seed;
  out.result.point_count = static_cast<std::size_t>(n);

  int failures = 0;
  std::size_t total = 0;
  double margin = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    const PointSet2 ps = random_point_set(n, splitmix64(seed + static_cast<std::uint64_t>(trial)));
    const auto all = enumerate_triangulations(ps);
    std::vector<double> values;
    values.reserve(all.size());
    for (const auto& t : all)
      values.push_back(maximize ? vf_triangulation(t).total : radius_functional(t, 2.0).total);

    const double best = maximize ? *std::max_element(values.begin(), values.end())
                                 : *std::min_element(values.begin(), values.end());
    const bool delaunay_wins = maximize ? values[0] >= best - kTieTolerance : values[0] <= best + kTieTolerance;
    if (!delaunay_wins) ++failures;
    for (std::size_t i = 1; i < values.size(); ++i)
      margin = std::min(margin, maximize ? values[0] - values[i] : values[i] - values[0]);

    for (std::size_t i = 0; i < values.size(); ++i) {
      const bool extremal = std::abs(values[i] - best) <= kTieTolerance;
      out.rows.push_back({trial, static_cast<int>(i), values[i], i == 0, extremal});
    }
    total += all.size();
  }

  out.result.values["trials"] = trials;
  out.result.values["triangulations"] = static_cast<double>(total);
  out.result.values["failures"] = failures;
  out.result.verdict = failures == 0;
  out.result.margin = std::isfinite(margin) ? margin : 0.0;
  return out;
}

// ---------------------------------------------------------------------------

std::vector<TriangleIds> topological_complex() {
  using namespace topo;
  return {{A, B, C}, {D, C, B}, {A, C, E}, {C, F, E}, {C, D, F}, {A, G, B}, {B, G, H}, {B, H, D}};
}

PointSet2 topological_golden_points() {
  // v1, produced by search_topological_configuration(topo::kSearchSeed).
  return PointSet2{{
      {0.0096, 1.6435},    // A
      {-0.7584, 0.0041},   // B
      {0.7608, 0.0146},    // C
      {0.0073, -1.6340},   // D
      {1.9933, 0.6445},    // E
      {1.9962, -0.6490},   // F
      {-1.9767, 0.6019},   // G
      {-1.9903, -0.6110},  // H
  }};
}

TopologicalPair validate_topological_configuration(const PointSet2& ps) {
  if (ps.size() != 8) throw Error(ErrorCode::ConstructionFailed, "topological configuration needs 8 points");
  Triangulation2 d = [&] {
    try {
      return delaunay(ps);
    } catch (const Error& e) {
      throw Error(ErrorCode::ConstructionFailed, std::string("Delaunay construction failed: ") + e.what());
    }
  }();
  if (find_cocircular_quadruple(ps)) throw Error(ErrorCode::ConstructionFailed, "configuration has four cocircular points");

  std::vector<TriangleIds> expected = topological_complex();
  for (auto& t : expected) std::sort(t.begin(), t.end());
  std::sort(expected.begin(), expected.end());
  if (d.canonical() != expected)
    throw Error(ErrorCode::ConstructionFailed, "Delaunay triangulation does not have the expected combinatorics");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!acute(d.triangle(i))) throw Error(ErrorCode::ConstructionFailed, "Delaunay triangle is not acute");

  std::vector<int> swap{0, 1, 2, 3, 4, 5, 6, 7};
  std::swap(swap[topo::B], swap[topo::C]);
  Triangulation2 k = make_topological(d, swap);
  for (std::size_t i = 0; i < k.size(); ++i)
    if (!acute(k.triangle(i))) throw Error(ErrorCode::ConstructionFailed, "folded triangle is not acute");
  return {std::move(d), std::move(k)};
}

PointSet2 search_topological_configuration(std::uint64_t seed) {
  // Template: A, D on the vertical axis, B and C mirrored inside, E/F and
  // G/H mirrored outside.
  constexpr double a = 1.6, c = 0.8, ex = 2.0, ey = 0.6;
  const std::array<Point2, 8> base{{{0, a}, {-c, 0}, {c, 0}, {0, -a}, {ex, ey}, {ex, -ey}, {-ex, ey}, {-ex, -ey}}};
  std::mt19937_64 rng(splitmix64(seed));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PointSet2 ps;
    for (const Point2& p : base) {
      const Point2 q = p + Point2{uniform(rng, -0.05, 0.05), uniform(rng, -0.05, 0.05)};
      ps.points.push_back({std::round(q.x * 1e4) / 1e4, std::round(q.y * 1e4) / 1e4});
    }
    try {
      validate_topological_configuration(ps);
      return ps;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::ConstructionFailed, "no valid topological configuration found");
}

ExperimentResult topological_counterexample(std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  using namespace topo;
  const PointSet2 ps = topological_golden_points();
  const auto [d, k] = validate_topological_configuration(ps);
  const auto& p = ps.points;

  Box2 box = support_box(d);
  const Box2 kb = support_box(k);
  box.lo = {std::min(box.lo.x, kb.lo.x), std::min(box.lo.y, kb.lo.y)};
  box.hi = {std::max(box.hi.x, kb.hi.x), std::max(box.hi.y, kb.hi.y)};

  const auto hull = convex_hull(ps.points);
  const auto in_hull = [&](Point2 x) {
    for (std::size_t i = 0; i < hull.size(); ++i)
      if (cross(p[hull[(i + 1) % hull.size()]] - p[hull[i]], x - p[hull[i]]) < 0.0) return false;
    return true;
  };
  const auto n2 = [&](int i, int j, int l, Point2 x) { return nearest_vertex({p[i], p[j], p[l]}, x).dist2; };
  const Triangle2 abc{p[A], p[B], p[C]};

  std::atomic<long> violations{0}, abc_samples{0}, abc_mismatches{0}, outside_nonzero{0};
  const auto field = [&](Point2 x) {
    const double gk = g_field(k, x);
    const double gd = g_field(d, x);
    if (gk < gd - kTieTolerance) ++violations;
    if (!in_hull(x) && (gk != 0.0 || gd != 0.0)) ++outside_nonzero;
    if (contains(abc, x)) {
      ++abc_samples;
      const double alpha = std::min(n2(A, B, E, x), n2(B, E, F, x));
      const double beta = std::min(n2(A, C, G, x), n2(C, G, H, x));
      const double gamma = n2(A, B, C, x);
      if (std::abs(alpha + beta - gamma - gk) > kTieTolerance) ++abc_mismatches;
    }
    return gk;
  };
  const McEstimate mc = mc_integrate(box, field, samples, seed, threads);

  ExperimentResult r;
  r.name = "topological_counterexample";
  r.seed = seed;
  r.point_count = ps.size();
  const double vf_d = vf_triangulation(d).total;
  const double diff = mc.value - vf_d;
  const double se = mc.std_error;  // the Delaunay value is exact
  r.values["golden_version"] = kGoldenVersion;
  r.values["samples"] = static_cast<double>(samples);
  r.values["vf_delaunay"] = vf_d;
  r.values["vf_folded_closed_form"] = vf_triangulation(k).total;
  r.values["vf_folded_mc"] = mc.value;
  r.values["difference"] = diff;
  r.values["pointwise_violations"] = static_cast<double>(violations.load());
  r.values["abc_samples"] = static_cast<double>(abc_samples.load());
  r.values["abc_mismatches"] = static_cast<double>(abc_mismatches.load());
  r.values["outside_nonzero"] = static_cast<double>(outside_nonzero.load());
  r.sigma["vf_folded_mc"] = se;
  r.sigma["difference"] = se;
  r.margin = diff - 10.0 * se;
  r.verdict = r.margin > 0.0 && violations == 0 && abc_mismatches == 0 && outside_nonzero == 0;
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Point3> octahedron_points() {
  return {{7.99, 5.80, 1.65}, {9.86, 0.00, 1.65}, {7.80, -5.80, 1.65},
          {7.89, 0.00, 6.14}, {-2.00, -0.01, 4.02}, {6.89, 0.00, -4.14}};
}

const std::array<std::string, 6>& octahedron_labels() {
  static const std::array<std::string, 6> labels{"A", "B", "C", "D", "E", "X"};
  return labels;
}

TetComplex3 tets_around_diagonal(const std::vector<Point3>& points, int u, int v) {
  if (points.size() != 6) throw Error(ErrorCode::InvalidArgument, "octahedron needs exactly 6 points");
  if (u == v || u < 0 || v < 0 || u >= 6 || v >= 6) throw Error(ErrorCode::InvalidArgument, "invalid diagonal");
  const Point3 axis = points[v] - points[u];
  const Point3 mid = 0.5 * (points[u] + points[v]);
  std::vector<int> ring;
  for (int i = 0; i < 6; ++i)
    if (i != u && i != v) ring.push_back(i);
  // Angular order of the equator around the axis.
  const Point3 n = axis / norm(axis);
  Point3 e1 = points[ring[0]] - mid;
  e1 = e1 - dot(e1, n) * n;
  e1 = e1 / norm(e1);
  const Point3 e2 = cross(n, e1);
  std::sort(ring.begin(), ring.end(), [&](int i, int j) {
    const Point3 pi = points[i] - mid, pj = points[j] - mid;
    return std::atan2(dot(pi, e2), dot(pi, e1)) < std::atan2(dot(pj, e2), dot(pj, e1));
  });
  std::vector<std::array<int, 4>> tets;
  for (std::size_t i = 0; i < 4; ++i) tets.push_back({u, v, ring[i], ring[(i + 1) % 4]});
  return TetComplex3(points, std::move(tets));
}

int insphere_violations(const TetComplex3& t) {
  int count = 0;
  for (std::size_t i = 0; i < t.tets().size(); ++i) {
    const auto& tet = t.tets()[i];
    const Tetrahedron3 geo = t.tetrahedron(i);
    for (std::size_t p = 0; p < t.positions().size(); ++p) {
      if (std::find(tet.begin(), tet.end(), static_cast<int>(p)) != tet.end()) continue;
      if (in_sphere(geo, t.positions()[p]) > 0) ++count;
    }
  }
  return count;
}

ExperimentResult octahedron_counterexample() {
  const auto pts = octahedron_points();
  const TetComplex3 d = tets_around_diagonal(pts, octa::B, octa::E);
  const TetComplex3 k = tets_around_diagonal(pts, octa::A, octa::C);

  ExperimentResult r;
  r.name = "octahedron_counterexample";
  r.point_count = pts.size();
  const double vf_d = vf3(d), vf_k = vf3(k);
  const int violations = insphere_violations(d);
  r.values["vf_delaunay_BE"] = vf_d;
  r.values["vf_folded_AC"] = vf_k;
  r.values["expected_delaunay_BE"] = octa::kDelaunayValue;
  r.values["expected_folded_AC"] = octa::kFoldedValue;
  r.values["tolerance"] = octa::kTolerance;
  r.values["insphere_violations_BE"] = violations;
  r.values["insphere_violations_AC"] = insphere_violations(k);
  r.margin = vf_k - vf_d;
  r.verdict = std::abs(vf_d - octa::kDelaunayValue) <= octa::kTolerance &&
              std::abs(vf_k - octa::kFoldedValue) <= octa::kTolerance && vf_k > vf_d && violations == 0;
  return r;
}

// ---------------------------------------------------------------------------

Tetrahedron3 fold_tetrahedron() {
  const Tetrahedron3 t{{-1.0, 0.0, 0.0}, {0.0, 0.5, 0.3}, {1.0, 0.0, 0.0}, {0.0, -0.5, 0.3}};
  const auto angle_sign = [](Point3 apex, Point3 p, Point3 q) { return dot(p - apex, q - apex); };
  const auto acute3 = [&](Point3 a, Point3 b, Point3 c) {
    return angle_sign(a, b, c) > 0.0 && angle_sign(b, c, a) > 0.0 && angle_sign(c, a, b) > 0.0;
  };
  const bool ok = acute3(t.a, t.b, t.d) && acute3(t.c, t.b, t.d) && angle_sign(t.b, t.a, t.c) < 0.0 &&
                  angle_sign(t.d, t.a, t.c) < 0.0 && std::abs(dist2(t.b, t.a) - dist2(t.b, t.c)) < 1e-12 &&
                  std::abs(dist2(t.d, t.a) - dist2(t.d, t.c)) < 1e-12 &&
                  std::abs(dist2(t.a, t.b) - dist2(t.a, t.d)) < 1e-12 &&
                  std::abs(dist2(t.c, t.b) - dist2(t.c, t.d)) < 1e-12;
  if (!ok) throw Error(ErrorCode::ConstructionFailed, "fold tetrahedron does not have the required face angles");
  return t;
}

ExperimentResult fold_region_probe(std::uint64_t seed) {
  const Tetrahedron3 tet = fold_tetrahedron();
  const TetComplex3 complex({tet.a, tet.b, tet.c, tet.d}, {{0, 1, 2, 3}});
  const auto sd = barycentric_subdivide(complex);
  const OrientationCensus census = orientation_census(sd);

  // tet vertex indices: A=0, B=1, C=2, D=3
  int flipped = 0, flipped_at_ac = 0;
  for (const FaceFlag& f : face_fold_census(tet)) {
    if (!f.reversed) continue;
    ++flipped;
    const bool on_ac = (f.vertex == 0 && f.edge_other == 2) || (f.vertex == 2 && f.edge_other == 0);
    if (on_ac) ++flipped_at_ac;
  }

  const Point3 e = circumcircle(tet.b, tet.a, tet.c).center;
  std::mt19937_64 rng(splitmix64(seed));
  std::optional<Point3> found;
  double contribution = 0.0;
  long tried = 0;
  for (; tried < 1'000'000 && !found; ++tried) {
    const Point3 x = e + Point3{uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5)};
    if (contains(tet, x)) continue;
    const double h = sd_field(sd, x);
    if (h <= 0.0) continue;
    const double da = dist2(x, tet.a), db = dist2(x, tet.b), dc = dist2(x, tet.c);
    if (!(db < dc && dc < da)) continue;
    if (std::abs(h - (dc - db)) > 1e-9 * std::max(1.0, dc)) continue;
    found = x;
    contribution = h;
  }

  ExperimentResult r;
  r.name = "fold_region_probe";
  r.seed = seed;
  r.point_count = 4;
  r.values["cells_preserved"] = census.preserved;
  r.values["cells_reversed"] = census.reversed;
  r.values["boundary_flags_reversed"] = flipped;
  r.values["boundary_flags_reversed_at_AC"] = flipped_at_ac;
  r.values["probe_attempts"] = static_cast<double>(tried);
  if (found) {
    r.values["x"] = found->x;
    r.values["y"] = found->y;
    r.values["z"] = found->z;
    r.values["contribution"] = contribution;
    r.values["dist2_A"] = dist2(*found, tet.a);
    r.values["dist2_B"] = dist2(*found, tet.b);
    r.values["dist2_C"] = dist2(*found, tet.c);
  }
  r.margin = contribution;
  r.verdict = census.preserved == 16 && census.reversed == 8 && flipped == 4 && flipped_at_ac == 4 &&
              found.has_value() && contribution > 0.0;
  return r;
}

}  // namespace vfunc
