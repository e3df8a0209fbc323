// Acceptance suite: one PASS/FAIL line per criterion. Seeds are fixed up
// front (derived from kDefaultSeed) and never adjusted after a run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vfunc/error.hpp"
#include "vfunc/experiments.hpp"
#include "vfunc/functional2d.hpp"
#include "vfunc/subdivision.hpp"

using namespace vfunc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::uint64_t derive(std::uint64_t criterion, std::uint64_t i) {
  return splitmix64(kDefaultSeed ^ (criterion << 32) ^ i);
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

bool is_obtuse(const Triangle2& t) {
  for (int k = 0; k < 3; ++k)
    if (dot(t[(k + 1) % 3] - t[k], t[(k + 2) % 3] - t[k]) < 0.0) return true;
  return false;
}

// Point sets shared by criteria 3, 4 and 5: n cycles through 4..8.
std::vector<PointSet2> scan_sets() {
  std::vector<PointSet2> sets;
  for (int i = 0; i < 100; ++i) sets.push_back(random_point_set(4 + i % 5, derive(3, i)));
  return sets;
}

Outcome octahedron() {
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentResult r = octahedron_counterexample();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double d = r.values.at("vf_delaunay_BE"), k = r.values.at("vf_folded_AC");
  return {r.verdict && secs < 60.0, fmt("Vf(D)=%.4f Vf(K)=%.4f (%.3fs)", d, k, secs)};
}

Outcome closed_form_vs_oracle() {
  std::mt19937_64 rng(derive(2, 0));
  std::uniform_real_distribution<double> u(-1, 1);
  int obtuse = 0, acute = 0, field_fail = 0, eq1_fail = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    Triangle2 t;
    do t = {{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    while (std::abs(signed_area(t)) < 0.02);
    const double cf = vf_triangle(t);
    const Triangulation2 single = delaunay(PointSet2{{t.a, t.b, t.c}});
    const McEstimate g = mc_integrate(support_box(single), [&](Point2 x) { return g_triangle(t, x); }, 100'000,
                                      derive(2, 1000 + i));
    const double z = std::abs(g.value - cf) / g.std_error;
    worst = std::max(worst, z);
    if (z > 3.0) ++field_fail;
    if (is_obtuse(t)) {
      ++obtuse;
    } else {
      ++acute;
      const McEstimate e1 = mc_integrate(t, [&](Point2 x) { return nearest_vertex(t, x).dist2; }, 100'000,
                                         derive(2, 2000 + i));
      const double z1 = std::abs(std::abs(e1.value) - cf) / e1.std_error;
      worst = std::max(worst, z1);
      if (z1 > 3.0) ++eq1_fail;
    }
  }
  return {obtuse >= 50 && field_fail == 0 && eq1_fail == 0,
          fmt("%d obtuse, %d acute; outside 3 sigma: field %d, nearest-vertex integral %d; max |z|=%.2f", obtuse,
              acute, field_fail, eq1_fail, worst)};
}

Outcome optimality(const std::vector<PointSet2>& sets) {
  long triangulations = 0, global_fail = 0, pointwise_fail = 0, points = 0;
  double min_margin = 1e300;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto all = enumerate_triangulations(sets[i]);
    const Triangulation2& d = all.front();
    const double vd = vf_triangulation(d).total;
    triangulations += static_cast<long>(all.size());
    for (std::size_t k = 1; k < all.size(); ++k) {
      const double vk = vf_triangulation(all[k]).total;
      min_margin = std::min(min_margin, vd - vk);
      if (vd < vk - kTieTolerance) ++global_fail;
    }
    // Sample box: bounding box grown by half the diameter on every side.
    double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
    for (Point2 p : sets[i].points) {
      lo_x = std::min(lo_x, p.x), hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y), hi_y = std::max(hi_y, p.y);
    }
    const double grow = 0.5 * std::max(hi_x - lo_x, hi_y - lo_y);
    std::mt19937_64 rng(derive(3, 1000 + i));
    std::uniform_real_distribution<double> ux(lo_x - grow, hi_x + grow), uy(lo_y - grow, hi_y + grow);
    for (int s = 0; s < 10'000; ++s) {
      const Point2 x{ux(rng), uy(rng)};
      const double gd = g_field(d, x);
      for (std::size_t k = 1; k < all.size(); ++k)
        if (g_field(all[k], x) > gd + kTieTolerance) ++pointwise_fail;
      ++points;
    }
  }
  return {global_fail == 0 && pointwise_fail == 0,
          fmt("%zu sets, %ld triangulations, min Vf(D)-Vf(K)=%.3g; %ld sampled points, %ld global and %ld pointwise "
              "violations",
              sets.size(), triangulations, min_margin, points, global_fail, pointwise_fail)};
}

Outcome identities(const std::vector<PointSet2>& sets) {
  double worst2 = 0.0, worst1 = 0.0;
  long rf2_fail = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto all = enumerate_triangulations(sets[i]);
    std::mt19937_64 rng(derive(4, i));
    const Triangulation2& k = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    const double rf2 = radius_functional(k, 2.0).total;
    worst2 = std::max(worst2, rel_err(3.0 * rajan_functional(k).total - 3.0 * vf_triangulation(k).total, rf2));
    double quarter = 0.0;
    for (std::size_t t = 0; t < k.size(); ++t) quarter += 0.25 * edge_length_product(k.triangle(t));
    worst1 = std::max(worst1, rel_err(quarter, radius_functional(k, 1.0).total));
    const double rd = radius_functional(all.front(), 2.0).total;
    for (const auto& t : all)
      if (radius_functional(t, 2.0).total < rd - kTieTolerance) ++rf2_fail;
  }
  return {worst2 <= 1e-10 && worst1 <= 1e-10 && rf2_fail == 0,
          fmt("max rel err Rf2 %.2e, Rf1 %.2e; Rf2 below Delaunay in %ld triangulations", worst2, worst1, rf2_fail)};
}

Outcome subdivision(const std::vector<PointSet2>& sets) {
  double worst = 0.0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto all = enumerate_triangulations(sets[i]);
    std::mt19937_64 rng(derive(5, i));
    const Triangulation2& k = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    worst = std::max(worst, rel_err(vf_via_sd(k), vf_triangulation(k).total));
  }
  double worst_lemma = 0.0;
  int vertices = 0, negative_cells = 0;
  for (int i = 0; i < 30; ++i) {
    const Triangulation2 d = delaunay(random_point_set(12, derive(5, 1000 + i)));
    const auto hull = convex_hull(d.positions());
    for (int v = 0; v < static_cast<int>(d.vertex_count()); ++v) {
      if (std::find(hull.begin(), hull.end(), v) != hull.end()) continue;
      const CancellationCheck c = interior_cancellation_check(d, v);
      worst_lemma = std::max(worst_lemma, std::abs(c.lhs - c.rhs) / std::max(1.0, std::abs(c.lhs)));
      for (int s : c.cell_signs) negative_cells += s < 0;
      ++vertices;
    }
  }
  return {worst <= 1e-9 && worst_lemma <= 1e-9,
          fmt("vf_via_sd max rel err %.2e on %zu triangulations; lemma max err %.2e over %d interior vertices "
              "(%d negative cells)",
              worst, sets.size(), worst_lemma, vertices, negative_cells)};
}

Outcome cell_decomposition() {
  int obtuse = 0, fail = 0, boundary = 0;
  double worst = 0.0;
  for (int i = 0; i < 30; ++i) {
    const Triangulation2 d = delaunay(random_point_set(6 + i % 7, derive(6, i)));
    if (!hull_opposite_angles_acute(d)) ++obtuse;
    const CellDecompositionCheck c = cell_decomposition_check(d, 1'000'000, derive(6, 1000 + i));
    const double z = std::abs(c.mc.value - c.closed_form) / c.mc.std_error;
    worst = std::max(worst, z);
    if (z > 3.0) ++fail;
    if (c.boundary_max_abs != 0.0) ++boundary;
  }
  return {obtuse >= 10 && fail == 0 && boundary == 0,
          fmt("30 sets (%d with an obtuse hull-opposite angle); outside 3 sigma: %d; max |z|=%.2f; nonzero on box "
              "boundary: %d",
              obtuse, fail, worst, boundary)};
}

Outcome angle_lemma() {
  double worst = 0.0;
  bool sign_change = false;
  for (int k = 1; k <= 50; ++k) {
    const double phi = (k - 0.5) / 50.0 * M_PI / 2.0;
    const double v = angle_lemma_volume(1.0, phi), c = angle_lemma_closed_form(1.0, phi);
    worst = std::max(worst, rel_err(v, c));
    if (phi > M_PI / 4 && v < 0.0) sign_change = true;
  }
  return {worst <= 1e-6 && sign_change, fmt("50 angles, max rel err %.2e, negative beyond pi/4: %s", worst,
                                            sign_change ? "yes" : "no")};
}

Outcome flip_law() {
  std::mt19937_64 rng(derive(8, 0));
  std::uniform_real_distribution<double> u(-1, 1);
  int tested = 0, nonzero = 0, bad = 0;
  while (tested < 10'000) {
    std::array<Point2, 4> q;
    for (auto& p : q) p = {u(rng), u(rng)};
    QuadDiagonals diag;
    try {
      diag = quad_diagonals(q);
    } catch (const Error&) {
      continue;
    }
    ++tested;
    const Point2 x{2 * u(rng), 2 * u(rng)};
    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return dist2(x, q[i]) < dist2(x, q[j]); });
    const double jump = dist2(x, q[order[2]]) - dist2(x, q[order[1]]);
    const Edge ab = Edge::of(order[0], order[1]);
    const bool diagonal = ab == diag.delaunay || ab == diag.other;
    const double delta = flip_delta(q, x);
    const bool ok = diagonal ? std::abs(delta - jump) <= 1e-9 : std::abs(delta) <= 1e-9;
    if (!ok) ++bad;
    if (std::abs(delta) > 1e-9) ++nonzero;
  }
  return {bad == 0, fmt("%d pairs, %d with a jump, %d violations", tested, nonzero, bad)};
}

Outcome topological() {
  const ExperimentResult r = topological_counterexample(10'000'000, kDefaultSeed);
  return {r.verdict,
          fmt("Vf(D)=%.5f Vf(K)=%.5f +- %.5f, difference %.1f SE; pointwise violations %.0f, ABC mismatches %.0f",
              r.values.at("vf_delaunay"), r.values.at("vf_folded_mc"), r.sigma.at("vf_folded_mc"),
              r.values.at("difference") / r.sigma.at("difference"), r.values.at("pointwise_violations"),
              r.values.at("abc_mismatches"))};
}

Outcome fold() {
  const ExperimentResult r = fold_region_probe(kDefaultSeed);
  return {r.verdict, fmt("census %.0f/%.0f, exterior point with contribution %.4f", r.values.at("cells_preserved"),
                         r.values.at("cells_reversed"), r.margin)};
}

}  // namespace

int main() {
  const std::vector<PointSet2> sets = scan_sets();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"octahedron golden values", octahedron},
      {"closed form vs Monte Carlo oracle", closed_form_vs_oracle},
      {"Delaunay optimality by enumeration", [&] { return optimality(sets); }},
      {"radius functional identities", [&] { return identities(sets); }},
      {"subdivision equivalence and interior cancellation", [&] { return subdivision(sets); }},
      {"Voronoi cell decomposition", cell_decomposition},
      {"angle lemma", angle_lemma},
      {"flip delta law", flip_law},
      {"topological counterexample", topological},
      {"fold region probe", fold},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
