#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vfunc/integrate.hpp"
#include "vfunc/subdivision.hpp"
#include "vfunc/tri2d.hpp"

namespace vfunc {

/// Outcome of one reproducible experiment. The verdict is derived only from
/// the recorded values.
struct ExperimentResult {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t point_count = 0;
  std::map<std::string, double> values;
  std::map<std::string, double> sigma;
  bool verdict = false;
  double margin = 0.0;
};

/// Tolerance for ties between triangulation functionals.
inline constexpr double kTieTolerance = 1e-9;

/// n points uniform in the unit square, jittered by 1e-6 * diameter until no
/// three are collinear and no four cocircular.
PointSet2 random_point_set(std::size_t n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Optimality scans over all geometric triangulations.
// ---------------------------------------------------------------------------

enum class ScanFunctional {
  Voronoi,  // Delaunay must attain the maximum
  Radius2,  // Delaunay must attain the minimum
};

struct ScanRow {
  int trial = 0;
  int triangulation = 0;  // 0 is the Delaunay triangulation
  double value = 0.0;
  bool is_delaunay = false;
  bool is_extremal = false;  // attains the scan's extremum within kTieTolerance
};

struct ScanOutcome {
  ExperimentResult result;
  std::vector<ScanRow> rows;
};

/// Requires 4 <= n <= 8. Point set of trial i is random_point_set(n, splitmix64(seed + i)).
ScanOutcome optimality_scan(int n, int trials, std::uint64_t seed,
                            ScanFunctional functional = ScanFunctional::Voronoi);

// ---------------------------------------------------------------------------
// Folded topological triangulation of eight points.
// Labels: A=0, B=1, C=2, D=3, E=4, F=5, G=6, H=7.
// ---------------------------------------------------------------------------

namespace topo {
inline constexpr int A = 0, B = 1, C = 2, D = 3, E = 4, F = 5, G = 6, H = 7;
inline constexpr std::uint64_t kSearchSeed = 41;
inline constexpr int kGoldenVersion = 1;
}  // namespace topo

/// The abstract complex both triangulations share.
std::vector<TriangleIds> topological_complex();

/// Frozen configuration found by search_topological_configuration(kSearchSeed).
PointSet2 topological_golden_points();

/// Symmetric template plus seeded jitter, rounded to 1e-4, retried until
/// validate_topological_configuration accepts it.
PointSet2 search_topological_configuration(std::uint64_t seed);

struct TopologicalPair {
  Triangulation2 delaunay;
  Triangulation2 folded;  // B and C exchanged
};

/// Throws ConstructionFailed unless the Delaunay triangulation of `ps` is the
/// expected complex with all triangles acute and the folded one is all-acute.
TopologicalPair validate_topological_configuration(const PointSet2& ps);

ExperimentResult topological_counterexample(std::uint64_t samples = 10'000'000,
                                            std::uint64_t seed = kDefaultSeed, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Three-dimensional counterexample and fold-over probe.
// ---------------------------------------------------------------------------

namespace octa {
inline constexpr int A = 0, B = 1, C = 2, D = 3, E = 4, X = 5;
inline constexpr double kDelaunayValue = 3413.75;
inline constexpr double kFoldedValue = 3432.96;
inline constexpr double kTolerance = 0.05;
}  // namespace octa

/// The six octahedron vertices A, B, C, D, E, X.
std::vector<Point3> octahedron_points();
const std::array<std::string, 6>& octahedron_labels();

/// The four tetrahedra sharing the diagonal u-v of an octahedron.
TetComplex3 tets_around_diagonal(const std::vector<Point3>& points, int u, int v);

/// Number of (tetrahedron, other vertex) pairs with the vertex strictly inside
/// the circumsphere.
int insphere_violations(const TetComplex3& t);

ExperimentResult octahedron_counterexample();

/// Tetrahedron ABCD with acute isosceles faces ABD, CBD and isosceles faces
/// BAC, DAC obtuse at B and D. Throws ConstructionFailed if the shape is off.
Tetrahedron3 fold_tetrahedron();

ExperimentResult fold_region_probe(std::uint64_t seed = kDefaultSeed);

}  // namespace vfunc
