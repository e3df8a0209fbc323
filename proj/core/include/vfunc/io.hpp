#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "vfunc/experiments.hpp"
#include "vfunc/functional2d.hpp"
#include "vfunc/subdivision.hpp"
#include "vfunc/tri2d.hpp"

namespace vfunc::io {

inline constexpr int kSchemaVersion = 1;

/// Points read from {"points": [[x, y(, z)], ...], "labels": [...]}.
struct PointInput {
  int dim = 2;
  std::vector<Point2> points2;
  std::vector<Point3> points3;
  std::vector<std::string> labels;  // empty when absent

  PointSet2 as_point_set() const;
  /// Index of `label`, or of the decimal index when no labels are given.
  int index_of(const std::string& label) const;
};

/// Throws Error(ParseError) on malformed text or shape.
PointInput parse_points(const std::string& text);
PointInput read_points(const std::string& path);

nlohmann::json to_json(const FunctionalReport& r);
nlohmann::json to_json(const ExperimentResult& r);
nlohmann::json to_json(const Triangulation2& t);
nlohmann::json to_json(const SubdividedComplex2& sd);

/// trial,triangulation,value,is_delaunay,is_max with a leading schema column.
void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows);

/// Shortest decimal form that round-trips; identical across runs.
std::string format_double(double v);

}  // namespace vfunc::io
