#include "vfunc/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vfunc/error.hpp"

namespace vfunc::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json point_json(Point2 p) { return json::array({p.x, p.y}); }

}  // namespace

PointSet2 PointInput::as_point_set() const {
  if (dim != 2) throw Error(ErrorCode::InvalidArgument, "expected two-dimensional points");
  return PointSet2{points2};
}

int PointInput::index_of(const std::string& label) const {
  const std::size_t n = dim == 2 ? points2.size() : points3.size();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  int idx = -1;
  const auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), idx);
  if (ec == std::errc{} && ptr == label.data() + label.size() && idx >= 0 && static_cast<std::size_t>(idx) < n)
    return idx;
  throw Error(ErrorCode::InvalidArgument, "unknown vertex label '" + label + "'");
}

PointInput parse_points(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    parse_fail("expected an object with a \"points\" array");

  PointInput in;
  const json& pts = doc["points"];
  if (pts.empty()) parse_fail("\"points\" is empty");
  in.dim = pts[0].is_array() ? static_cast<int>(pts[0].size()) : 0;
  if (in.dim != 2 && in.dim != 3) parse_fail("points must have 2 or 3 coordinates");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const json& p = pts[i];
    if (!p.is_array() || static_cast<int>(p.size()) != in.dim)
      parse_fail("point " + std::to_string(i) + " has the wrong number of coordinates");
    for (const json& c : p)
      if (!c.is_number()) parse_fail("point " + std::to_string(i) + " has a non-numeric coordinate");
    if (in.dim == 2)
      in.points2.push_back({p[0].get<double>(), p[1].get<double>()});
    else
      in.points3.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
  }
  if (doc.contains("labels")) {
    const json& l = doc["labels"];
    if (!l.is_array() || l.size() != pts.size()) parse_fail("\"labels\" must match \"points\" in length");
    for (const json& s : l) {
      if (!s.is_string()) parse_fail("labels must be strings");
      in.labels.push_back(s.get<std::string>());
    }
  }
  return in;
}

PointInput read_points(const std::string& path) {
  std::ifstream f(path);
  if (!f) parse_fail("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_points(ss.str());
}

json to_json(const FunctionalReport& r) {
  json j{{"schema", kSchemaVersion}, {"kind", std::string(to_string(r.kind))}, {"total", r.total}};
  if (r.kind == FunctionalKind::Radius) j["alpha"] = r.alpha;
  j["per_simplex"] = r.per_simplex;
  return j;
}

json to_json(const ExperimentResult& r) {
  return json{{"schema", kSchemaVersion},
              {"name", r.name},
              {"seed", r.seed},
              {"point_count", r.point_count},
              {"values", r.values},
              {"sigma", r.sigma},
              {"verdict", r.verdict ? "pass" : "fail"},
              {"margin", r.margin}};
}

json to_json(const Triangulation2& t) {
  json pts = json::array();
  for (const Point2& p : t.positions()) pts.push_back(point_json(p));
  return json{{"schema", kSchemaVersion},
              {"points", pts},
              {"triangles", t.triangles()},
              {"signs", t.signs()},
              {"kind", t.kind() == TriKind::Geometric ? "geometric" : "topological"}};
}

json to_json(const SubdividedComplex2& sd) {
  json verts = json::array();
  for (const auto& v : sd.vertices)
    verts.push_back({{"simplex", v.simplex},
                     {"barycenter", point_json(v.barycenter)},
                     {"image", point_json(v.image)},
                     {"height", v.height}});
  json cells = json::array();
  for (const auto& c : sd.cells)
    cells.push_back({{"vertices", c.vertices},
                     {"source_vertex", c.source_vertex},
                     {"source_simplex", c.source_simplex},
                     {"source_sign", c.source_sign},
                     {"image_orientation", image_orientation(c, sd)}});
  return json{{"schema", kSchemaVersion}, {"vertices", verts}, {"cells", cells}};
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "schema,trial,triangulation,value,is_delaunay,is_max\n";
  for (const ScanRow& r : rows)
    os << kSchemaVersion << ',' << r.trial << ',' << r.triangulation << ',' << format_double(r.value) << ','
       << (r.is_delaunay ? 1 : 0) << ',' << (r.is_extremal ? 1 : 0) << '\n';
}

}  // namespace vfunc::io
