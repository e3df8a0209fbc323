#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "svg.hpp"
#include "vfunc/error.hpp"
#include "vfunc/experiments.hpp"
#include "vfunc/functional2d.hpp"
#include "vfunc/io.hpp"

namespace vfunc::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string input;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 10'000'000;
  double alpha = 2.0;
  int dim = 2;
  std::string which;
  std::string out;
  std::string format;
  std::string diagonal;
  std::string view = "image";
  int n = 6;
  int trials = 20;
  unsigned threads = 1;
};

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + cfg.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw Error(ErrorCode::InvalidArgument, "--input is required");
}

std::pair<std::string, std::string> split_diagonal(const std::string& d) {
  if (const auto dash = d.find('-'); dash != std::string::npos) return {d.substr(0, dash), d.substr(dash + 1)};
  if (d.size() == 2) return {d.substr(0, 1), d.substr(1, 1)};
  throw Error(ErrorCode::InvalidArgument, "--diagonal must name two vertices, e.g. BE or 1-4");
}

int cmd_functional(const RunConfig& cfg, std::ostream& out) {
  require_input(cfg);
  const io::PointInput in = io::read_points(cfg.input);
  const std::string which = cfg.which.empty() ? "vf" : cfg.which;
  if (cfg.dim != in.dim)
    throw Error(ErrorCode::InvalidArgument, "--dim " + std::to_string(cfg.dim) + " does not match the input points");

  FunctionalReport report;
  if (cfg.dim == 3) {
    if (which != "vf") throw Error(ErrorCode::InvalidArgument, "only vf is available in three dimensions");
    if (in.points3.size() != 6) throw Error(ErrorCode::InvalidArgument, "--dim 3 expects the six octahedron vertices");
    if (cfg.diagonal.empty()) throw Error(ErrorCode::InvalidArgument, "--dim 3 needs --diagonal");
    const auto [u, v] = split_diagonal(cfg.diagonal);
    const TetComplex3 tets = tets_around_diagonal(in.points3, in.index_of(u), in.index_of(v));
    report.kind = FunctionalKind::Voronoi;
    for (const auto& tet : tets.tets()) {
      report.per_simplex.push_back(vf3(TetComplex3(tets.positions(), {tet})));
      report.total += report.per_simplex.back();
    }
  } else {
    const Triangulation2 d = delaunay(in.as_point_set());
    if (which == "vf")
      report = vf_triangulation(d);
    else if (which == "rajan")
      report = rajan_functional(d);
    else if (which == "rf")
      report = radius_functional(d, cfg.alpha);
    else
      throw Error(ErrorCode::InvalidArgument, "--which must be vf, rajan or rf");
  }

  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "schema,kind,simplex,value\n";
    for (std::size_t i = 0; i < report.per_simplex.size(); ++i)
      os << io::kSchemaVersion << ',' << to_string(report.kind) << ',' << i << ','
         << io::format_double(report.per_simplex[i]) << '\n';
    os << io::kSchemaVersion << ',' << to_string(report.kind) << ",total," << io::format_double(report.total) << '\n';
    emit(cfg, out, os.str());
  } else {
    emit(cfg, out, dump(io::to_json(report)));
  }
  return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const std::string which = cfg.which.empty() ? "vf" : cfg.which;
  ScanFunctional f;
  if (which == "vf")
    f = ScanFunctional::Voronoi;
  else if (which == "rf2")
    f = ScanFunctional::Radius2;
  else
    throw Error(ErrorCode::InvalidArgument, "--which must be vf or rf2");
  const ScanOutcome scan = optimality_scan(cfg.n, cfg.trials, cfg.seed, f);
  if (cfg.format == "json") {
    emit(cfg, out, dump(io::to_json(scan.result)));
  } else {
    std::ostringstream os;
    io::write_scan_csv(os, scan.rows);
    emit(cfg, out, os.str());
  }
  return scan.result.verdict ? kOk : kVerdictFail;
}

int cmd_counterexamples(const RunConfig& cfg, std::ostream& out) {
  const std::string which = cfg.which.empty() ? "all" : cfg.which;
  if (which != "all" && which != "topological" && which != "octahedron" && which != "fold")
    throw Error(ErrorCode::InvalidArgument, "--which must be topological, octahedron, fold or all");
  detail::validate_samples(cfg.samples);

  std::vector<ExperimentResult> results;
  if (which == "all" || which == "octahedron") results.push_back(octahedron_counterexample());
  if (which == "all" || which == "topological")
    results.push_back(topological_counterexample(cfg.samples, cfg.seed, cfg.threads));
  if (which == "all" || which == "fold") results.push_back(fold_region_probe(cfg.seed));

  bool pass = true;
  for (const auto& r : results) pass = pass && r.verdict;
  if (results.size() == 1) {
    emit(cfg, out, dump(io::to_json(results.front())));
  } else {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(io::to_json(r));
    emit(cfg, out, dump(json{{"schema", io::kSchemaVersion}, {"results", arr}}));
  }
  return pass ? kOk : kVerdictFail;
}

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  std::optional<Triangulation2> t;
  if (cfg.which == "topological") {
    t = validate_topological_configuration(topological_golden_points()).folded;
  } else if (cfg.which == "topological-delaunay") {
    t = validate_topological_configuration(topological_golden_points()).delaunay;
  } else if (cfg.which.empty()) {
    require_input(cfg);
    t = delaunay(io::read_points(cfg.input).as_point_set());
  } else {
    throw Error(ErrorCode::InvalidArgument, "--which must be topological or topological-delaunay");
  }

  svg::View view;
  if (cfg.view == "triangulation")
    view = svg::View::Triangulation;
  else if (cfg.view == "sd")
    view = svg::View::Subdivision;
  else if (cfg.view == "image")
    view = svg::View::Image;
  else
    throw Error(ErrorCode::InvalidArgument, "--view must be triangulation, sd or image");

  if (cfg.format == "json")
    emit(cfg, out, dump(view == svg::View::Triangulation ? io::to_json(*t) : io::to_json(barycentric_subdivide(*t))));
  else
    emit(cfg, out, svg::render(*t, view));
  return kOk;
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Voronoi functional of triangulations"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* functional = app.add_subcommand("functional", "Functional of the Delaunay triangulation of a point set");
  functional->add_option("--input", cfg.input, "Point-set JSON");
  functional->add_option("--which", cfg.which, "vf, rajan or rf");
  functional->add_option("--alpha", cfg.alpha, "Exponent for rf");
  functional->add_option("--dim", cfg.dim, "2 or 3")->check(CLI::IsMember({2, 3}));
  functional->add_option("--diagonal", cfg.diagonal, "Octahedron diagonal for --dim 3, e.g. BE");

  auto* scan = app.add_subcommand("scan", "Exhaustive optimality scan over random point sets");
  scan->add_option("--n", cfg.n, "Points per set (4..8)");
  scan->add_option("--trials", cfg.trials, "Number of point sets");
  scan->add_option("--which", cfg.which, "vf or rf2");

  auto* counter = app.add_subcommand("counterexamples", "Run the counterexample experiments");
  counter->add_option("--which", cfg.which, "topological, octahedron, fold or all");
  counter->add_option("--samples", cfg.samples, "Monte Carlo samples");
  counter->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");

  auto* render = app.add_subcommand("render", "SVG of a triangulation, its subdivision or its circumcenter image");
  render->add_option("--input", cfg.input, "Point-set JSON");
  render->add_option("--which", cfg.which, "topological or topological-delaunay instead of --input");
  render->add_option("--view", cfg.view, "triangulation, sd or image");

  for (auto* sub : {functional, scan, counter, render}) {
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
  }
  functional->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  counter->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));
  render->add_option("--format", cfg.format, "svg or json")->check(CLI::IsMember({"svg", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kParseError;
  }

  try {
    if (functional->parsed()) return cmd_functional(cfg, out);
    if (scan->parsed()) return cmd_scan(cfg, out);
    if (counter->parsed()) return cmd_counterexamples(cfg, out);
    return cmd_render(cfg, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << one_line(e.what()) << '\n';
    switch (e.code()) {
      case ErrorCode::ParseError: return kParseError;
      case ErrorCode::NotGeneralPosition: return kNotGeneralPosition;
      default: return kFailure;
    }
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kFailure;
  }
}

}  // namespace vfunc::cli
