#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace vfunc::svg {

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 20.0;

struct Viewport {
  double minx, miny, scale;

  std::string xy(Point2 p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", kMargin + (p.x - minx) * scale,
                  kSize - kMargin - (p.y - miny) * scale);
    return buf;
  }
};

Viewport fit(const std::vector<Point2>& pts) {
  double minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
  for (const Point2& p : pts) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double extent = std::max({maxx - minx, maxy - miny, 1e-12});
  return {minx, miny, (kSize - 2.0 * kMargin) / extent};
}

void polygon(std::string& out, const Viewport& vp, const Triangle2& t, bool negative) {
  out += "<polygon class=\"";
  out += negative ? "neg" : "pos";
  out += "\" points=\"" + vp.xy(t.a) + ' ' + vp.xy(t.b) + ' ' + vp.xy(t.c) + "\"/>\n";
}

}  // namespace

std::string render(const Triangulation2& t, View view) {
  std::vector<Triangle2> cells;
  std::vector<bool> negative;
  if (view == View::Triangulation) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      cells.push_back(t.triangle(i));
      negative.push_back(t.signs()[i] < 0);
    }
  } else {
    const auto sd = barycentric_subdivide(t);
    for (const auto& c : sd.cells) {
      cells.push_back(view == View::Image ? sd.image_cell(c) : sd.source_cell(c));
      negative.push_back(c.source_sign * image_orientation(c, sd) < 0);
    }
  }

  std::vector<Point2> pts(t.positions());
  for (const Triangle2& c : cells)
    for (Point2 p : c.vertices()) pts.push_back(p);
  const Viewport vp = fit(pts);

  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
      "<style>polygon{stroke:#333;stroke-width:1;fill-opacity:0.5}"
      ".pos{fill:#cfe3f5}.neg{fill:#e8746c}circle{fill:#000}</style>\n";
  for (std::size_t i = 0; i < cells.size(); ++i) polygon(out, vp, cells[i], negative[i]);
  for (const Point2& p : t.positions()) {
    const std::string c = vp.xy(p);
    const auto comma = c.find(',');
    out += "<circle cx=\"" + c.substr(0, comma) + "\" cy=\"" + c.substr(comma + 1) + "\" r=\"3\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace vfunc::svg
