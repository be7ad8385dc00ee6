#include "torelli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace torelli::cli {

namespace {

constexpr double kScale = 160.0;
constexpr double kMargin = 20.0;

double sx(double x) { return kMargin + x * kScale; }
double sy(double y) { return kMargin + (2.0 - y) * kScale; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Segments of {a x + b y = k} inside [0, 2]^2 for every k = -c mod 2.
void draw_line(std::ostringstream& svg, const torus::LatticeLine& line, const char* colour) {
  const double a = static_cast<double>(line.a());
  const double b = static_cast<double>(line.b());
  const double c = line.twice_c() / 2.0;
  const double lo = std::min(0.0, 2 * a) + std::min(0.0, 2 * b);
  const double hi = std::max(0.0, 2 * a) + std::max(0.0, 2 * b);
  for (double k = std::floor((lo + c) / 2.0) * 2.0 - c; k <= hi + 1e-9; k += 2.0) {
    std::vector<std::pair<double, double>> pts;
    auto add = [&](double x, double y) {
      if (x < -1e-9 || x > 2 + 1e-9 || y < -1e-9 || y > 2 + 1e-9) return;
      for (const auto& [px, py] : pts)
        if (std::abs(px - x) < 1e-9 && std::abs(py - y) < 1e-9) return;
      pts.emplace_back(x, y);
    };
    if (b != 0) {
      add(0, k / b);
      add(2, (k - 2 * a) / b);
    }
    if (a != 0) {
      add(k / a, 0);
      add((k - 2 * b) / a, 2);
    }
    if (pts.size() < 2) continue;
    svg << "  <line x1=\"" << fmt(sx(pts[0].first)) << "\" y1=\"" << fmt(sy(pts[0].second))
        << "\" x2=\"" << fmt(sx(pts[1].first)) << "\" y2=\"" << fmt(sy(pts[1].second))
        << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
  }
}

}  // namespace

std::string torus_svg(const std::vector<torus::LatticeLine>& lines,
                      const std::vector<torus::Point>& marked) {
  static constexpr const char* kColours[] = {"#c0392b", "#2471a3", "#1e8449"};
  std::ostringstream svg;
  const double size = 2 * kMargin + 2 * kScale;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\""
      << fmt(size) << "\">\n";
  svg << "  <rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin) << "\" width=\""
      << fmt(2 * kScale) << "\" height=\"" << fmt(2 * kScale)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < lines.size(); ++i) draw_line(svg, lines[i], kColours[i % 3]);
  for (const auto& p : marked) {
    // A marked point on the boundary is drawn at its representative in [0, 2).
    svg << "  <circle cx=\"" << fmt(sx(static_cast<double>(p.x))) << "\" cy=\""
        << fmt(sy(static_cast<double>(p.y))) << "\" r=\"5\" fill=\"black\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace torelli::cli
