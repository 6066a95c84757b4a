#include "latticecm/svg.hpp"

#include <sstream>

#include "latticecm/errors.hpp"
#include "latticecm/gale.hpp"

namespace latticecm {

namespace {

constexpr long kSize = 480;
constexpr long kCenter = 240;
constexpr long kRadius = 200;

// Nearest integer to a/b for b > 0, ties away from zero; exact.
long round_quotient(const Int& a, const Int& b) {
  if (a < 0) {
    Int r = floor_div(2 * (-a) + b, 2 * b);
    return -r.get_si();
  }
  Int r = floor_div(2 * a + b, 2 * b);
  return r.get_si();
}

}  // namespace

std::string render_gale_svg(const IntMatrix& points) {
  if (points.cols() != 2)
    throw Error(ErrorCode::WrongCodim, "SVG rendering requires an n x 2 matrix");
  Int scale = 1;
  for (Index i = 0; i < points.rows(); ++i)
    for (Index j = 0; j < 2; ++j) scale = std::max(scale, Int(abs(points(i, j))));

  auto px = [&](const Int& x) {
    return kCenter + round_quotient(x * kRadius, scale);
  };
  auto py = [&](const Int& y) {
    return kCenter - round_quotient(y * kRadius, scale);
  };

  bool shade = quadrant_coverage(GaleDiagram{points}).all();

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize
      << " " << kSize << "\">\n";
  svg << "  <desc>Gale diagram, " << points.rows() << " points</desc>\n";
  svg << "  <defs>\n"
      << "    <marker id=\"tip\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">\n"
      << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#202020\"/>\n"
      << "    </marker>\n"
      << "  </defs>\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" fill=\"#ffffff\"/>\n";
  if (shade) {
    const char* colors[4] = {"#4060c0", "#40a040", "#c0a020", "#c04040"};
    // Q1 upper right, Q2 upper left, Q3 lower left, Q4 lower right.
    const long x0[4] = {kCenter, 0, 0, kCenter};
    const long y0[4] = {0, 0, kCenter, kCenter};
    for (int q = 0; q < 4; ++q)
      svg << "  <rect class=\"quadrant\" x=\"" << x0[q] << "\" y=\"" << y0[q]
          << "\" width=\"" << kCenter << "\" height=\"" << kCenter
          << "\" fill=\"" << colors[q] << "\" fill-opacity=\"0.15\"/>\n";
  }
  svg << "  <line class=\"axis\" x1=\"0\" y1=\"" << kCenter << "\" x2=\""
      << kSize << "\" y2=\"" << kCenter
      << "\" stroke=\"#808080\" stroke-width=\"1\"/>\n";
  svg << "  <line class=\"axis\" x1=\"" << kCenter << "\" y1=\"0\" x2=\""
      << kCenter << "\" y2=\"" << kSize
      << "\" stroke=\"#808080\" stroke-width=\"1\"/>\n";
  for (Index i = 0; i < points.rows(); ++i) {
    long x = px(points(i, 0)), y = py(points(i, 1));
    svg << "  <line class=\"arrow\" x1=\"" << kCenter << "\" y1=\"" << kCenter
        << "\" x2=\"" << x << "\" y2=\"" << y
        << "\" stroke=\"#202020\" stroke-width=\"2\" "
           "marker-end=\"url(#tip)\"/>\n";
    long lx = x + (x >= kCenter ? 6 : -26);
    long ly = y + (y >= kCenter ? 16 : -8);
    svg << "  <text class=\"label\" x=\"" << lx << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"14\">b" << (i + 1)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace latticecm
