#include "stripperc/svg.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace stripperc {

namespace {

constexpr double kMargin = 0.05;

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", v);
  // Avoid "-0.000".
  if (std::string(buffer) == "-0.000") return "0.000";
  return buffer;
}

struct Canvas {
  double ppu;
  double sx(double x) const { return x * ppu; }
  double sy(double y) const { return -y * ppu; }
};

void emit_polyline(std::ostream& out, const Canvas& canvas, const Polyline& points,
                   const char* attributes) {
  out << "<polyline " << attributes << " points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out << ' ';
    out << num(canvas.sx(points[i].x)) << ',' << num(canvas.sy(points[i].y));
  }
  out << "\"/>\n";
}

}  // namespace

std::string render_svg(const TrialDetail& trial, const RenderSpec& spec) {
  if (!(spec.pixels_per_unit > 0.0)) throw std::invalid_argument("pixels_per_unit must be > 0");
  const Domain& domain = trial.first.domain();
  const Canvas canvas{spec.pixels_per_unit};

  const ClipWindow window = spec.clip.value_or(ClipWindow{});
  if (!(window.y_max > window.y_min)) throw std::invalid_argument("clip window is empty");
  const double half_width = 1.0 / std::sqrt(3.0) + domain.scale() + kMargin;
  const double y_top = window.y_max + kMargin;
  const double y_bottom = window.y_min - kMargin;
  const double view_x = canvas.sx(-half_width);
  const double view_y = canvas.sy(y_top);
  const double view_w = canvas.sx(2 * half_width);
  const double view_h = (y_top - y_bottom) * canvas.ppu;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(view_w)
      << "\" height=\"" << num(view_h) << "\" viewBox=\"" << num(view_x) << ' ' << num(view_y)
      << ' ' << num(view_w) << ' ' << num(view_h) << "\">\n";
  out << "<title>n=" << trial.result.n << " k=" << trial.result.k
      << " trial=" << trial.result.trial << " distance=" << num(trial.result.distance)
      << "</title>\n";

  if (spec.hexagons) {
    const double stroke = 0.04 * domain.scale() * canvas.ppu;
    out << "<g id=\"hexagons\" stroke=\"#808080\" stroke-width=\"" << num(stroke) << "\">\n";
    for (const HexCoord& c : cells_along(domain, trial.first_path)) {
      const LatticeVertex o = domain.lattice_center(c);
      const std::array<LatticeVertex, 6> corners{{{o.x, o.y + 2},
                                                  {o.x - 1, o.y + 1},
                                                  {o.x - 1, o.y - 1},
                                                  {o.x, o.y - 2},
                                                  {o.x + 1, o.y - 1},
                                                  {o.x + 1, o.y + 1}}};
      out << "<polygon fill=\"" << (trial.first.at(c) == Color::White ? "#ffffff" : "#000000")
          << "\" points=\"";
      for (std::size_t i = 0; i < corners.size(); ++i) {
        const Point2D p = domain.position(corners[i]);
        if (i) out << ' ';
        out << num(canvas.sx(p.x)) << ',' << num(canvas.sy(p.y));
      }
      out << "\"/>\n";
    }
    out << "</g>\n";
  }

  const double line_width = 0.25 * domain.scale() * canvas.ppu;
  if (spec.first_path) {
    out << "<g id=\"path1\">\n";
    const std::string attributes = "fill=\"none\" stroke=\"#606060\" stroke-width=\"" +
                                   num(line_width) + "\" stroke-linejoin=\"round\"";
    emit_polyline(out, canvas, to_polyline(domain, trial.first_path), attributes.c_str());
    out << "</g>\n";
  }
  if (spec.second_path) {
    out << "<g id=\"path2\">\n";
    const std::string attributes =
        "fill=\"none\" stroke=\"#a0a0a0\" stroke-width=\"" + num(line_width) +
        "\" stroke-dasharray=\"" + num(2 * line_width) + ',' + num(line_width) +
        "\" stroke-linejoin=\"round\"";
    emit_polyline(out, canvas, to_polyline(domain, trial.second_path), attributes.c_str());
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace stripperc
