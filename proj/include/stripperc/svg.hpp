#pragma once

#include <optional>
#include <string>

#include "stripperc/experiment.hpp"

namespace stripperc {

/// Vertical band [y_min, y_max] of the domain to show.
struct ClipWindow {
  double y_min = -1.0;
  double y_max = 1.0;
};

/// Layers are always emitted in the order hexagons, path 1, path 2.
struct RenderSpec {
  bool hexagons = true;  // cells touching the first path, in their first-coloring colors
  bool first_path = true;
  bool second_path = true;
  std::optional<ClipWindow> clip;
  double pixels_per_unit = 300.0;
};

/// Static SVG 1.1 document. Byte-for-byte deterministic for fixed inputs.
std::string render_svg(const TrialDetail& trial, const RenderSpec& spec);

}  // namespace stripperc
