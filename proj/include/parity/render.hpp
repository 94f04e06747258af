#pragma once

#include <string>

#include "parity/graph.hpp"

namespace parity {

struct RenderOptions {
  bool show_vis = false;
};

/// SVG 1.1 drawing: vertices as circles, unhappy vertices as squares, G
/// solid, H dashed, Vis light. Element classes are "vertex", "unhappy", "g",
/// "h", "vis" and "warning". A happy set that fails verification is still
/// drawn, under a warning banner.
std::string render_svg(const Instance& inst, const EdgeSet* happy, const RenderOptions& options = {});

}  // namespace parity
