#pragma once

#include <map>
#include <string>

#include "ants/engine.hpp"

namespace ants {

/// Injective map from cell state to a grey level, state 1 lightest.
struct Palette {
    std::map<int, int> grey;
};

/// Evenly spaced greys from 255 (state 1) down to 0 (state n).
Palette default_palette(int n);

/// Plain-text portable pixmap (P3) of the visited bounding box, one
/// scale x scale pixel block per cell. Unvisited cells get a background
/// color distinct from every state grey.
std::string render_states_ppm(const Universe& u, const Palette& palette, int scale = 1);

struct TruchetOptions {
    bool diagonals = false;
    bool highlight_principal = false;
    int margin = 2;  // cells of all-cold exterior drawn around the track
};

/// Scalable vector graphics of the Truchet tiling over the track's
/// neighborhood: two quarter-circle paths per cell, hot-tile diagonals and
/// a highlighted principal contour on request.
std::string render_truchet_svg(const Universe& u, const TruchetOptions& opts = {});

}  // namespace ants
