#pragma once

#include <string>

#include "tiledim/tiling.hpp"

namespace tiledim {

struct SvgOptions {
    bool separations = false;  // overlay interior separations as thick lines
    bool labels = true;        // box ids at box centres
};

// Renders a 2-tiling into a 1000x1000 viewBox, [-1,1]^2 mapped onto it
// with the second axis pointing up. Output is a pure function of the input.
std::string render_svg(const Tiling& t, const SvgOptions& options = {});

}  // namespace tiledim
