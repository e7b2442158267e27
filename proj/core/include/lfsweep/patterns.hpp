#pragma once

#include <string>
#include <vector>

#include "lfsweep/image.hpp"

namespace lfsweep {

// Procedural grayscale test charts. Deterministic, binary intensity.
// Names: "disk", "ring", "cross", "dots", "bars", "checker", "vbar".
Image2D make_test_pattern(const std::string& name, int width, int height, double pixel_pitch);

const std::vector<std::string>& test_pattern_names();

}  // namespace lfsweep
