#include "lfsweep/patterns.hpp"

#include <cmath>

namespace lfsweep {
namespace {

// Shapes are placed in unit coordinates u = x / (w - 1), v = y / (h - 1)
// and kept away from each other so the three-plane benchmark scene has
// mostly disjoint slice supports.

bool in_disk(double u, double v, double cu, double cv, double r) {
  const double du = u - cu, dv = v - cv;
  return du * du + dv * dv <= r * r;
}

}  // namespace

Image2D make_test_pattern(const std::string& name, int width, int height, double pixel_pitch) {
  if (width <= 0 || height <= 0) {
    raise(ErrorCode::DimensionMismatch, "pattern dimensions must be positive");
  }
  Image2D img(width, height, pixel_pitch);

  auto fill = [&](auto&& predicate) {
    for (int y = 0; y < height; ++y) {
      const double v = height > 1 ? static_cast<double>(y) / (height - 1) : 0.5;
      for (int x = 0; x < width; ++x) {
        const double u = width > 1 ? static_cast<double>(x) / (width - 1) : 0.5;
        if (predicate(u, v, x, y)) img.at(x, y) = 1.0;
      }
    }
  };

  if (name == "disk") {
    fill([](double u, double v, int, int) { return in_disk(u, v, 0.32, 0.32, 0.16); });
  } else if (name == "ring") {
    fill([](double u, double v, int, int) {
      return in_disk(u, v, 0.70, 0.34, 0.16) && !in_disk(u, v, 0.70, 0.34, 0.10);
    });
  } else if (name == "cross") {
    fill([](double u, double v, int, int) {
      const bool horiz = std::abs(u - 0.50) <= 0.20 && std::abs(v - 0.72) <= 0.035;
      const bool vert = std::abs(u - 0.50) <= 0.035 && std::abs(v - 0.72) <= 0.20;
      return horiz || vert;
    });
  } else if (name == "dots") {
    fill([](double u, double v, int, int) {
      for (int gy = 0; gy < 3; ++gy) {
        for (int gx = 0; gx < 3; ++gx) {
          if (in_disk(u, v, 0.25 + 0.25 * gx, 0.25 + 0.25 * gy, 0.05)) return true;
        }
      }
      return false;
    });
  } else if (name == "bars") {
    fill([](double u, double, int, int) { return std::fmod(u, 0.25) < 0.125; });
  } else if (name == "checker") {
    fill([](double, double, int x, int y) { return ((x / 8) + (y / 8)) % 2 == 0; });
  } else if (name == "vbar") {
    // Narrow centered vertical bar; one sharp line in the EPI.
    fill([&](double, double, int x, int) { return std::abs(x - 0.5 * (width - 1)) <= 1.0; });
  } else {
    raise(ErrorCode::BadConfig, "unknown test pattern '" + name + "'");
  }
  return img;
}

const std::vector<std::string>& test_pattern_names() {
  static const std::vector<std::string> names = {"disk", "ring",    "cross", "dots",
                                                 "bars", "checker", "vbar"};
  return names;
}

}  // namespace lfsweep
