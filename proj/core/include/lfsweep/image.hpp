#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lfsweep/error.hpp"

namespace lfsweep {

// Single grayscale slice or capture. Row-major, data[y * width + x],
// intensities nonnegative with nominal range [0, 1]. The physical origin
// sits at the image center: column (width - 1) / 2 maps to x = 0 mm.
struct Image2D {
  int width = 0;
  int height = 0;
  double pixel_pitch = 1.0;  // mm per pixel
  std::vector<double> data;

  Image2D() = default;
  Image2D(int w, int h, double pitch, double fill = 0.0)
      : width(w),
        height(h),
        pixel_pitch(pitch),
        data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }

  bool same_shape(const Image2D& other) const {
    return width == other.width && height == other.height;
  }

  // Physical coordinates (mm) of a pixel center, origin at the image center.
  double phys_x(int ix) const { return (ix - 0.5 * (width - 1)) * pixel_pitch; }
  double phys_y(int iy) const { return (iy - 0.5 * (height - 1)) * pixel_pitch; }

  // Continuous (fractional) pixel coordinate of a physical position.
  double col_at(double x_mm) const { return x_mm / pixel_pitch + 0.5 * (width - 1); }
  double row_at(double y_mm) const { return y_mm / pixel_pitch + 0.5 * (height - 1); }
};

// Bilinear sample at continuous pixel coordinates; zero outside the support.
// Integer coordinates hit pixel centers exactly (no interpolation).
double bilinear_at(const Image2D& img, double fx, double fy);

std::optional<ValidationIssue> validate(const Image2D& img);
void require_valid(const Image2D& img);

}  // namespace lfsweep
