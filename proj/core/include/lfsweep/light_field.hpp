#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lfsweep/error.hpp"

namespace lfsweep {

// Uniform angular grid on [-xi_max, +xi_max] x [-eta_max, +eta_max].
// xi and eta are dimensionless ray slopes (tan of the propagation angle),
// so a ray displaces by z * xi millimetres over an axial distance z.
// With an odd sample count the exact zero slope is always a sample.
struct AngularSampling {
  double xi_max = 0.0;
  int n_xi = 1;
  double eta_max = 0.0;
  int n_eta = 1;

  // Sample i of n on [-extent, +extent]; the endpoints and (for odd n) the
  // central zero are exact in floating point.
  static double sample(double extent, int n, int i) {
    if (n <= 1) return 0.0;
    return extent * (static_cast<double>(2 * i - (n - 1)) / (n - 1));
  }
  double xi(int i) const { return sample(xi_max, n_xi, i); }
  double eta(int j) const { return sample(eta_max, n_eta, j); }

  bool operator==(const AngularSampling&) const = default;
};

// Dense 4D light field L(x, y, xi, eta) parameterized on the z = 0
// principal plane. Layout is row-major over (x, y, xi, eta): eta varies
// fastest, x slowest. Spatial axes share the pixel grid conventions of
// Image2D (center origin).
struct LightField4D {
  int width = 0;
  int height = 0;
  double pixel_pitch = 1.0;  // mm per pixel on the spatial axes
  AngularSampling angular;
  double principal_plane_z = 0.0;  // mm
  std::vector<double> data;

  LightField4D() = default;
  LightField4D(int w, int h, double pitch, const AngularSampling& ang)
      : width(w),
        height(h),
        pixel_pitch(pitch),
        angular(ang),
        data(static_cast<std::size_t>(w) * h * ang.n_xi * ang.n_eta, 0.0) {}

  std::size_t index(int ix, int iy, int iu, int iv) const {
    return ((static_cast<std::size_t>(ix) * height + iy) * angular.n_xi + iu) *
               angular.n_eta +
           iv;
  }
  double& at(int ix, int iy, int iu, int iv) { return data[index(ix, iy, iu, iv)]; }
  double at(int ix, int iy, int iu, int iv) const { return data[index(ix, iy, iu, iv)]; }

  std::size_t sample_count() const {
    return static_cast<std::size_t>(width) * height * angular.n_xi * angular.n_eta;
  }

  bool same_shape(const LightField4D& other) const {
    return width == other.width && height == other.height &&
           angular.n_xi == other.angular.n_xi && angular.n_eta == other.angular.n_eta;
  }

  double phys_x(int ix) const { return (ix - 0.5 * (width - 1)) * pixel_pitch; }
  double phys_y(int iy) const { return (iy - 0.5 * (height - 1)) * pixel_pitch; }
};

// Bilinear sample over the spatial plane at a fixed angular bin; zero
// outside the spatial support.
double bilinear_xy_at(const LightField4D& lf, double fx, double fy, int iu, int iv);

std::optional<ValidationIssue> validate(const LightField4D& lf);
void require_valid(const LightField4D& lf);

}  // namespace lfsweep
