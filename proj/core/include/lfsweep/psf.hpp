#pragma once

#include <vector>

#include "lfsweep/image.hpp"

namespace lfsweep {

// Defocus blur width below which the kernel collapses to the identity.
inline constexpr double kPsfIdentitySigmaPx = 0.25;

// Gaussian defocus model. The blur width grows linearly with the axial
// distance from the focal plane:
//   sigma_px(dz) = sigma_coefficient * na * |dz| / pixel_pitch
// so sigma_px(0) = 0 and an in-focus slice passes through unchanged.
struct PsfModel {
  double na = 0.4;           // numerical aperture, (0, 1)
  double pixel_pitch = 1.0;  // mm per pixel of the images being blurred
  double sigma_coefficient = 1.0;

  double sigma_px(double dz_mm) const;
};

void require_valid(const PsfModel& psf);

// Discrete normalized Gaussian kernel for a slice dz_mm away from the
// focal plane, truncated at radius ceil(3 sigma) and renormalized to sum
// to one. Returns a 1x1 identity kernel when sigma_px < 0.25.
Image2D psf_kernel(const PsfModel& psf, double dz_mm);

// The 1D taps of the same kernel (it is separable); {1} when in focus.
std::vector<double> psf_taps(const PsfModel& psf, double dz_mm);

}  // namespace lfsweep
