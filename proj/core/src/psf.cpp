#include "lfsweep/psf.hpp"

#include <cmath>

#include "lfsweep/convolve.hpp"

namespace lfsweep {

double PsfModel::sigma_px(double dz_mm) const {
  return sigma_coefficient * na * std::abs(dz_mm) / pixel_pitch;
}

void require_valid(const PsfModel& psf) {
  if (!(psf.na > 0.0 && psf.na < 1.0)) {
    raise(ErrorCode::InvalidNA, "numerical aperture must lie in (0, 1)");
  }
  if (!(psf.pixel_pitch > 0.0)) {
    raise(ErrorCode::InvalidRange, "pixel_pitch must be positive");
  }
  if (!(psf.sigma_coefficient > 0.0)) {
    raise(ErrorCode::InvalidRange, "sigma_coefficient must be positive");
  }
}

std::vector<double> psf_taps(const PsfModel& psf, double dz_mm) {
  require_valid(psf);
  const double sigma = psf.sigma_px(dz_mm);
  if (sigma < kPsfIdentitySigmaPx) return {1.0};
  return gaussian_taps(sigma);
}

Image2D psf_kernel(const PsfModel& psf, double dz_mm) {
  const std::vector<double> taps = psf_taps(psf, dz_mm);
  const int size = static_cast<int>(taps.size());
  Image2D kernel(size, size, psf.pixel_pitch);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      kernel.at(x, y) = taps[x] * taps[y];
    }
  }
  return kernel;
}

}  // namespace lfsweep
