#pragma once

#include <vector>

#include "lfsweep/image.hpp"

namespace lfsweep {

enum class BorderMode {
  Zero,       // samples outside the support read as 0
  Replicate,  // indices clamp to the nearest edge pixel (per pass)
};

// Separable convolution with symmetric odd-length 1D taps, horizontal then
// vertical pass. With BorderMode::Zero this equals the dense 2D convolution
// with the outer-product kernel.
Image2D convolve_separable(const Image2D& img, const std::vector<double>& taps,
                           BorderMode border);

// Normalized Gaussian taps with radius ceil(3 * sigma); {1} when sigma <= 0.
std::vector<double> gaussian_taps(double sigma_px);

}  // namespace lfsweep
