#include "lfsweep/convolve.hpp"

#include <algorithm>
#include <cmath>

namespace lfsweep {

std::vector<double> gaussian_taps(double sigma_px) {
  if (sigma_px <= 0.0) return {1.0};
  const int radius = static_cast<int>(std::ceil(3.0 * sigma_px));
  std::vector<double> taps(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-0.5 * (i * i) / (sigma_px * sigma_px));
    taps[i + radius] = w;
    sum += w;
  }
  for (double& w : taps) w /= sum;
  return taps;
}

Image2D convolve_separable(const Image2D& img, const std::vector<double>& taps,
                           BorderMode border) {
  if (taps.size() % 2 == 0) {
    raise(ErrorCode::InvalidRange, "convolution taps must have odd length");
  }
  const int radius = static_cast<int>(taps.size() / 2);
  if (radius == 0) return img;

  const int w = img.width;
  const int h = img.height;
  Image2D tmp(w, h, img.pixel_pitch);
  Image2D out(w, h, img.pixel_pitch);

  // Horizontal pass.
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        int xs = x + k;
        if (border == BorderMode::Replicate) {
          xs = std::clamp(xs, 0, w - 1);
        } else if (xs < 0 || xs >= w) {
          continue;
        }
        acc += taps[k + radius] * img.at(xs, y);
      }
      tmp.at(x, y) = acc;
    }
  }

  // Vertical pass.
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        int ys = y + k;
        if (border == BorderMode::Replicate) {
          ys = std::clamp(ys, 0, h - 1);
        } else if (ys < 0 || ys >= h) {
          continue;
        }
        acc += taps[k + radius] * tmp.at(x, ys);
      }
      out.at(x, y) = acc;
    }
  }
  return out;
}

}  // namespace lfsweep
