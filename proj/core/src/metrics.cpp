#include "lfsweep/metrics.hpp"

#include <cmath>
#include <limits>
#include <span>
#include <string>

#include "lfsweep/backprojection.hpp"
#include "lfsweep/capture.hpp"

namespace lfsweep {
namespace {

double psnr_impl(std::span<const double> test, std::span<const double> ref) {
  double tt = 0.0, tr = 0.0;
  for (std::size_t i = 0; i < test.size(); ++i) {
    tt += test[i] * test[i];
    tr += test[i] * ref[i];
  }
  const double alpha = tt > 0.0 ? tr / tt : 1.0;

  double mse = 0.0;
  double peak = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double d = alpha * test[i] - ref[i];
    mse += d * d;
    peak = std::max(peak, ref[i]);
  }
  mse /= static_cast<double>(ref.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / mse);
}

}  // namespace

double psnr(const Image2D& test, const Image2D& ref) {
  if (!test.same_shape(ref)) {
    raise(ErrorCode::DimensionMismatch, "PSNR operands must share dimensions");
  }
  return psnr_impl(test.data, ref.data);
}

double psnr(const LightField4D& test, const LightField4D& ref) {
  if (!test.same_shape(ref)) {
    raise(ErrorCode::DimensionMismatch, "PSNR operands must share dimensions");
  }
  return psnr_impl(test.data, ref.data);
}

NoiseSplit noise_split(const FocalStack& stack, const ObjectScene& scene,
                       const AngularSampling& angular, int num_threads) {
  require_uniform(stack);
  require_valid(scene);
  for (std::size_t m = 0; m < stack.focal_depths_mm.size(); ++m) {
    bool matched = false;
    for (double zn : scene.depths_mm) {
      if (std::abs(stack.focal_depths_mm[m] - zn) <= kDepthMatchTolMm) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      raise(ErrorCode::DepthMismatch,
            "focal depth " + std::to_string(stack.focal_depths_mm[m]) +
                " mm does not coincide with any scene slice depth");
    }
  }

  const FocalStack clear = capture_clear(scene, stack.focal_depths_mm);
  FocalStack residual;
  residual.focal_depths_mm = stack.focal_depths_mm;
  residual.images.reserve(stack.images.size());
  for (std::size_t m = 0; m < stack.images.size(); ++m) {
    Image2D r = stack.images[m];
    if (!r.same_shape(clear.images[m])) {
      raise(ErrorCode::DimensionMismatch, "stack and scene dimensions differ");
    }
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] -= clear.images[m].data[i];
    residual.images.push_back(std::move(r));
  }

  NoiseSplit split;
  split.signal = reconstruct(clear, angular, num_threads);
  split.noise = reconstruct(residual, angular, num_threads);
  return split;
}

double energy(const LightField4D& lf) {
  double acc = 0.0;
  for (double v : lf.data) acc += v * v;
  return acc;
}

}  // namespace lfsweep
