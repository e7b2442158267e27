#include "lfsweep/capture.hpp"

#include <cmath>
#include <string>

#include "lfsweep/convolve.hpp"
#include "lfsweep/parallel.hpp"

namespace lfsweep {
namespace {

void check_focal_depths(const std::vector<double>& depths) {
  if (depths.empty()) {
    raise(ErrorCode::InvalidRange, "at least one focal depth is required");
  }
  for (std::size_t i = 0; i < depths.size(); ++i) {
    if (!std::isfinite(depths[i])) {
      raise(ErrorCode::NonFinite, "focal depth " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(depths[i] > depths[i - 1])) {
      raise(ErrorCode::NonMonotoneDepths, "focal depths must be strictly increasing");
    }
  }
}

}  // namespace

FocalStack capture(const ObjectScene& scene, const PsfModel& psf,
                   const std::vector<double>& focal_depths_mm, int num_threads) {
  require_valid(scene);
  require_valid(psf);
  check_focal_depths(focal_depths_mm);
  const Image2D& first = scene.slices.front();
  if (psf.pixel_pitch != first.pixel_pitch) {
    raise(ErrorCode::DimensionMismatch, "PSF pixel pitch does not match the scene's");
  }

  FocalStack stack;
  stack.focal_depths_mm = focal_depths_mm;
  stack.images.resize(focal_depths_mm.size());

  parallel_for(0, static_cast<int>(focal_depths_mm.size()), num_threads, [&](int m) {
    Image2D out(first.width, first.height, first.pixel_pitch);
    for (int s = 0; s < scene.slice_count(); ++s) {
      const double dz = focal_depths_mm[m] - scene.depths_mm[s];
      const std::vector<double> taps = psf_taps(psf, dz);
      if (taps.size() == 1) {
        for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += scene.slices[s].data[i];
      } else {
        const Image2D blurred = convolve_separable(scene.slices[s], taps, BorderMode::Zero);
        for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += blurred.data[i];
      }
    }
    stack.images[m] = std::move(out);
  });
  return stack;
}

FocalStack capture_clear(const ObjectScene& scene, const std::vector<double>& focal_depths_mm) {
  require_valid(scene);
  check_focal_depths(focal_depths_mm);
  const Image2D& first = scene.slices.front();

  FocalStack stack;
  stack.focal_depths_mm = focal_depths_mm;
  stack.images.reserve(focal_depths_mm.size());
  for (double zm : focal_depths_mm) {
    const Image2D* match = nullptr;
    for (int s = 0; s < scene.slice_count(); ++s) {
      if (std::abs(scene.depths_mm[s] - zm) <= kDepthMatchTolMm) {
        match = &scene.slices[s];
        break;
      }
    }
    stack.images.push_back(match ? *match
                                 : Image2D(first.width, first.height, first.pixel_pitch));
  }
  return stack;
}

std::vector<double> capture_sweep_plan(double z_lo_mm, double z_hi_mm, int n_images) {
  if (!(z_lo_mm < z_hi_mm)) {
    raise(ErrorCode::InvalidRange, "depth range must satisfy z_lo < z_hi");
  }
  if (n_images < 1) {
    raise(ErrorCode::InvalidRange, "n_images must be at least 1");
  }
  if (n_images == 1) return {0.5 * (z_lo_mm + z_hi_mm)};

  std::vector<double> depths(n_images);
  for (int i = 0; i < n_images; ++i) {
    // Exact at both endpoints and at the midpoint for odd counts.
    depths[i] = ((n_images - 1 - i) * z_lo_mm + i * z_hi_mm) / (n_images - 1);
  }
  return depths;
}

}  // namespace lfsweep
