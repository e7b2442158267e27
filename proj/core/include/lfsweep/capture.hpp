#pragma once

#include <vector>

#include "lfsweep/psf.hpp"
#include "lfsweep/scene.hpp"

namespace lfsweep {

// Tolerance for treating a focal depth as coincident with a slice depth.
inline constexpr double kDepthMatchTolMm = 1e-9;

// Simulated focal sweep:
//   I(x, y, z_m) = sum_n O(., ., z_n) (x) h(., ., z_m - z_n)
// Every slice is blurred by the defocus kernel for its distance to the
// focal plane (zero-padded separable convolution) and the blurred slices
// are summed. A slice at the focal plane passes through unchanged.
// The PSF's pixel pitch must match the scene's.
FocalStack capture(const ObjectScene& scene, const PsfModel& psf,
                   const std::vector<double>& focal_depths_mm, int num_threads = 0);

// Idealized sweep keeping only the in-focus content: image m is the scene
// slice whose depth coincides with z_m, or all zeros when no slice lies
// there. This isolates the clear term of the capture model.
FocalStack capture_clear(const ObjectScene& scene, const std::vector<double>& focal_depths_mm);

// n_images focal depths uniformly spanning [z_lo, z_hi] inclusive; the
// midpoint when n_images == 1.
std::vector<double> capture_sweep_plan(double z_lo_mm, double z_hi_mm, int n_images);

}  // namespace lfsweep
