#pragma once

#include "lfsweep/light_field.hpp"
#include "lfsweep/scene.hpp"

namespace lfsweep {

// Shift-and-sum back-projection of a focal stack:
//   L'(x, y, xi, eta) = sum_m I(x + z_m xi, y + z_m eta, z_m)
// Captures are sampled bilinearly with zero outside support and summed in
// ascending m. The sum is intentionally not normalized by the image count,
// so downstream comparisons gain-align first (see metrics).
// Only structural validity is required; signed residual stacks are allowed.
LightField4D reconstruct(const FocalStack& stack, const AngularSampling& angular,
                         int num_threads = 0);

// Angular grid implied by the capture cone: xi_max = eta_max = na, taking
// the slope of the half-angle as the aperture value itself.
AngularSampling angular_sampling_from_camera(double na, int n_xi, int n_eta);

}  // namespace lfsweep
