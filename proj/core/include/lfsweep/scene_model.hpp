#pragma once

#include "lfsweep/light_field.hpp"
#include "lfsweep/scene.hpp"

namespace lfsweep {

// Three equal-sized planes at depths {-spacing, 0, +spacing}, centroid at
// the origin.
ObjectScene make_three_plane_scene(const Image2D& near_plane, const Image2D& mid_plane,
                                   const Image2D& far_plane, double spacing_mm);

// Ground-truth light field on the z = 0 principal plane:
//   L(x, y, xi, eta) = sum_n O(x + z_n xi, y + z_n eta, z_n)
// Slices are sampled bilinearly with zero outside their support; the sum
// over slices is transparent (no occlusion) and unnormalized.
LightField4D exact_light_field(const ObjectScene& scene, const AngularSampling& angular,
                               int num_threads = 0);

}  // namespace lfsweep
