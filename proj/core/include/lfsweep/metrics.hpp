#pragma once

#include "lfsweep/light_field.hpp"
#include "lfsweep/scene.hpp"

namespace lfsweep {

// Gain-aligned PSNR in dB. The test array is scaled by the least-squares
// gain alpha = <test, ref> / <test, test> before the MSE (alpha = 1 for an
// all-zero test), and MAX is max(ref). Back-projection sums scale with the
// image count, so the alignment removes that trivial gain. Returns
// +infinity when the aligned MSE is zero.
double psnr(const Image2D& test, const Image2D& ref);
double psnr(const LightField4D& test, const LightField4D& ref);

struct NoiseSplit {
  LightField4D signal;  // back-projection of the in-focus slices
  LightField4D noise;   // back-projection of the defocus residuals (signed)
};

// Splits reconstruct(stack) into signal + noise by back-projecting the
// clear slices and the residuals separately. Every focal depth must
// coincide with a scene slice depth.
NoiseSplit noise_split(const FocalStack& stack, const ObjectScene& scene,
                       const AngularSampling& angular, int num_threads = 0);

// Sum of squared samples.
double energy(const LightField4D& lf);

}  // namespace lfsweep
