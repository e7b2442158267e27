#pragma once

#include "lfsweep/image.hpp"
#include "lfsweep/light_field.hpp"

namespace lfsweep {

// Synthesize the image focused at depth z_mm by shearing and averaging:
//   I_z(x, y) = mean over (xi, eta) of L(x - z xi, y - z eta, xi, eta)
// Normalizing by the angular sample count keeps brightness depth-invariant.
// For the exact light field of a single slice at depth z this returns the
// slice itself.
Image2D refocus(const LightField4D& lf, double z_mm, int num_threads = 0);

// The x-xi slice at fixed y and eta. y_frac in [0, 1] picks the nearest
// row (0.5 = the center row, physical y = 0); eta must match one of the
// sampled slopes. Row r of the output holds xi sample r (row 0 =
// -xi_max), columns follow x with the source pixel pitch.
Image2D extract_epi(const LightField4D& lf, double y_frac, double eta);

// Slope d(xi)/dx in 1/mm of the dominant EPI line, fitted through the
// intensity-weighted centroid of each xi row. A slice at depth z traces
// slope -1/z; returns +/-inf when the centroids do not move with xi.
double fit_epi_slope(const Image2D& epi, const AngularSampling& angular);

}  // namespace lfsweep
