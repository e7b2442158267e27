#include "lfsweep/scene_model.hpp"

#include <vector>

#include "lfsweep/parallel.hpp"

namespace lfsweep {

ObjectScene make_three_plane_scene(const Image2D& near_plane, const Image2D& mid_plane,
                                   const Image2D& far_plane, double spacing_mm) {
  if (!near_plane.same_shape(mid_plane) || !near_plane.same_shape(far_plane) ||
      near_plane.pixel_pitch != mid_plane.pixel_pitch ||
      near_plane.pixel_pitch != far_plane.pixel_pitch) {
    raise(ErrorCode::DimensionMismatch, "the three planes must share size and pixel pitch");
  }
  if (!(spacing_mm > 0.0)) {
    raise(ErrorCode::NonMonotoneDepths, "plane spacing must be positive");
  }
  ObjectScene scene;
  scene.slices = {near_plane, mid_plane, far_plane};
  scene.depths_mm = {-spacing_mm, 0.0, spacing_mm};
  require_valid(scene);
  return scene;
}

LightField4D exact_light_field(const ObjectScene& scene, const AngularSampling& angular,
                               int num_threads) {
  require_valid(scene);
  const Image2D& first = scene.slices.front();
  const int w = first.width;
  const int h = first.height;
  const double pitch = first.pixel_pitch;
  const int n = scene.slice_count();
  const int nu = angular.n_xi;
  const int nv = angular.n_eta;

  // Pixel-space displacement of each slice per angular bin.
  std::vector<double> shift_x(static_cast<std::size_t>(n) * nu);
  std::vector<double> shift_y(static_cast<std::size_t>(n) * nv);
  for (int s = 0; s < n; ++s) {
    for (int iu = 0; iu < nu; ++iu)
      shift_x[static_cast<std::size_t>(s) * nu + iu] = scene.depths_mm[s] * angular.xi(iu) / pitch;
    for (int iv = 0; iv < nv; ++iv)
      shift_y[static_cast<std::size_t>(s) * nv + iv] = scene.depths_mm[s] * angular.eta(iv) / pitch;
  }

  LightField4D lf(w, h, pitch, angular);
  parallel_for(0, w, num_threads, [&](int ix) {
    for (int iy = 0; iy < h; ++iy) {
      double* out = &lf.data[lf.index(ix, iy, 0, 0)];
      for (int iu = 0; iu < nu; ++iu) {
        for (int iv = 0; iv < nv; ++iv) {
          double acc = 0.0;
          for (int s = 0; s < n; ++s) {
            acc += bilinear_at(scene.slices[s],
                               ix + shift_x[static_cast<std::size_t>(s) * nu + iu],
                               iy + shift_y[static_cast<std::size_t>(s) * nv + iv]);
          }
          out[static_cast<std::size_t>(iu) * nv + iv] = acc;
        }
      }
    }
  });
  return lf;
}

}  // namespace lfsweep
