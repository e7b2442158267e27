#include "lfsweep/backprojection.hpp"

#include <vector>

#include "lfsweep/parallel.hpp"

namespace lfsweep {

LightField4D reconstruct(const FocalStack& stack, const AngularSampling& angular,
                         int num_threads) {
  require_uniform(stack);
  const Image2D& first = stack.images.front();
  const int w = first.width;
  const int h = first.height;
  const double pitch = first.pixel_pitch;
  const int m_count = stack.image_count();
  const int nu = angular.n_xi;
  const int nv = angular.n_eta;

  std::vector<double> shift_x(static_cast<std::size_t>(m_count) * nu);
  std::vector<double> shift_y(static_cast<std::size_t>(m_count) * nv);
  for (int m = 0; m < m_count; ++m) {
    for (int iu = 0; iu < nu; ++iu)
      shift_x[static_cast<std::size_t>(m) * nu + iu] =
          stack.focal_depths_mm[m] * angular.xi(iu) / pitch;
    for (int iv = 0; iv < nv; ++iv)
      shift_y[static_cast<std::size_t>(m) * nv + iv] =
          stack.focal_depths_mm[m] * angular.eta(iv) / pitch;
  }

  LightField4D lf(w, h, pitch, angular);
  parallel_for(0, w, num_threads, [&](int ix) {
    for (int iy = 0; iy < h; ++iy) {
      double* out = &lf.data[lf.index(ix, iy, 0, 0)];
      for (int iu = 0; iu < nu; ++iu) {
        for (int iv = 0; iv < nv; ++iv) {
          double acc = 0.0;
          for (int m = 0; m < m_count; ++m) {
            acc += bilinear_at(stack.images[m],
                               ix + shift_x[static_cast<std::size_t>(m) * nu + iu],
                               iy + shift_y[static_cast<std::size_t>(m) * nv + iv]);
          }
          out[static_cast<std::size_t>(iu) * nv + iv] = acc;
        }
      }
    }
  });
  return lf;
}

AngularSampling angular_sampling_from_camera(double na, int n_xi, int n_eta) {
  if (!(na > 0.0 && na < 1.0)) {
    raise(ErrorCode::InvalidNA, "numerical aperture must lie in (0, 1)");
  }
  if (n_xi < 1 || n_eta < 1) {
    raise(ErrorCode::InvalidRange, "angular sample counts must be at least 1");
  }
  AngularSampling ang;
  ang.xi_max = na;
  ang.eta_max = na;
  ang.n_xi = n_xi;
  ang.n_eta = n_eta;
  return ang;
}

}  // namespace lfsweep
