#include "lfsweep/render.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "lfsweep/parallel.hpp"

namespace lfsweep {

Image2D refocus(const LightField4D& lf, double z_mm, int num_threads) {
  if (lf.sample_count() == 0 || lf.data.size() != lf.sample_count()) {
    raise(ErrorCode::DimensionMismatch, "light field is empty or inconsistent");
  }
  const int nu = lf.angular.n_xi;
  const int nv = lf.angular.n_eta;
  const double norm = 1.0 / (static_cast<double>(nu) * nv);

  std::vector<double> shift_x(nu), shift_y(nv);
  for (int iu = 0; iu < nu; ++iu) shift_x[iu] = z_mm * lf.angular.xi(iu) / lf.pixel_pitch;
  for (int iv = 0; iv < nv; ++iv) shift_y[iv] = z_mm * lf.angular.eta(iv) / lf.pixel_pitch;

  Image2D out(lf.width, lf.height, lf.pixel_pitch);
  parallel_for(0, lf.height, num_threads, [&](int iy) {
    for (int ix = 0; ix < lf.width; ++ix) {
      double acc = 0.0;
      for (int iu = 0; iu < nu; ++iu) {
        for (int iv = 0; iv < nv; ++iv) {
          acc += bilinear_xy_at(lf, ix - shift_x[iu], iy - shift_y[iv], iu, iv);
        }
      }
      out.at(ix, iy) = acc * norm;
    }
  });
  return out;
}

Image2D extract_epi(const LightField4D& lf, double y_frac, double eta) {
  if (y_frac < 0.0 || y_frac > 1.0) {
    raise(ErrorCode::InvalidRange, "y_frac must lie in [0, 1]");
  }
  int iv_match = -1;
  for (int iv = 0; iv < lf.angular.n_eta; ++iv) {
    if (std::abs(lf.angular.eta(iv) - eta) <= 1e-12) {
      iv_match = iv;
      break;
    }
  }
  if (iv_match < 0) {
    raise(ErrorCode::EtaNotSampled,
          "eta = " + std::to_string(eta) + " is not one of the sampled slopes");
  }
  const int iy = std::min(lf.height - 1,
                          static_cast<int>(std::lround(y_frac * (lf.height - 1))));

  Image2D epi(lf.width, lf.angular.n_xi, lf.pixel_pitch);
  for (int iu = 0; iu < lf.angular.n_xi; ++iu) {
    for (int ix = 0; ix < lf.width; ++ix) {
      epi.at(ix, iu) = lf.at(ix, iy, iu, iv_match);
    }
  }
  return epi;
}

double fit_epi_slope(const Image2D& epi, const AngularSampling& angular) {
  if (epi.height != angular.n_xi) {
    raise(ErrorCode::DimensionMismatch, "EPI rows do not match the angular sampling");
  }

  // Intensity-weighted x centroid per xi row, then a weighted least-squares
  // line x(xi) = c + s * xi. The EPI slope d(xi)/dx is 1/s.
  std::vector<double> row_weight(epi.height, 0.0);
  std::vector<double> row_centroid(epi.height, 0.0);
  double max_weight = 0.0;
  for (int r = 0; r < epi.height; ++r) {
    double w_sum = 0.0;
    double x_sum = 0.0;
    for (int c = 0; c < epi.width; ++c) {
      const double w = std::abs(epi.at(c, r));
      w_sum += w;
      x_sum += w * epi.phys_x(c);
    }
    row_weight[r] = w_sum;
    if (w_sum > 0.0) row_centroid[r] = x_sum / w_sum;
    max_weight = std::max(max_weight, w_sum);
  }
  if (max_weight <= 0.0) {
    raise(ErrorCode::InvalidRange, "EPI carries no intensity to fit a slope");
  }

  const double weight_floor = 1e-9 * max_weight;
  double sw = 0.0, sxi = 0.0, sx = 0.0;
  for (int r = 0; r < epi.height; ++r) {
    if (row_weight[r] <= weight_floor) continue;
    sw += row_weight[r];
    sxi += row_weight[r] * angular.xi(r);
    sx += row_weight[r] * row_centroid[r];
  }
  const double mean_xi = sxi / sw;
  const double mean_x = sx / sw;
  double cov = 0.0, var = 0.0;
  for (int r = 0; r < epi.height; ++r) {
    if (row_weight[r] <= weight_floor) continue;
    const double dxi = angular.xi(r) - mean_xi;
    cov += row_weight[r] * dxi * (row_centroid[r] - mean_x);
    var += row_weight[r] * dxi * dxi;
  }
  if (var <= 0.0) {
    raise(ErrorCode::InvalidRange, "EPI slope fit needs at least two populated xi rows");
  }
  const double s = cov / var;  // dx/dxi in mm
  return 1.0 / s;             // IEEE: +/-inf when the centroids do not move
}

}  // namespace lfsweep
