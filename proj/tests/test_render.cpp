#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lfsweep/backprojection.hpp"
#include "lfsweep/metrics.hpp"
#include "lfsweep/patterns.hpp"
#include "lfsweep/render.hpp"
#include "lfsweep/scene_model.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

using namespace lfsweep;

namespace {

ObjectScene single_slice_scene(const Image2D& img, double depth_mm) {
  ObjectScene scene;
  scene.slices = {img};
  scene.depths_mm = {depth_mm};
  return scene;
}

}  // namespace

TEST_CASE("refocusing the exact field of an in-plane slice returns the slice") {
  std::mt19937 rng(3);
  const Image2D slice = testutil::random_image(10, 10, 1.0, rng);
  const LightField4D lf = exact_light_field(single_slice_scene(slice, 0.0), {0.4, 5, 0.4, 5}, 1);
  const Image2D back = refocus(lf, 0.0, 1);
  CHECK(testutil::max_abs_diff(back.data, slice.data) < 1e-12);
}

TEST_CASE("refocusing at a slice depth recovers the slice away from the borders") {
  const double z = 20.0;
  const Image2D slice = make_test_pattern("dots", 32, 32, 2.0);
  const AngularSampling ang = angular_sampling_from_camera(0.4, 9, 9);
  const LightField4D lf = exact_light_field(single_slice_scene(slice, z), ang, 1);
  const Image2D back = refocus(lf, z, 1);

  // shifts reach z * xi_max / pitch = 4 px; stay clear of the padding
  const int margin = static_cast<int>(std::ceil(z * ang.xi_max / 2.0)) + 1;
  double worst = 0.0;
  for (int y = margin; y < 32 - margin; ++y) {
    for (int x = margin; x < 32 - margin; ++x) {
      worst = std::max(worst, std::abs(back.at(x, y) - slice.at(x, y)));
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("refocusing the three-plane field highlights the in-focus plane") {
  const double pitch = 64.0 / 32;
  const ObjectScene scene =
      make_three_plane_scene(make_test_pattern("disk", 32, 32, pitch),
                             make_test_pattern("ring", 32, 32, pitch),
                             make_test_pattern("cross", 32, 32, pitch), 20.0);
  const LightField4D lf = exact_light_field(scene, angular_sampling_from_camera(0.4, 9, 9), 1);

  for (int target = 0; target < 3; ++target) {
    const Image2D at_target = refocus(lf, scene.depths_mm[target], 1);
    const double focused = psnr(at_target, scene.slices[target]);
    for (int other = 0; other < 3; ++other) {
      if (other == target) continue;
      const Image2D elsewhere = refocus(lf, scene.depths_mm[other], 1);
      CHECK(focused > psnr(elsewhere, scene.slices[target]));
    }
  }
}

TEST_CASE("refocus matches the quadruple-loop oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    const ObjectScene scene = testutil::random_scene(rng, 8, 2);
    const AngularSampling ang = testutil::random_angular(rng, 3);
    const LightField4D lf = exact_light_field(scene, ang, 1);
    for (double z : {-7.0, 0.0, 7.0}) {
      const Image2D fast = refocus(lf, z, 1);
      const Image2D slow = oracles::refocus(lf, z);
      CHECK(testutil::max_abs_diff(fast.data, slow.data) < 1e-10);
    }
  }
}

TEST_CASE("EPI extraction picks the requested row and eta sample") {
  std::mt19937 rng(17);
  ObjectScene scene;
  scene.slices = {testutil::random_image(12, 9, 1.0, rng)};
  scene.depths_mm = {5.0};
  const AngularSampling ang{0.4, 5, 0.4, 5};
  const LightField4D lf = exact_light_field(scene, ang, 1);

  const Image2D epi = extract_epi(lf, 0.5, 0.0);
  CHECK(epi.width == lf.width);
  CHECK(epi.height == ang.n_xi);
  const int iy = 4;   // round(0.5 * 8)
  const int iv = 2;   // eta = 0
  for (int iu = 0; iu < ang.n_xi; ++iu) {
    for (int ix = 0; ix < lf.width; ++ix) {
      CHECK(epi.at(ix, iu) == lf.at(ix, iy, iu, iv));
    }
  }

  const Image2D epi06 = extract_epi(lf, 0.6, 0.0);
  const int iy06 = 5;  // round(0.6 * 8)
  for (int ix = 0; ix < lf.width; ++ix) {
    CHECK(epi06.at(ix, 0) == lf.at(ix, iy06, 0, iv));
  }

  CHECK_THROWS_WITH_AS(extract_epi(lf, 0.5, 0.123), doctest::Contains("EtaNotSampled"), Error);
  CHECK_THROWS_WITH_AS(extract_epi(lf, 1.5, 0.0), doctest::Contains("InvalidRange"), Error);
}

TEST_CASE("EPI rows shear by z * xi") {
  const Image2D slice = make_test_pattern("vbar", 32, 32, 2.0);
  const double z = -20.0;
  const AngularSampling ang = angular_sampling_from_camera(0.4, 9, 3);
  const LightField4D lf = exact_light_field(single_slice_scene(slice, z), ang, 1);
  const Image2D epi = extract_epi(lf, 0.5, 0.0);
  const int iy = 16;
  for (int iu = 0; iu < ang.n_xi; ++iu) {
    const double sx = z * ang.xi(iu) / 2.0;
    for (int ix = 0; ix < lf.width; ++ix) {
      CHECK(epi.at(ix, iu) ==
            doctest::Approx(oracles::bilinear(slice, ix + sx, iy)).epsilon(1e-12));
    }
  }
}

TEST_CASE("fitted EPI slope equals -1/z for single-slice scenes") {
  const AngularSampling ang = angular_sampling_from_camera(0.4, 25, 3);
  for (double z : {-20.0, 20.0, 10.0}) {
    const Image2D slice = make_test_pattern("vbar", 64, 64, 2.0);
    const LightField4D lf = exact_light_field(single_slice_scene(slice, z), ang, 1);
    const Image2D epi = extract_epi(lf, 0.5, 0.0);
    const double slope = fit_epi_slope(epi, ang);
    CHECK(std::abs(slope - (-1.0 / z)) <= 0.05 * std::abs(1.0 / z));
  }
}

TEST_CASE("slope fitting reports degenerate EPIs") {
  Image2D flat(8, 5, 1.0);
  AngularSampling ang{0.4, 5, 0.4, 1};
  CHECK_THROWS_WITH_AS(fit_epi_slope(flat, ang), doctest::Contains("InvalidRange"), Error);

  // vertical line: centroids do not move with xi -> infinite slope
  Image2D vertical(8, 5, 1.0);
  for (int r = 0; r < 5; ++r) vertical.at(4, r) = 1.0;
  CHECK(std::isinf(fit_epi_slope(vertical, ang)));
}
