// Acceptance suite. Runs every criterion end to end and prints one
// PASS/FAIL line per criterion; exits nonzero if any fail.
//
//   1. brute-force oracle equivalence on randomized small instances
//   2. no-blur round trip (clear stack -> back-projection == exact field)
//   3. conventional PSNR non-increasing in M, >= 1 dB drop M=3 -> M=17
//   4. conventional PSNR non-increasing in NA, >= 1 dB drop 0.2 -> 0.8
//   5. filtered PSNR flat (< 1 dB spread) and above conventional everywhere
//   6. noise split identity and noise energy growth with NA
//   7. EPI slope law and filtered slope superiority at M = 17
//   8. refocus quality gap >= 10 dB in favor of the filtered field
//   9. byte-identical sweep runs and lossless container round trips

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lfsweep/backprojection.hpp"
#include "lfsweep/capture.hpp"
#include "lfsweep/focus_filter.hpp"
#include "lfsweep/image_io.hpp"
#include "lfsweep/lf_io.hpp"
#include "lfsweep/metrics.hpp"
#include "lfsweep/patterns.hpp"
#include "lfsweep/render.hpp"
#include "lfsweep/scene_model.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

using namespace lfsweep;

namespace {

constexpr int kGridAngularSamples = 11;
const std::vector<int> kMValues = {3, 5, 9, 17};
const std::vector<double> kNaValues = {0.2, 0.4, 0.6, 0.8};

struct Failure {
  std::string detail;
};

void require(bool condition, const std::string& detail) {
  if (!condition) throw Failure{detail};
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

ObjectScene three_plane_scene(int size, double lateral_mm, double spacing_mm) {
  const double pitch = lateral_mm / size;
  return make_three_plane_scene(make_test_pattern("disk", size, size, pitch),
                                make_test_pattern("ring", size, size, pitch),
                                make_test_pattern("cross", size, size, pitch), spacing_mm);
}

// PSNR grid shared by criteria 3, 4 and 5: psnr[method][m][na].
struct PsnrGrid {
  std::map<int, std::map<double, double>> conventional;
  std::map<int, std::map<double, double>> filtered;
  double seconds = 0.0;
};

const PsnrGrid& psnr_grid() {
  static PsnrGrid grid = [] {
    const auto start = std::chrono::steady_clock::now();
    PsnrGrid g;
    const ObjectScene scene = three_plane_scene(64, 128.0, 20.0);
    const double pitch = scene.slices.front().pixel_pitch;
    for (double na : kNaValues) {
      const AngularSampling ang =
          angular_sampling_from_camera(na, kGridAngularSamples, kGridAngularSamples);
      const LightField4D exact = exact_light_field(scene, ang);
      const PsfModel psf{na, pitch, 1.0};
      for (int m : kMValues) {
        const FocalStack stack = capture(scene, psf, capture_sweep_plan(-20.0, 20.0, m));
        g.conventional[m][na] = psnr(reconstruct(stack, ang), exact);
        g.filtered[m][na] = psnr(filtered_reconstruct(stack, FilterParams{}, ang), exact);
      }
    }
    g.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return g;
  }();
  return grid;
}

// ---- criteria ----

std::string criterion_oracles() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(20260810);
  double worst = 0.0;
  const int scenes = 24;
  for (int trial = 0; trial < scenes; ++trial) {
    const ObjectScene scene = testutil::random_scene(rng, 16, 3);
    const AngularSampling ang = testutil::random_angular(rng, 3);

    const LightField4D exact = exact_light_field(scene, ang);
    worst = std::max(worst,
                     testutil::max_abs_diff(exact.data, oracles::exact_light_field(scene, ang).data));

    FocalStack stack;
    stack.images = scene.slices;
    stack.focal_depths_mm = scene.depths_mm;
    const LightField4D recon = reconstruct(stack, ang);
    worst = std::max(worst,
                     testutil::max_abs_diff(recon.data, oracles::reconstruct(stack, ang).data));

    std::uniform_real_distribution<double> z_dist(-15.0, 15.0);
    const double z = z_dist(rng);
    worst = std::max(worst, testutil::max_abs_diff(refocus(exact, z).data,
                                                   oracles::refocus(exact, z).data));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(worst < 1e-10, fmt("max abs deviation %.3e exceeds 1e-10", worst));
  require(seconds < 10.0, fmt("took %.1f s, bound is 10 s", seconds));
  return fmt("%d scenes x {projection, back-projection, refocus}, max |diff| %.2e, %.2f s",
             scenes, worst, seconds);
}

std::string criterion_no_blur_round_trip() {
  const ObjectScene scene = three_plane_scene(64, 128.0, 20.0);
  const AngularSampling ang =
      angular_sampling_from_camera(0.4, kGridAngularSamples, kGridAngularSamples);
  const FocalStack clear = capture_clear(scene, scene.depths_mm);
  const LightField4D recon = reconstruct(clear, ang);
  const LightField4D exact = exact_light_field(scene, ang);
  const double worst = testutil::max_abs_diff(recon.data, exact.data);
  require(worst < 1e-10, fmt("max abs deviation %.3e exceeds 1e-10", worst));
  return fmt("clear-stack reconstruction == exact field, max |diff| %.2e", worst);
}

std::string criterion_psnr_vs_m() {
  const PsnrGrid& grid = psnr_grid();
  double min_drop = std::numeric_limits<double>::infinity();
  for (double na : kNaValues) {
    double previous = std::numeric_limits<double>::infinity();
    for (int m : kMValues) {
      const double value = grid.conventional.at(m).at(na);
      require(value <= previous + 1e-9,
              fmt("PSNR increased from %.3f to %.3f dB at NA %.1f, M=%d", previous, value, na, m));
      previous = value;
    }
    const double drop = grid.conventional.at(3).at(na) - grid.conventional.at(17).at(na);
    require(drop >= 1.0, fmt("drop M=3 -> M=17 at NA %.1f is %.3f dB (< 1 dB)", na, drop));
    min_drop = std::min(min_drop, drop);
  }
  require(grid.seconds < 120.0, fmt("grid took %.1f s, bound is 120 s", grid.seconds));
  return fmt("non-increasing in M for every NA; min drop M3->M17 %.2f dB; grid %.1f s",
             min_drop, grid.seconds);
}

std::string criterion_psnr_vs_na() {
  const PsnrGrid& grid = psnr_grid();
  double min_drop = std::numeric_limits<double>::infinity();
  for (int m : kMValues) {
    double previous = std::numeric_limits<double>::infinity();
    for (double na : kNaValues) {
      const double value = grid.conventional.at(m).at(na);
      require(value <= previous + 1e-9,
              fmt("PSNR increased from %.3f to %.3f dB at M=%d, NA %.1f", previous, value, m, na));
      previous = value;
    }
    const double drop = grid.conventional.at(m).at(0.2) - grid.conventional.at(m).at(0.8);
    require(drop >= 1.0, fmt("drop NA 0.2 -> 0.8 at M=%d is %.3f dB (< 1 dB)", m, drop));
    min_drop = std::min(min_drop, drop);
  }
  return fmt("non-increasing in NA for every M; min drop NA0.2->NA0.8 %.2f dB", min_drop);
}

std::string criterion_filtered_flatness() {
  const PsnrGrid& grid = psnr_grid();

  double lo_m = std::numeric_limits<double>::infinity(), hi_m = -lo_m;
  for (int m : kMValues) {
    const double value = grid.filtered.at(m).at(0.4);
    lo_m = std::min(lo_m, value);
    hi_m = std::max(hi_m, value);
  }
  require(hi_m - lo_m < 1.0, fmt("filtered spread across M is %.3f dB (>= 1 dB)", hi_m - lo_m));

  double lo_na = std::numeric_limits<double>::infinity(), hi_na = -lo_na;
  for (double na : kNaValues) {
    const double value = grid.filtered.at(5).at(na);
    lo_na = std::min(lo_na, value);
    hi_na = std::max(hi_na, value);
  }
  require(hi_na - lo_na < 1.0,
          fmt("filtered spread across NA is %.3f dB (>= 1 dB)", hi_na - lo_na));

  double min_gap = std::numeric_limits<double>::infinity();
  for (int m : kMValues) {
    for (double na : kNaValues) {
      const double gap = grid.filtered.at(m).at(na) - grid.conventional.at(m).at(na);
      require(gap > 0.0, fmt("filtered fails to beat conventional at M=%d, NA %.1f", m, na));
      min_gap = std::min(min_gap, gap);
    }
  }
  return fmt("spread %.2f dB over M, %.2f dB over NA; filtered beats conventional by >= %.2f dB",
             hi_m - lo_m, hi_na - lo_na, min_gap);
}

std::string criterion_noise_split() {
  const ObjectScene scene = three_plane_scene(64, 128.0, 20.0);
  const double pitch = scene.slices.front().pixel_pitch;

  const AngularSampling ang = angular_sampling_from_camera(0.4, 7, 7);
  const PsfModel psf{0.4, pitch, 1.0};
  const FocalStack stack = capture(scene, psf, scene.depths_mm);
  const NoiseSplit split = noise_split(stack, scene, ang);
  const LightField4D total = reconstruct(stack, ang);
  double worst = 0.0;
  for (std::size_t i = 0; i < total.data.size(); ++i) {
    worst = std::max(worst, std::abs(split.signal.data[i] + split.noise.data[i] - total.data[i]));
  }
  require(worst < 1e-10, fmt("split identity off by %.3e (> 1e-10)", worst));

  double previous = 0.0;
  std::vector<double> energies;
  for (double na : kNaValues) {
    const AngularSampling ang_na = angular_sampling_from_camera(na, 7, 7);
    const PsfModel psf_na{na, pitch, 1.0};
    const FocalStack stack_na = capture(scene, psf_na, scene.depths_mm);
    const double e = energy(noise_split(stack_na, scene, ang_na).noise);
    require(e > previous, fmt("noise energy not increasing at NA %.1f", na));
    energies.push_back(e);
    previous = e;
  }
  return fmt("identity within %.2e; noise energy %.3g -> %.3g over NA 0.2 -> 0.8", worst,
             energies.front(), energies.back());
}

std::string criterion_epi_slope() {
  const int size = 64;
  const double pitch = 128.0 / size;
  const AngularSampling ang = angular_sampling_from_camera(0.4, 25, 3);
  std::string detail;

  for (double z : {-20.0, 20.0}) {
    ObjectScene scene;
    scene.slices = {make_test_pattern("vbar", size, size, pitch)};
    scene.depths_mm = {z};
    const double want = -1.0 / z;

    const LightField4D exact = exact_light_field(scene, ang);
    const double slope_exact = fit_epi_slope(extract_epi(exact, 0.5, 0.0), ang);
    require(std::abs(slope_exact - want) <= 0.05 * std::abs(want),
            fmt("exact slope %.5f vs -1/z %.5f off by more than 5%% (z=%g)", slope_exact, want, z));

    const PsfModel psf{0.4, pitch, 1.0};
    const FocalStack stack = capture(scene, psf, capture_sweep_plan(-20.0, 20.0, 17));
    const double slope_conv =
        fit_epi_slope(extract_epi(reconstruct(stack, ang), 0.5, 0.0), ang);
    const double slope_filt = fit_epi_slope(
        extract_epi(filtered_reconstruct(stack, FilterParams{}, ang), 0.5, 0.0), ang);
    const double err_conv = std::abs(slope_conv - want);
    const double err_filt = std::abs(slope_filt - want);
    require(err_filt <= err_conv,
            fmt("filtered slope error %.5f exceeds conventional %.5f (z=%g)", err_filt, err_conv,
                z));
    detail += fmt("z=%+g: exact %.4f (want %.4f), M=17 err filt %.4f vs conv %.4f; ", z,
                  slope_exact, want, err_filt, err_conv);
  }
  return detail;
}

std::string criterion_refocus_quality() {
  const auto start = std::chrono::steady_clock::now();
  const ObjectScene scene = three_plane_scene(128, 128.0, 20.0);
  const double pitch = scene.slices.front().pixel_pitch;
  const AngularSampling ang = angular_sampling_from_camera(0.4, 25, 25);
  const PsfModel psf{0.4, pitch, 1.0};
  const FocalStack stack = capture(scene, psf, capture_sweep_plan(-20.0, 20.0, 5));

  const LightField4D conventional = reconstruct(stack, ang);
  const LightField4D filtered = filtered_reconstruct(stack, FilterParams{}, ang);

  double min_gap = std::numeric_limits<double>::infinity();
  for (int s = 0; s < scene.slice_count(); ++s) {
    const double z = scene.depths_mm[s];
    const double conv_psnr = psnr(refocus(conventional, z), scene.slices[s]);
    const double filt_psnr = psnr(refocus(filtered, z), scene.slices[s]);
    const double gap = filt_psnr - conv_psnr;
    require(gap >= 10.0,
            fmt("refocus gap at z=%g is %.2f dB (< 10 dB): filtered %.2f, conventional %.2f", z,
                gap, filt_psnr, conv_psnr));
    min_gap = std::min(min_gap, gap);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(seconds < 300.0, fmt("took %.1f s, bound is 300 s", seconds));
  return fmt("min filtered-vs-conventional refocus gap %.2f dB across the three planes, %.1f s",
             min_gap, seconds);
}

#ifdef LFSWEEP_CLI_PATH
void write_sweep_config(const std::filesystem::path& path, const std::filesystem::path& out_dir) {
  std::ofstream out(path);
  out << R"({
  "scene": {"type": "synthetic", "width": 24, "height": 24,
            "lateral_size_mm": 48.0, "spacing_mm": 10.0,
            "planes": ["disk", "ring", "cross"]},
  "psf": {"na": 0.4},
  "sweep": {"m_values": [3, 5], "na_values": [0.2, 0.4], "depth_range_mm": [-10.0, 10.0]},
  "angular": {"n_xi": 5, "n_eta": 5},
  "outputs": {"dir": ")"
      << out_dir.string() << R"(", "epi": true, "refocus": true, "depth_map": true},
  "jobs": 2
})";
}

std::string read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
#endif

std::string criterion_determinism() {
  std::string detail;

#ifdef LFSWEEP_CLI_PATH
  testutil::TempDir tmp("acceptance9");
  const auto cfg1 = tmp.path() / "exp1.json";
  const auto cfg2 = tmp.path() / "exp2.json";
  write_sweep_config(cfg1, tmp.path() / "out1");
  write_sweep_config(cfg2, tmp.path() / "out2");

  const std::string base = std::string(LFSWEEP_CLI_PATH) + " sweep ";
  const std::string quiet = " > /dev/null 2>&1";
  require(std::system((base + cfg1.string() + quiet).c_str()) == 0, "first sweep run failed");
  require(std::system((base + cfg2.string() + quiet).c_str()) == 0, "second sweep run failed");

  std::set<std::filesystem::path> rel1, rel2;
  for (const auto& e : std::filesystem::recursive_directory_iterator(tmp.path() / "out1")) {
    if (e.is_regular_file()) rel1.insert(std::filesystem::relative(e.path(), tmp.path() / "out1"));
  }
  for (const auto& e : std::filesystem::recursive_directory_iterator(tmp.path() / "out2")) {
    if (e.is_regular_file()) rel2.insert(std::filesystem::relative(e.path(), tmp.path() / "out2"));
  }
  require(rel1 == rel2, "sweep runs produced different file sets");
  require(!rel1.empty(), "sweep produced no files");
  for (const auto& rel : rel1) {
    require(read_bytes(tmp.path() / "out1" / rel) == read_bytes(tmp.path() / "out2" / rel),
            "sweep output differs between runs: " + rel.string());
  }
  detail += fmt("%zu sweep artifacts byte-identical across runs; ", rel1.size());
#else
  require(false, "CLI binary unavailable for the determinism check");
#endif

  // LF4D round trip at f32 precision
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(0.0, 2.0);
  LightField4D lf(6, 5, 0.5, {0.4, 3, 0.4, 3});
  for (double& v : lf.data) v = dist(rng);
  testutil::TempDir io_tmp("acceptance9io");
  const auto lf_path = io_tmp.path() / "f.lf4d";
  save_light_field(lf, lf_path);
  const LightField4D lf2 = load_light_field(lf_path);
  for (std::size_t i = 0; i < lf.data.size(); ++i) {
    require(lf2.data[i] == static_cast<double>(static_cast<float>(lf.data[i])),
            "LF4D round trip lost f32 precision");
  }
  const auto lf_path2 = io_tmp.path() / "f2.lf4d";
  save_light_field(lf2, lf_path2);
  require(read_bytes(lf_path) == read_bytes(lf_path2), "LF4D rewrite is not byte-identical");

  // image round trip at 16-bit precision
  std::mt19937 rng2(7);
  const Image2D img = testutil::random_image(9, 9, 1.0, rng2);
  const auto img_path = io_tmp.path() / "img.png";
  save_image(img, img_path, ImageBitDepth::Bits16);
  const Image2D img2 = load_image(img_path, 1.0);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    const double q = std::lround(std::clamp(img.data[i], 0.0, 1.0) * 65535.0) / 65535.0;
    require(img2.data[i] == q, "image round trip lost 16-bit precision");
  }
  detail += "LF4D round trip lossless at f32; PNG round trip lossless at 16 bit";
  return detail;
}

struct CriterionSpec {
  int id;
  const char* name;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<CriterionSpec> criteria = {
      {1, "oracle equivalence on randomized small instances", criterion_oracles},
      {2, "no-blur round trip recovers the exact light field", criterion_no_blur_round_trip},
      {3, "conventional PSNR non-increasing in capture count", criterion_psnr_vs_m},
      {4, "conventional PSNR non-increasing in aperture", criterion_psnr_vs_na},
      {5, "filtered PSNR flat and dominant on the full grid", criterion_filtered_flatness},
      {6, "noise split identity and aperture-driven noise growth", criterion_noise_split},
      {7, "EPI slope law and filtered slope accuracy at M=17", criterion_epi_slope},
      {8, "refocus quality gap of at least 10 dB", criterion_refocus_quality},
      {9, "determinism and lossless round trips", criterion_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    bool pass = false;
    try {
      detail = criterion.run();
      pass = true;
    } catch (const Failure& failure) {
      detail = failure.detail;
    } catch (const std::exception& e) {
      detail = std::string("unexpected error: ") + e.what();
    }
    std::printf("[%s] %d. %s — %s\n", pass ? "PASS" : "FAIL", criterion.id, criterion.name,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }

  std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
