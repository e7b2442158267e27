#include "lfsweep/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "lfsweep/backprojection.hpp"
#include "lfsweep/capture.hpp"
#include "lfsweep/patterns.hpp"
#include "lfsweep/scene_model.hpp"

namespace lfsweep {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) { raise(ErrorCode::BadConfig, message); }

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) bad(where + ": unknown key '" + key + "'");
  }
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

void parse_scene(const json& j, const std::filesystem::path& base, SceneConfig& scene) {
  reject_unknown_keys(j, {"type", "width", "height", "lateral_size_mm", "spacing_mm", "planes",
                          "dir", "crop", "downscale"},
                      "scene");
  const std::string type = j.value("type", "synthetic");
  if (type == "synthetic") {
    scene.source = SceneConfig::Source::Synthetic;
    scene.width = j.value("width", scene.width);
    scene.height = j.value("height", scene.height);
    scene.lateral_size_mm = j.value("lateral_size_mm", scene.lateral_size_mm);
    scene.spacing_mm = j.value("spacing_mm", scene.spacing_mm);
    if (scene.width <= 0 || scene.height <= 0) bad("scene: width/height must be positive");
    if (!(scene.lateral_size_mm > 0.0)) bad("scene: lateral_size_mm must be positive");
    if (!(scene.spacing_mm > 0.0)) bad("scene: spacing_mm must be positive");
    if (j.contains("planes")) {
      scene.planes.clear();
      for (const auto& p : j["planes"]) scene.planes.push_back(p.get<std::string>());
    }
    if (scene.planes.size() != 3) bad("scene: exactly three planes are required");
    const auto& names = test_pattern_names();
    for (auto& plane : scene.planes) {
      if (std::find(names.begin(), names.end(), plane) != names.end()) continue;
      const std::filesystem::path path = resolve(base, plane);
      if (!std::filesystem::exists(path)) {
        bad("scene: plane '" + plane + "' is neither a pattern name nor an existing file");
      }
      plane = path.string();
    }
  } else if (type == "stack") {
    scene.source = SceneConfig::Source::StackDir;
    if (!j.contains("dir")) bad("scene: stack source requires 'dir'");
    scene.stack_dir = resolve(base, j["dir"].get<std::string>());
    if (!std::filesystem::is_directory(scene.stack_dir)) {
      bad("scene: stack dir does not exist: " + scene.stack_dir.string());
    }
    if (j.contains("crop")) {
      const auto& crop = j["crop"];
      if (!crop.is_array() || crop.size() != 2) bad("scene: crop must be [width, height]");
      scene.load_options.crop_width = crop[0].get<int>();
      scene.load_options.crop_height = crop[1].get<int>();
    }
    scene.load_options.downscale = j.value("downscale", 1);
  } else {
    bad("scene: type must be 'synthetic' or 'stack'");
  }
}

}  // namespace

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::IoFailure, "cannot open config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
  const std::filesystem::path base = std::filesystem::absolute(path).parent_path();

  ExperimentConfig config;
  reject_unknown_keys(j, {"scene", "psf", "sweep", "angular", "filter", "outputs", "jobs"},
                      "config");

  if (j.contains("scene")) parse_scene(j["scene"], base, config.scene);

  if (j.contains("psf")) {
    const auto& p = j["psf"];
    reject_unknown_keys(p, {"na", "pixel_pitch_mm", "sigma_coefficient"}, "psf");
    config.psf.na = p.value("na", config.psf.na);
    config.psf.pixel_pitch_mm = p.value("pixel_pitch_mm", config.psf.pixel_pitch_mm);
    config.psf.sigma_coefficient = p.value("sigma_coefficient", config.psf.sigma_coefficient);
    if (!(config.psf.na > 0.0 && config.psf.na < 1.0)) bad("psf: na must lie in (0, 1)");
    if (config.psf.pixel_pitch_mm < 0.0) bad("psf: pixel_pitch_mm must be nonnegative");
    if (!(config.psf.sigma_coefficient > 0.0)) bad("psf: sigma_coefficient must be positive");
  }

  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    reject_unknown_keys(s, {"m_values", "na_values", "depth_range_mm"}, "sweep");
    if (s.contains("m_values")) {
      config.sweep.m_values.clear();
      for (const auto& m : s["m_values"]) config.sweep.m_values.push_back(m.get<int>());
    }
    if (s.contains("na_values")) {
      config.sweep.na_values.clear();
      for (const auto& na : s["na_values"]) config.sweep.na_values.push_back(na.get<double>());
    }
    if (s.contains("depth_range_mm")) {
      const auto& r = s["depth_range_mm"];
      if (!r.is_array() || r.size() != 2) bad("sweep: depth_range_mm must be [lo, hi]");
      config.sweep.depth_lo_mm = r[0].get<double>();
      config.sweep.depth_hi_mm = r[1].get<double>();
    }
    if (config.sweep.m_values.empty()) bad("sweep: m_values must not be empty");
    if (config.sweep.na_values.empty()) bad("sweep: na_values must not be empty");
    for (int m : config.sweep.m_values) {
      if (m < 1) bad("sweep: every M must be at least 1");
    }
    for (double na : config.sweep.na_values) {
      if (!(na > 0.0 && na < 1.0)) bad("sweep: every NA must lie in (0, 1)");
    }
    if (!(config.sweep.depth_lo_mm < config.sweep.depth_hi_mm)) {
      bad("sweep: depth range must satisfy lo < hi");
    }
  }

  if (j.contains("angular")) {
    const auto& a = j["angular"];
    reject_unknown_keys(a, {"n_xi", "n_eta", "xi_max"}, "angular");
    config.angular.n_xi = a.value("n_xi", config.angular.n_xi);
    config.angular.n_eta = a.value("n_eta", config.angular.n_eta);
    config.angular.xi_max_override = a.value("xi_max", config.angular.xi_max_override);
    if (config.angular.n_xi < 1 || config.angular.n_eta < 1) {
      bad("angular: sample counts must be at least 1");
    }
    if (config.angular.xi_max_override < 0.0) bad("angular: xi_max must be nonnegative");
  }

  if (j.contains("filter")) {
    const auto& f = j["filter"];
    reject_unknown_keys(f, {"sigma_smooth_px", "stencil"}, "filter");
    config.filter.sigma_smooth = f.value("sigma_smooth_px", config.filter.sigma_smooth);
    if (config.filter.sigma_smooth < 0.0) bad("filter: sigma_smooth_px must be nonnegative");
    const std::string stencil = f.value("stencil", "four");
    if (stencil == "four") {
      config.filter.stencil = LaplacianStencil::FourNeighbor;
    } else if (stencil == "eight") {
      config.filter.stencil = LaplacianStencil::EightNeighbor;
    } else {
      bad("filter: stencil must be 'four' or 'eight'");
    }
  }

  if (j.contains("outputs")) {
    const auto& o = j["outputs"];
    reject_unknown_keys(
        o, {"dir", "epi", "refocus", "psnr_csv", "depth_map", "epi_y_frac", "epi_eta",
            "image_bits"},
        "outputs");
    if (o.contains("dir")) config.outputs.dir = resolve(base, o["dir"].get<std::string>());
    config.outputs.epi = o.value("epi", config.outputs.epi);
    config.outputs.refocus = o.value("refocus", config.outputs.refocus);
    config.outputs.psnr_csv = o.value("psnr_csv", config.outputs.psnr_csv);
    config.outputs.depth_map = o.value("depth_map", config.outputs.depth_map);
    config.outputs.epi_y_frac = o.value("epi_y_frac", config.outputs.epi_y_frac);
    config.outputs.epi_eta = o.value("epi_eta", config.outputs.epi_eta);
    if (config.outputs.epi_y_frac < 0.0 || config.outputs.epi_y_frac > 1.0) {
      bad("outputs: epi_y_frac must lie in [0, 1]");
    }
    const int bits = o.value("image_bits", 8);
    if (bits == 8) {
      config.outputs.image_bits = ImageBitDepth::Bits8;
    } else if (bits == 16) {
      config.outputs.image_bits = ImageBitDepth::Bits16;
    } else {
      bad("outputs: image_bits must be 8 or 16");
    }
  } else {
    config.outputs.dir = base / config.outputs.dir;
  }

  config.jobs = j.value("jobs", 0);
  if (config.jobs < 0) bad("jobs must be nonnegative");
  return config;
}

ObjectScene build_scene(const SceneConfig& scene) {
  if (scene.source != SceneConfig::Source::Synthetic) {
    raise(ErrorCode::BadConfig, "a synthetic scene is required here");
  }
  const double pitch = scene.pixel_pitch_mm();
  const auto& names = test_pattern_names();
  std::vector<Image2D> planes;
  planes.reserve(3);
  for (const std::string& plane : scene.planes) {
    if (std::find(names.begin(), names.end(), plane) != names.end()) {
      planes.push_back(make_test_pattern(plane, scene.width, scene.height, pitch));
    } else {
      Image2D img = load_image(plane, pitch);
      if (img.width != scene.width || img.height != scene.height) {
        raise(ErrorCode::DimensionMismatch,
              "plane image " + plane + " does not match the configured scene size");
      }
      planes.push_back(std::move(img));
    }
  }
  return make_three_plane_scene(planes[0], planes[1], planes[2], scene.spacing_mm);
}

FocalStack stack_for_reconstruction(const ExperimentConfig& config, int num_threads) {
  if (config.scene.source == SceneConfig::Source::StackDir) {
    return load_stack(config.scene.stack_dir, config.scene.load_options);
  }
  const ObjectScene scene = build_scene(config.scene);
  PsfModel psf;
  psf.na = config.psf.na;
  psf.pixel_pitch = config.psf.pixel_pitch_mm > 0.0 ? config.psf.pixel_pitch_mm
                                                    : scene.slices.front().pixel_pitch;
  psf.sigma_coefficient = config.psf.sigma_coefficient;
  const std::vector<double> depths = capture_sweep_plan(
      config.sweep.depth_lo_mm, config.sweep.depth_hi_mm, config.sweep.m_values.front());
  return capture(scene, psf, depths, num_threads);
}

AngularSampling angular_for(const ExperimentConfig& config, double na) {
  if (config.angular.xi_max_override > 0.0) {
    AngularSampling ang;
    ang.xi_max = config.angular.xi_max_override;
    ang.eta_max = config.angular.xi_max_override;
    ang.n_xi = config.angular.n_xi;
    ang.n_eta = config.angular.n_eta;
    return ang;
  }
  return angular_sampling_from_camera(na, config.angular.n_xi, config.angular.n_eta);
}

}  // namespace lfsweep
