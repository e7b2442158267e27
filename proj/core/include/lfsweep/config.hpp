#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lfsweep/focus_filter.hpp"
#include "lfsweep/image_io.hpp"
#include "lfsweep/scene.hpp"
#include "lfsweep/stack_io.hpp"

namespace lfsweep {

// Scene source: either a procedurally built multi-plane scene or a
// directory holding a captured focal stack plus its metadata sidecar.
struct SceneConfig {
  enum class Source { Synthetic, StackDir };
  Source source = Source::Synthetic;

  // synthetic
  int width = 64;
  int height = 64;
  double lateral_size_mm = 128.0;  // physical width; pixels are square
  double spacing_mm = 20.0;
  std::vector<std::string> planes = {"disk", "ring", "cross"};  // pattern names or image paths

  // stack directory
  std::filesystem::path stack_dir;
  StackLoadOptions load_options;

  double pixel_pitch_mm() const { return lateral_size_mm / width; }
};

struct PsfConfig {
  double na = 0.4;
  double pixel_pitch_mm = 0.0;  // 0 = take the scene's pitch
  double sigma_coefficient = 1.0;
};

struct SweepGridConfig {
  std::vector<int> m_values = {3, 5, 9, 17};
  std::vector<double> na_values = {0.2, 0.4, 0.6, 0.8};
  double depth_lo_mm = -20.0;
  double depth_hi_mm = 20.0;
};

struct AngularConfig {
  int n_xi = 11;
  int n_eta = 11;
  double xi_max_override = 0.0;  // 0 = use the numerical aperture
};

struct OutputConfig {
  std::filesystem::path dir = "out";
  bool epi = true;
  bool refocus = false;
  bool psnr_csv = true;
  bool depth_map = false;
  double epi_y_frac = 0.5;
  double epi_eta = 0.0;
  ImageBitDepth image_bits = ImageBitDepth::Bits8;
};

struct ExperimentConfig {
  SceneConfig scene;
  PsfConfig psf;
  SweepGridConfig sweep;
  AngularConfig angular;
  FilterParams filter;
  OutputConfig outputs;
  int jobs = 0;  // worker limit for sweep cells; 0 = hardware concurrency
};

// Parses and validates a JSON experiment description. Relative paths are
// resolved against the config file's directory; referenced inputs must
// exist.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

// Synthetic scene construction (BadConfig for stack-sourced configs).
ObjectScene build_scene(const SceneConfig& scene);

// The focal stack a reconstruction runs on: loaded from the stack
// directory, or simulated from the synthetic scene with the configured
// PSF, the first M value, and the sweep depth range.
FocalStack stack_for_reconstruction(const ExperimentConfig& config, int num_threads = 0);

// Angular grid for a given aperture under this config.
AngularSampling angular_for(const ExperimentConfig& config, double na);

}  // namespace lfsweep
