// lfsweep: light field reconstruction from focal-plane sweeps.
//
// Subcommands:
//   simulate    build a synthetic scene, emit the exact light field and
//               simulated capture stacks
//   reconstruct back-project a focal stack into an LF4D file
//   epi         extract an x-xi slice from an LF4D file
//   refocus     synthesize the image focused at a given depth
//   sweep       run the full (M, NA) x method PSNR grid
//   depthmap    export the per-pixel sharpest-capture index map

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "lfsweep/backprojection.hpp"
#include "lfsweep/capture.hpp"
#include "lfsweep/config.hpp"
#include "lfsweep/focus_filter.hpp"
#include "lfsweep/image_io.hpp"
#include "lfsweep/lf_io.hpp"
#include "lfsweep/render.hpp"
#include "lfsweep/scene_model.hpp"
#include "lfsweep/stack_io.hpp"
#include "lfsweep/sweep.hpp"

namespace {

using namespace lfsweep;

ImageBitDepth depth_from_bits(int bits) {
  if (bits == 8) return ImageBitDepth::Bits8;
  if (bits == 16) return ImageBitDepth::Bits16;
  raise(ErrorCode::BadConfig, "--bits must be 8 or 16");
}

int run_simulate(const std::string& config_path) {
  const ExperimentConfig config = load_experiment_config(config_path);
  const ObjectScene scene = build_scene(config.scene);
  const double pitch = scene.slices.front().pixel_pitch;
  std::filesystem::create_directories(config.outputs.dir);

  for (int s = 0; s < scene.slice_count(); ++s) {
    save_image(scene.slices[s],
               config.outputs.dir / ("scene_plane_" + std::to_string(s) + ".png"),
               ImageBitDepth::Bits16);
  }

  for (double na : config.sweep.na_values) {
    const AngularSampling angular = angular_for(config, na);
    const LightField4D exact = exact_light_field(scene, angular);
    const std::string na_tag = "NA" + format_number(na);
    save_light_field(exact, config.outputs.dir / ("exact_" + na_tag + ".lf4d"));
    if (config.outputs.epi) {
      save_image_normalized(
          extract_epi(exact, config.outputs.epi_y_frac, config.outputs.epi_eta),
          config.outputs.dir / ("epi_exact_" + na_tag + ".png"), config.outputs.image_bits);
    }

    PsfModel psf;
    psf.na = na;
    psf.pixel_pitch = config.psf.pixel_pitch_mm > 0.0 ? config.psf.pixel_pitch_mm : pitch;
    psf.sigma_coefficient = config.psf.sigma_coefficient;
    for (int m : config.sweep.m_values) {
      const auto depths =
          capture_sweep_plan(config.sweep.depth_lo_mm, config.sweep.depth_hi_mm, m);
      const FocalStack stack = capture(scene, psf, depths);
      save_stack(stack, config.outputs.dir / ("stack_M" + std::to_string(m) + "_" + na_tag));
    }
  }
  std::printf("simulate: outputs in %s\n", config.outputs.dir.string().c_str());
  return 0;
}

int run_reconstruct(const std::string& config_path, const std::string& method,
                    std::string out_file) {
  const ExperimentConfig config = load_experiment_config(config_path);
  const FocalStack stack = stack_for_reconstruction(config);
  const AngularSampling angular = angular_for(config, config.psf.na);

  LightField4D lf;
  if (method == "conventional") {
    lf = reconstruct(stack, angular);
  } else if (method == "filtered") {
    lf = filtered_reconstruct(stack, config.filter, angular);
  } else {
    raise(ErrorCode::BadConfig, "--method must be 'conventional' or 'filtered'");
  }

  std::filesystem::create_directories(config.outputs.dir);
  if (out_file.empty()) {
    out_file = (config.outputs.dir / ("reconstructed_" + method + ".lf4d")).string();
  }
  save_light_field(lf, out_file);
  std::printf("reconstruct: %s (%dx%dx%dx%d) -> %s\n", method.c_str(), lf.width, lf.height,
              lf.angular.n_xi, lf.angular.n_eta, out_file.c_str());
  return 0;
}

int run_epi(const std::string& lf_file, double y_frac, double eta, const std::string& out_file,
            int bits) {
  const LightField4D lf = load_light_field(lf_file);
  save_image_normalized(extract_epi(lf, y_frac, eta), out_file, depth_from_bits(bits));
  std::printf("epi: y_frac=%g eta=%g -> %s\n", y_frac, eta, out_file.c_str());
  return 0;
}

int run_refocus(const std::string& lf_file, double depth_mm, const std::string& out_file,
                int bits) {
  const LightField4D lf = load_light_field(lf_file);
  save_image_normalized(refocus(lf, depth_mm), out_file, depth_from_bits(bits));
  std::printf("refocus: z=%g mm -> %s\n", depth_mm, out_file.c_str());
  return 0;
}

int run_sweep_cmd(const std::string& config_path, int jobs) {
  ExperimentConfig config = load_experiment_config(config_path);
  if (jobs > 0) config.jobs = jobs;
  const SweepResult result = run_sweep(config);
  for (const SweepCell& cell : result.cells) {
    std::printf("%-12s M=%-3d NA=%-4s psnr=%9.4f dB\n", cell.method.c_str(), cell.m,
                format_number(cell.na).c_str(), cell.psnr_db);
  }
  if (!result.csv_path.empty()) {
    std::printf("sweep: %s\n", result.csv_path.string().c_str());
  }
  return 0;
}

int run_depthmap(const std::string& config_path, std::string out_file) {
  const ExperimentConfig config = load_experiment_config(config_path);
  const FocalStack stack = stack_for_reconstruction(config);
  const DepthIndexMap map = depth_index_map(edge_response(stack, config.filter));

  std::filesystem::create_directories(config.outputs.dir);
  if (out_file.empty()) out_file = (config.outputs.dir / "depthmap.png").string();
  save_image(depth_map_to_image(map, stack.images.front().pixel_pitch), out_file,
             ImageBitDepth::Bits16);
  std::printf("depthmap: %d captures -> %s (16-bit indices)\n", stack.image_count(),
              out_file.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Light field reconstruction from focal-plane sweeping image stacks"};
  app.require_subcommand(1);

  std::string config_path, lf_file, out_file, method = "conventional";
  double y_frac = 0.5, eta = 0.0, depth_mm = 0.0;
  int bits = 8, jobs = 0;

  auto* simulate = app.add_subcommand("simulate", "Emit exact light field and capture stacks");
  simulate->add_option("config", config_path, "experiment config (JSON)")->required();

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Back-project a focal stack");
  reconstruct_cmd->add_option("config", config_path, "experiment config (JSON)")->required();
  reconstruct_cmd->add_option("--method", method, "conventional | filtered")
      ->check(CLI::IsMember({"conventional", "filtered"}));
  reconstruct_cmd->add_option("-o,--output", out_file, "output .lf4d path");

  auto* epi = app.add_subcommand("epi", "Extract an x-xi slice image");
  epi->add_option("lightfield", lf_file, "input .lf4d file")->required();
  epi->add_option("--y-frac", y_frac, "row as a fraction of height (0.5 = center)");
  epi->add_option("--eta", eta, "eta slope; must be a sampled value");
  epi->add_option("-o,--output", out_file, "output image (.png/.pgm)")->required();
  epi->add_option("--bits", bits, "8 or 16");

  auto* refocus_cmd = app.add_subcommand("refocus", "Synthesize a refocused image");
  refocus_cmd->add_option("lightfield", lf_file, "input .lf4d file")->required();
  refocus_cmd->add_option("--depth", depth_mm, "refocus depth in mm")->required();
  refocus_cmd->add_option("-o,--output", out_file, "output image (.png/.pgm)")->required();
  refocus_cmd->add_option("--bits", bits, "8 or 16");

  auto* sweep_cmd = app.add_subcommand("sweep", "PSNR grid over (M, NA) x method");
  sweep_cmd->add_option("config", config_path, "experiment config (JSON)")->required();
  sweep_cmd->add_option("--jobs", jobs, "worker limit for grid cells");

  auto* depthmap = app.add_subcommand("depthmap", "Export the sharpest-capture index map");
  depthmap->add_option("config", config_path, "experiment config (JSON)")->required();
  depthmap->add_option("-o,--output", out_file, "output 16-bit PNG");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return run_simulate(config_path);
    if (reconstruct_cmd->parsed()) return run_reconstruct(config_path, method, out_file);
    if (epi->parsed()) return run_epi(lf_file, y_frac, eta, out_file, bits);
    if (refocus_cmd->parsed()) return run_refocus(lf_file, depth_mm, out_file, bits);
    if (sweep_cmd->parsed()) return run_sweep_cmd(config_path, jobs);
    if (depthmap->parsed()) return run_depthmap(config_path, out_file);
  } catch (const lfsweep::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
