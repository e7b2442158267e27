#include "lfsweep/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <map>

#include "lfsweep/backprojection.hpp"
#include "lfsweep/capture.hpp"
#include "lfsweep/focus_filter.hpp"
#include "lfsweep/metrics.hpp"
#include "lfsweep/parallel.hpp"
#include "lfsweep/render.hpp"
#include "lfsweep/scene_model.hpp"

namespace lfsweep {
namespace {

std::string format_psnr(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string csv_row(const SweepCell& cell) {
  return cell.method + "," + std::to_string(cell.m) + "," + format_number(cell.na) + "," +
         format_psnr(cell.psnr_db) + "\r\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::IoFailure, "cannot create " + path.string());
  out << content;
}

}  // namespace

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

SweepResult run_sweep(const ExperimentConfig& config) {
  if (config.scene.source != SceneConfig::Source::Synthetic) {
    raise(ErrorCode::BadConfig, "sweep needs a synthetic scene as ground truth");
  }
  const ObjectScene scene = build_scene(config.scene);
  const double scene_pitch = scene.slices.front().pixel_pitch;

  const std::filesystem::path out_dir = config.outputs.dir;
  const std::filesystem::path cells_dir = out_dir / "cells";
  std::filesystem::create_directories(cells_dir);

  // One exact light field per aperture (the angular range follows the NA).
  std::map<double, LightField4D> exact_by_na;
  for (double na : config.sweep.na_values) {
    if (!exact_by_na.count(na)) {
      exact_by_na.emplace(na, exact_light_field(scene, angular_for(config, na)));
    }
  }

  struct CellTask {
    int m;
    double na;
  };
  std::vector<CellTask> tasks;
  for (int m : config.sweep.m_values) {
    for (double na : config.sweep.na_values) tasks.push_back({m, na});
  }

  std::vector<SweepCell> conventional_cells(tasks.size());
  std::vector<SweepCell> filtered_cells(tasks.size());

  // Cells are the unit of concurrency; everything inside runs
  // single-threaded so results do not depend on the worker limit.
  parallel_for(0, static_cast<int>(tasks.size()), config.jobs, [&](int t) {
    const CellTask& task = tasks[t];
    const AngularSampling angular = angular_for(config, task.na);
    const LightField4D& exact = exact_by_na.at(task.na);

    PsfModel psf;
    psf.na = task.na;
    psf.pixel_pitch = config.psf.pixel_pitch_mm > 0.0 ? config.psf.pixel_pitch_mm : scene_pitch;
    psf.sigma_coefficient = config.psf.sigma_coefficient;

    const std::vector<double> depths =
        capture_sweep_plan(config.sweep.depth_lo_mm, config.sweep.depth_hi_mm, task.m);
    const FocalStack stack = capture(scene, psf, depths, 1);

    const LightField4D conventional = reconstruct(stack, angular, 1);
    const LightField4D filtered = filtered_reconstruct(stack, config.filter, angular, 1);

    conventional_cells[t] = {"conventional", task.m, task.na, psnr(conventional, exact)};
    filtered_cells[t] = {"filtered", task.m, task.na, psnr(filtered, exact)};

    const std::string suffix = "M" + std::to_string(task.m) + "_NA" + format_number(task.na);
    write_file(cells_dir / (suffix + ".csv"),
               csv_row(conventional_cells[t]) + csv_row(filtered_cells[t]));

    if (config.outputs.epi) {
      save_image_normalized(
          extract_epi(conventional, config.outputs.epi_y_frac, config.outputs.epi_eta),
          out_dir / ("epi_conventional_" + suffix + ".png"), config.outputs.image_bits);
      save_image_normalized(
          extract_epi(filtered, config.outputs.epi_y_frac, config.outputs.epi_eta),
          out_dir / ("epi_filtered_" + suffix + ".png"), config.outputs.image_bits);
    }
    if (config.outputs.refocus) {
      for (double z : scene.depths_mm) {
        const std::string depth_tag = "_z" + format_number(z) + ".png";
        save_image_normalized(refocus(conventional, z, 1),
                              out_dir / ("refocus_conventional_" + suffix + depth_tag),
                              config.outputs.image_bits);
        save_image_normalized(refocus(filtered, z, 1),
                              out_dir / ("refocus_filtered_" + suffix + depth_tag),
                              config.outputs.image_bits);
      }
    }
    if (config.outputs.depth_map) {
      const DepthIndexMap map = depth_index_map(edge_response(stack, config.filter, 1));
      save_image(depth_map_to_image(map, scene_pitch), out_dir / ("depthmap_" + suffix + ".png"),
                 ImageBitDepth::Bits16);
    }
  });

  SweepResult result;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    result.cells.push_back(conventional_cells[t]);
    result.cells.push_back(filtered_cells[t]);
  }

  if (config.outputs.psnr_csv) {
    std::string csv = "method,M,NA,psnr_db\r\n";
    for (const SweepCell& cell : result.cells) csv += csv_row(cell);
    result.csv_path = out_dir / "psnr.csv";
    write_file(result.csv_path, csv);
  }
  return result;
}

}  // namespace lfsweep
