#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lfsweep/config.hpp"

namespace lfsweep {

struct SweepCell {
  std::string method;  // "conventional" | "filtered"
  int m = 0;
  double na = 0.0;
  double psnr_db = 0.0;
};

struct SweepResult {
  std::vector<SweepCell> cells;  // declaration order: M outer, NA inner, method last
  std::filesystem::path csv_path;
};

// Runs the full (M, NA) x {conventional, filtered} grid of the config's
// synthetic scene against its exact light field. Grid cells execute
// concurrently up to the worker limit; every cell flushes its own CSV
// fragment and images as it completes, and psnr.csv is assembled
// single-threaded in declaration order at the end. Repeated runs on the
// same config produce byte-identical outputs.
SweepResult run_sweep(const ExperimentConfig& config);

// Stable short form used in file names ("0.2", "-20").
std::string format_number(double value);

}  // namespace lfsweep
