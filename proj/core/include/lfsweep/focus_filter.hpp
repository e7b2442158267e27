#pragma once

#include <cstdint>
#include <vector>

#include "lfsweep/light_field.hpp"
#include "lfsweep/scene.hpp"

namespace lfsweep {

enum class LaplacianStencil {
  FourNeighbor,   // center weight -4
  EightNeighbor,  // center weight -8
};

// Parameters of the Gaussian-smoothed Laplacian focus response.
struct FilterParams {
  double sigma_smooth = 2.0;  // pixels; 0 disables smoothing
  LaplacianStencil stencil = LaplacianStencil::FourNeighbor;
};

// Per-pixel index of the sharpest capture. covered marks pixels where at
// least one capture produced a nonzero response; uncovered pixels carry
// the tie-break index 0 and are unreliable for depth readout.
struct DepthIndexMap {
  int width = 0;
  int height = 0;
  std::vector<int> index;
  std::vector<std::uint8_t> covered;

  int at(int x, int y) const { return index[static_cast<std::size_t>(y) * width + x]; }
  bool covered_at(int x, int y) const {
    return covered[static_cast<std::size_t>(y) * width + x] != 0;
  }
};

// |Laplacian(Gaussian(I_m))| per capture. Smoothing and the Laplacian
// stencil both use replicated-edge borders; the response is the absolute
// magnitude of the filtered value.
std::vector<Image2D> edge_response(const FocalStack& stack, const FilterParams& params,
                                   int num_threads = 0);

// Argmax of the response across captures; ties keep the smaller index.
DepthIndexMap depth_index_map(const std::vector<Image2D>& responses);

// Sparse stack: capture m keeps pixel (x, y) iff map(x, y) == m, zero
// elsewhere. Focal depths are preserved, so summing the output over m
// recovers each pixel's sharpest value exactly once.
FocalStack filter_stack(const FocalStack& stack, const DepthIndexMap& map);

// edge_response -> depth_index_map -> filter_stack -> reconstruct.
LightField4D filtered_reconstruct(const FocalStack& stack, const FilterParams& params,
                                  const AngularSampling& angular, int num_threads = 0);

// Raw indices scaled by 1/65535 so a 16-bit export stores them verbatim.
Image2D depth_map_to_image(const DepthIndexMap& map, double pixel_pitch);

}  // namespace lfsweep
