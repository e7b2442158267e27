#include "lfsweep/focus_filter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lfsweep/backprojection.hpp"
#include "lfsweep/convolve.hpp"
#include "lfsweep/parallel.hpp"

namespace lfsweep {
namespace {

double laplacian_at(const Image2D& img, int x, int y, LaplacianStencil stencil) {
  auto pix = [&](int xs, int ys) {
    return img.at(std::clamp(xs, 0, img.width - 1), std::clamp(ys, 0, img.height - 1));
  };
  const double c = img.at(x, y);
  double acc = pix(x - 1, y) + pix(x + 1, y) + pix(x, y - 1) + pix(x, y + 1) - 4.0 * c;
  if (stencil == LaplacianStencil::EightNeighbor) {
    acc += pix(x - 1, y - 1) + pix(x + 1, y - 1) + pix(x - 1, y + 1) + pix(x + 1, y + 1) -
           4.0 * c;
  }
  return acc;
}

}  // namespace

std::vector<Image2D> edge_response(const FocalStack& stack, const FilterParams& params,
                                   int num_threads) {
  require_uniform(stack);
  if (params.sigma_smooth < 0.0) {
    raise(ErrorCode::InvalidRange, "sigma_smooth must be nonnegative");
  }

  std::vector<Image2D> responses(stack.images.size());
  const std::vector<double> taps = gaussian_taps(params.sigma_smooth);

  parallel_for(0, stack.image_count(), num_threads, [&](int m) {
    const Image2D* src = &stack.images[m];
    Image2D smoothed;
    if (taps.size() > 1) {
      smoothed = convolve_separable(*src, taps, BorderMode::Replicate);
      src = &smoothed;
    }
    Image2D resp(src->width, src->height, src->pixel_pitch);
    for (int y = 0; y < src->height; ++y) {
      for (int x = 0; x < src->width; ++x) {
        resp.at(x, y) = std::abs(laplacian_at(*src, x, y, params.stencil));
      }
    }
    responses[m] = std::move(resp);
  });
  return responses;
}

DepthIndexMap depth_index_map(const std::vector<Image2D>& responses) {
  if (responses.empty()) {
    raise(ErrorCode::DimensionMismatch, "at least one response grid is required");
  }
  const Image2D& first = responses.front();
  for (std::size_t m = 1; m < responses.size(); ++m) {
    if (!responses[m].same_shape(first)) {
      raise(ErrorCode::DimensionMismatch,
            "response grid " + std::to_string(m) + " does not match the first grid");
    }
  }

  DepthIndexMap map;
  map.width = first.width;
  map.height = first.height;
  map.index.assign(first.pixel_count(), 0);
  map.covered.assign(first.pixel_count(), 0);

  for (std::size_t i = 0; i < first.pixel_count(); ++i) {
    int best = 0;
    double best_value = responses[0].data[i];
    for (std::size_t m = 1; m < responses.size(); ++m) {
      if (responses[m].data[i] > best_value) {
        best_value = responses[m].data[i];
        best = static_cast<int>(m);
      }
    }
    map.index[i] = best;
    map.covered[i] = best_value > 0.0 ? 1 : 0;
  }
  return map;
}

FocalStack filter_stack(const FocalStack& stack, const DepthIndexMap& map) {
  require_uniform(stack);
  const Image2D& first = stack.images.front();
  if (map.width != first.width || map.height != first.height) {
    raise(ErrorCode::DimensionMismatch, "depth index map does not match the stack dimensions");
  }
  for (int idx : map.index) {
    if (idx < 0 || idx >= stack.image_count()) {
      raise(ErrorCode::DimensionMismatch, "depth index map refers to a missing capture");
    }
  }

  FocalStack filtered;
  filtered.focal_depths_mm = stack.focal_depths_mm;
  filtered.images.reserve(stack.images.size());
  for (int m = 0; m < stack.image_count(); ++m) {
    Image2D out(first.width, first.height, first.pixel_pitch);
    for (std::size_t i = 0; i < out.data.size(); ++i) {
      if (map.index[i] == m) out.data[i] = stack.images[m].data[i];
    }
    filtered.images.push_back(std::move(out));
  }
  return filtered;
}

LightField4D filtered_reconstruct(const FocalStack& stack, const FilterParams& params,
                                  const AngularSampling& angular, int num_threads) {
  const std::vector<Image2D> responses = edge_response(stack, params, num_threads);
  const DepthIndexMap map = depth_index_map(responses);
  const FocalStack filtered = filter_stack(stack, map);
  return reconstruct(filtered, angular, num_threads);
}

Image2D depth_map_to_image(const DepthIndexMap& map, double pixel_pitch) {
  Image2D img(map.width, map.height, pixel_pitch);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    img.data[i] = map.index[i] / 65535.0;
  }
  return img;
}

}  // namespace lfsweep
