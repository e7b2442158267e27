#pragma once

#include <optional>
#include <vector>

#include "lfsweep/error.hpp"
#include "lfsweep/image.hpp"

namespace lfsweep {

// Stack of planar object slices O(x, y, z_n) with strictly increasing
// depths. Constructed scenes place the depth centroid at z = 0.
struct ObjectScene {
  std::vector<Image2D> slices;
  std::vector<double> depths_mm;

  int slice_count() const { return static_cast<int>(slices.size()); }
};

// Ordered captures I(x, y, z_m) with strictly increasing focal depths.
struct FocalStack {
  std::vector<Image2D> images;
  std::vector<double> focal_depths_mm;

  int image_count() const { return static_cast<int>(images.size()); }
};

std::optional<ValidationIssue> validate(const ObjectScene& scene);
std::optional<ValidationIssue> validate(const FocalStack& stack);

void require_valid(const ObjectScene& scene);
void require_valid(const FocalStack& stack);

// Structural check only (uniform dimensions, monotone depths); does not
// scan samples, so signed residual stacks pass.
void require_uniform(const FocalStack& stack);

}  // namespace lfsweep
