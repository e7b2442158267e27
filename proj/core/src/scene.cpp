#include "lfsweep/scene.hpp"

#include <cmath>
#include <string>

namespace lfsweep {
namespace {

std::optional<ValidationIssue> check_geometry(const std::vector<Image2D>& images,
                                              const std::vector<double>& depths,
                                              const char* what) {
  if (images.empty()) {
    return ValidationIssue{ErrorCode::DimensionMismatch,
                           std::string(what) + " must hold at least one image"};
  }
  if (images.size() != depths.size()) {
    return ValidationIssue{ErrorCode::DimensionMismatch,
                           std::string(what) + " has " + std::to_string(images.size()) +
                               " images but " + std::to_string(depths.size()) + " depths"};
  }
  const Image2D& first = images.front();
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (!images[i].same_shape(first) || images[i].pixel_pitch != first.pixel_pitch) {
      return ValidationIssue{ErrorCode::DimensionMismatch,
                             std::string(what) + " image " + std::to_string(i) +
                                 " does not match the first image's geometry"};
    }
  }
  for (std::size_t i = 0; i < depths.size(); ++i) {
    if (!std::isfinite(depths[i])) {
      return ValidationIssue{ErrorCode::NonFinite,
                             "depth " + std::to_string(i) + " is not finite"};
    }
    if (i > 0 && !(depths[i] > depths[i - 1])) {
      return ValidationIssue{ErrorCode::NonMonotoneDepths,
                             "depths must be strictly increasing, violated at index " +
                                 std::to_string(i)};
    }
  }
  return std::nullopt;
}

std::optional<ValidationIssue> check_samples(const std::vector<Image2D>& images) {
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (auto issue = validate(images[i])) {
      issue->message = "image " + std::to_string(i) + ": " + issue->message;
      return issue;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ValidationIssue> validate(const ObjectScene& scene) {
  if (auto issue = check_geometry(scene.slices, scene.depths_mm, "scene")) return issue;
  return check_samples(scene.slices);
}

std::optional<ValidationIssue> validate(const FocalStack& stack) {
  if (auto issue = check_geometry(stack.images, stack.focal_depths_mm, "focal stack"))
    return issue;
  return check_samples(stack.images);
}

void require_valid(const ObjectScene& scene) {
  if (auto issue = validate(scene)) raise(issue->code, issue->message);
}

void require_valid(const FocalStack& stack) {
  if (auto issue = validate(stack)) raise(issue->code, issue->message);
}

void require_uniform(const FocalStack& stack) {
  if (auto issue = check_geometry(stack.images, stack.focal_depths_mm, "focal stack")) {
    raise(issue->code, issue->message);
  }
}

}  // namespace lfsweep
