#include "lfsweep/image.hpp"

#include <cmath>
#include <string>

namespace lfsweep {

double bilinear_at(const Image2D& img, double fx, double fy) {
  const int x0 = static_cast<int>(std::floor(fx));
  const int y0 = static_cast<int>(std::floor(fy));
  const double dx = fx - x0;
  const double dy = fy - y0;

  auto pix = [&](int x, int y) -> double {
    return img.in_bounds(x, y) ? img.at(x, y) : 0.0;
  };

  return (1.0 - dx) * (1.0 - dy) * pix(x0, y0) + dx * (1.0 - dy) * pix(x0 + 1, y0) +
         (1.0 - dx) * dy * pix(x0, y0 + 1) + dx * dy * pix(x0 + 1, y0 + 1);
}

std::optional<ValidationIssue> validate(const Image2D& img) {
  if (img.width <= 0 || img.height <= 0) {
    return ValidationIssue{ErrorCode::DimensionMismatch,
                           "image dimensions must be positive, got " +
                               std::to_string(img.width) + "x" + std::to_string(img.height)};
  }
  if (img.pixel_pitch <= 0.0 || !std::isfinite(img.pixel_pitch)) {
    return ValidationIssue{ErrorCode::InvalidRange, "pixel_pitch must be positive and finite"};
  }
  if (img.data.size() != img.pixel_count()) {
    return ValidationIssue{ErrorCode::DimensionMismatch,
                           "data length " + std::to_string(img.data.size()) +
                               " does not match " + std::to_string(img.width) + "x" +
                               std::to_string(img.height)};
  }
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    const double v = img.data[i];
    if (!std::isfinite(v)) {
      return ValidationIssue{ErrorCode::NonFinite,
                             "sample " + std::to_string(i) + " is not finite"};
    }
    if (v < 0.0) {
      return ValidationIssue{ErrorCode::NegativeIntensity,
                             "sample " + std::to_string(i) + " is negative"};
    }
  }
  return std::nullopt;
}

void require_valid(const Image2D& img) {
  if (auto issue = validate(img)) raise(issue->code, issue->message);
}

}  // namespace lfsweep
