#include "lfsweep/light_field.hpp"

#include <cmath>
#include <string>

namespace lfsweep {

double bilinear_xy_at(const LightField4D& lf, double fx, double fy, int iu, int iv) {
  const int x0 = static_cast<int>(std::floor(fx));
  const int y0 = static_cast<int>(std::floor(fy));
  const double dx = fx - x0;
  const double dy = fy - y0;

  auto pix = [&](int x, int y) -> double {
    if (x < 0 || x >= lf.width || y < 0 || y >= lf.height) return 0.0;
    return lf.at(x, y, iu, iv);
  };

  return (1.0 - dx) * (1.0 - dy) * pix(x0, y0) + dx * (1.0 - dy) * pix(x0 + 1, y0) +
         (1.0 - dx) * dy * pix(x0, y0 + 1) + dx * dy * pix(x0 + 1, y0 + 1);
}

std::optional<ValidationIssue> validate(const LightField4D& lf) {
  if (lf.width <= 0 || lf.height <= 0 || lf.angular.n_xi <= 0 || lf.angular.n_eta <= 0) {
    return ValidationIssue{ErrorCode::DimensionMismatch,
                           "light field dimensions must be positive"};
  }
  if (lf.pixel_pitch <= 0.0 || !std::isfinite(lf.pixel_pitch)) {
    return ValidationIssue{ErrorCode::InvalidRange, "pixel_pitch must be positive and finite"};
  }
  if (lf.data.size() != lf.sample_count()) {
    return ValidationIssue{ErrorCode::DimensionMismatch,
                           "data length " + std::to_string(lf.data.size()) +
                               " does not match declared dimensions"};
  }
  for (std::size_t i = 0; i < lf.data.size(); ++i) {
    const double v = lf.data[i];
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

void require_valid(const LightField4D& lf) {
  if (auto issue = validate(lf)) raise(issue->code, issue->message);
}

}  // namespace lfsweep
