#include "lfsweep/stack_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <vector>

#include <nlohmann/json.hpp>

namespace lfsweep {
namespace {

using nlohmann::json;

constexpr const char* kMetadataName = "metadata.json";

}  // namespace

Image2D center_crop(const Image2D& img, int width, int height) {
  if (width <= 0 || height <= 0 || width > img.width || height > img.height) {
    raise(ErrorCode::InvalidRange, "crop size must be positive and fit inside the image");
  }
  const int x0 = (img.width - width) / 2;
  const int y0 = (img.height - height) / 2;
  Image2D out(width, height, img.pixel_pitch);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      out.at(x, y) = img.at(x0 + x, y0 + y);
    }
  }
  return out;
}

Image2D box_downscale(const Image2D& img, int factor) {
  if (factor < 1) raise(ErrorCode::InvalidRange, "downscale factor must be >= 1");
  if (factor == 1) return img;
  if (img.width % factor != 0 || img.height % factor != 0) {
    raise(ErrorCode::InvalidRange, "image dimensions must be divisible by the downscale factor");
  }
  Image2D out(img.width / factor, img.height / factor, img.pixel_pitch * factor);
  const double norm = 1.0 / (static_cast<double>(factor) * factor);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      double acc = 0.0;
      for (int dy = 0; dy < factor; ++dy) {
        for (int dx = 0; dx < factor; ++dx) {
          acc += img.at(x * factor + dx, y * factor + dy);
        }
      }
      out.at(x, y) = acc * norm;
    }
  }
  return out;
}

FocalStack load_stack(const std::filesystem::path& dir, const StackLoadOptions& options) {
  const std::filesystem::path meta_path = dir / kMetadataName;
  if (!std::filesystem::exists(meta_path)) {
    raise(ErrorCode::MissingMetadata, "no " + std::string(kMetadataName) + " in " + dir.string());
  }

  json meta;
  {
    std::ifstream in(meta_path);
    if (!in) raise(ErrorCode::IoFailure, "cannot open " + meta_path.string());
    try {
      in >> meta;
    } catch (const json::exception& e) {
      raise(ErrorCode::MissingMetadata, meta_path.string() + ": " + e.what());
    }
  }
  if (!meta.contains("pixel_pitch_mm") || !meta.contains("images") ||
      !meta["images"].is_array() || meta["images"].empty()) {
    raise(ErrorCode::MissingMetadata,
          meta_path.string() + " must provide pixel_pitch_mm and a non-empty images array");
  }
  const double pitch = meta["pixel_pitch_mm"].get<double>();
  if (!(pitch > 0.0)) {
    raise(ErrorCode::MissingMetadata, meta_path.string() + ": pixel_pitch_mm must be positive");
  }

  struct Entry {
    std::filesystem::path file;
    double depth_mm;
  };
  std::vector<Entry> entries;
  for (const auto& item : meta["images"]) {
    if (!item.contains("file") || !item.contains("depth_mm")) {
      raise(ErrorCode::MissingMetadata,
            meta_path.string() + ": every images entry needs file and depth_mm");
    }
    entries.push_back({dir / item["file"].get<std::string>(), item["depth_mm"].get<double>()});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.depth_mm < b.depth_mm; });

  FocalStack stack;
  for (const Entry& entry : entries) {
    if (!std::filesystem::exists(entry.file)) {
      raise(ErrorCode::MissingMetadata, "referenced image is missing: " + entry.file.string());
    }
    Image2D img = load_image(entry.file, pitch);
    if (options.crop_width > 0 || options.crop_height > 0) {
      img = center_crop(img, options.crop_width > 0 ? options.crop_width : img.width,
                        options.crop_height > 0 ? options.crop_height : img.height);
    }
    if (options.downscale > 1) img = box_downscale(img, options.downscale);
    if (!stack.images.empty() && !img.same_shape(stack.images.front())) {
      raise(ErrorCode::MixedDimensions,
            entry.file.string() + " does not match the other stack images");
    }
    stack.images.push_back(std::move(img));
    stack.focal_depths_mm.push_back(entry.depth_mm);
  }
  require_valid(stack);
  return stack;
}

void save_stack(const FocalStack& stack, const std::filesystem::path& dir, ImageBitDepth depth,
                const std::string& extension) {
  require_valid(stack);
  std::filesystem::create_directories(dir);

  json meta;
  meta["pixel_pitch_mm"] = stack.images.front().pixel_pitch;
  meta["images"] = json::array();
  for (int m = 0; m < stack.image_count(); ++m) {
    char name[64];
    std::snprintf(name, sizeof(name), "capture_%03d.%s", m, extension.c_str());
    save_image(stack.images[m], dir / name, depth);
    meta["images"].push_back({{"file", name}, {"depth_mm", stack.focal_depths_mm[m]}});
  }

  std::ofstream out(dir / kMetadataName, std::ios::binary);
  if (!out) raise(ErrorCode::IoFailure, "cannot create metadata in " + dir.string());
  out << meta.dump(2) << "\n";
}

}  // namespace lfsweep
