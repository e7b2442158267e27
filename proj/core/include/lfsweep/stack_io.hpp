#pragma once

#include <filesystem>
#include <string>

#include "lfsweep/image_io.hpp"
#include "lfsweep/scene.hpp"

namespace lfsweep {

struct StackLoadOptions {
  int crop_width = 0;   // 0 keeps the native width
  int crop_height = 0;  // 0 keeps the native height
  int downscale = 1;    // integer box-average factor, 1 disables
};

// Reads a focal stack from a directory containing a metadata.json sidecar:
//   { "pixel_pitch_mm": 0.0031,
//     "images": [ { "file": "a.png", "depth_mm": -50.0 }, ... ] }
// Images are loaded, optionally center-cropped/downscaled, and ordered by
// depth. Focal depths come from the sidecar; they are not parsed from the
// image files.
FocalStack load_stack(const std::filesystem::path& dir, const StackLoadOptions& options = {});

// Writes every capture plus the metadata sidecar; round-trips through
// load_stack bit-exactly at the chosen bit depth.
void save_stack(const FocalStack& stack, const std::filesystem::path& dir,
                ImageBitDepth depth = ImageBitDepth::Bits16,
                const std::string& extension = "png");

Image2D center_crop(const Image2D& img, int width, int height);
Image2D box_downscale(const Image2D& img, int factor);

}  // namespace lfsweep
