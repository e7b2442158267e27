#pragma once

#include <filesystem>

#include "lfsweep/image.hpp"

namespace lfsweep {

enum class ImageBitDepth : int {
  Bits8 = 8,
  Bits16 = 16,
};

// Grayscale PNG or PGM, chosen by extension (.png / .pgm). 8- and 16-bit
// samples normalize to [0, 1]; anything else is rejected.
Image2D load_image(const std::filesystem::path& path, double pixel_pitch);

// Clamps to [0, 1] and quantizes to the requested depth.
void save_image(const Image2D& img, const std::filesystem::path& path,
                ImageBitDepth depth = ImageBitDepth::Bits16);

// Peak-normalizes first; for diagnostic images whose absolute scale is
// arbitrary (EPIs, unnormalized reconstructions).
void save_image_normalized(const Image2D& img, const std::filesystem::path& path,
                           ImageBitDepth depth = ImageBitDepth::Bits8);

}  // namespace lfsweep
