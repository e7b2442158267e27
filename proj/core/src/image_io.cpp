#include "lfsweep/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

namespace lfsweep {
namespace {

std::string lower_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// ---- PNG ----

Image2D load_png(const std::filesystem::path& path, double pixel_pitch) {
  FilePtr file(std::fopen(path.string().c_str(), "rb"));
  if (!file) raise(ErrorCode::IoFailure, "cannot open " + path.string());

  png_byte header[8];
  if (std::fread(header, 1, 8, file.get()) != 8 || png_sig_cmp(header, 0, 8) != 0) {
    raise(ErrorCode::IoFailure, path.string() + " is not a PNG file");
  }

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    raise(ErrorCode::IoFailure, "libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    raise(ErrorCode::IoFailure, "libpng failed reading " + path.string());
  }

  png_init_io(png, file.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  const int color_type = png_get_color_type(png, info);

  if (color_type != PNG_COLOR_TYPE_GRAY || (bit_depth != 8 && bit_depth != 16)) {
    png_destroy_read_struct(&png, &info, nullptr);
    raise(ErrorCode::UnsupportedBitDepth,
          path.string() + ": only 8/16-bit grayscale PNG is supported");
  }
  if (bit_depth == 16) png_set_swap(png);  // PNG stores big-endian samples

  const std::size_t row_bytes = static_cast<std::size_t>(width) * (bit_depth / 8);
  std::vector<std::uint8_t> pixels(row_bytes * height);
  std::vector<png_bytep> rows(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = pixels.data() + y * row_bytes;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  Image2D img(static_cast<int>(width), static_cast<int>(height), pixel_pitch);
  if (bit_depth == 8) {
    for (std::size_t i = 0; i < img.data.size(); ++i) img.data[i] = pixels[i] / 255.0;
  } else {
    const auto* samples = reinterpret_cast<const std::uint16_t*>(pixels.data());
    for (std::size_t i = 0; i < img.data.size(); ++i) img.data[i] = samples[i] / 65535.0;
  }
  return img;
}

void save_png(const Image2D& img, const std::filesystem::path& path, int bit_depth) {
  FilePtr file(std::fopen(path.string().c_str(), "wb"));
  if (!file) raise(ErrorCode::IoFailure, "cannot create " + path.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    raise(ErrorCode::IoFailure, "libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    raise(ErrorCode::IoFailure, "libpng failed writing " + path.string());
  }

  png_init_io(png, file.get());
  png_set_IHDR(png, info, img.width, img.height, bit_depth, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  const double maxval = bit_depth == 8 ? 255.0 : 65535.0;
  const std::size_t row_bytes = static_cast<std::size_t>(img.width) * (bit_depth / 8);
  std::vector<std::uint8_t> row(row_bytes);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const double v = std::clamp(img.at(x, y), 0.0, 1.0);
      const auto q = static_cast<std::uint32_t>(std::lround(v * maxval));
      if (bit_depth == 8) {
        row[x] = static_cast<std::uint8_t>(q);
      } else {
        row[2 * x] = static_cast<std::uint8_t>(q >> 8);  // big-endian, as PNG expects
        row[2 * x + 1] = static_cast<std::uint8_t>(q & 0xff);
      }
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

// ---- PGM (binary P5) ----

int pgm_read_token(std::istream& in) {
  // Skips whitespace and '#' comments, then parses a nonnegative integer.
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = in.get();
  }
  if (c == EOF || !std::isdigit(c)) return -1;
  int value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    c = in.get();
  }
  return value;  // the terminating whitespace has been consumed
}

Image2D load_pgm(const std::filesystem::path& path, double pixel_pitch) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoFailure, "cannot open " + path.string());

  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (magic[0] != 'P' || magic[1] != '5') {
    raise(ErrorCode::UnsupportedBitDepth, path.string() + ": only binary PGM (P5) is supported");
  }
  const int width = pgm_read_token(in);
  const int height = pgm_read_token(in);
  const int maxval = pgm_read_token(in);
  if (width <= 0 || height <= 0 || maxval <= 0) {
    raise(ErrorCode::IoFailure, path.string() + ": malformed PGM header");
  }
  if (maxval != 255 && maxval != 65535) {
    raise(ErrorCode::UnsupportedBitDepth,
          path.string() + ": PGM maxval must be 255 or 65535, got " + std::to_string(maxval));
  }

  const int bytes_per_sample = maxval > 255 ? 2 : 1;
  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<std::uint8_t> raw(count * bytes_per_sample);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
    raise(ErrorCode::TruncatedFile, path.string() + ": PGM pixel data is truncated");
  }

  Image2D img(width, height, pixel_pitch);
  if (bytes_per_sample == 1) {
    for (std::size_t i = 0; i < count; ++i) img.data[i] = raw[i] / 255.0;
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const unsigned v = (static_cast<unsigned>(raw[2 * i]) << 8) | raw[2 * i + 1];
      img.data[i] = v / 65535.0;  // PGM stores the most significant byte first
    }
  }
  return img;
}

void save_pgm(const Image2D& img, const std::filesystem::path& path, int bit_depth) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::IoFailure, "cannot create " + path.string());

  const int maxval = bit_depth == 8 ? 255 : 65535;
  out << "P5\n" << img.width << " " << img.height << "\n" << maxval << "\n";
  std::vector<std::uint8_t> raw;
  raw.reserve(img.pixel_count() * (bit_depth / 8));
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const double v = std::clamp(img.at(x, y), 0.0, 1.0);
      const auto q = static_cast<std::uint32_t>(std::lround(v * maxval));
      if (bit_depth == 8) {
        raw.push_back(static_cast<std::uint8_t>(q));
      } else {
        raw.push_back(static_cast<std::uint8_t>(q >> 8));
        raw.push_back(static_cast<std::uint8_t>(q & 0xff));
      }
    }
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) raise(ErrorCode::IoFailure, "failed writing " + path.string());
}

}  // namespace

Image2D load_image(const std::filesystem::path& path, double pixel_pitch) {
  if (!(pixel_pitch > 0.0)) raise(ErrorCode::InvalidRange, "pixel_pitch must be positive");
  const std::string ext = lower_extension(path);
  if (ext == ".png") return load_png(path, pixel_pitch);
  if (ext == ".pgm") return load_pgm(path, pixel_pitch);
  raise(ErrorCode::UnsupportedBitDepth, path.string() + ": unsupported image format '" + ext + "'");
}

void save_image(const Image2D& img, const std::filesystem::path& path, ImageBitDepth depth) {
  if (img.width <= 0 || img.height <= 0 || img.data.size() != img.pixel_count()) {
    raise(ErrorCode::DimensionMismatch, "image is empty or inconsistent");
  }
  const std::string ext = lower_extension(path);
  if (ext == ".png") {
    save_png(img, path, static_cast<int>(depth));
  } else if (ext == ".pgm") {
    save_pgm(img, path, static_cast<int>(depth));
  } else {
    raise(ErrorCode::UnsupportedBitDepth,
          path.string() + ": unsupported image format '" + ext + "'");
  }
}

void save_image_normalized(const Image2D& img, const std::filesystem::path& path,
                           ImageBitDepth depth) {
  double peak = 0.0;
  for (double v : img.data) peak = std::max(peak, v);
  Image2D scaled = img;
  if (peak > 0.0) {
    for (double& v : scaled.data) v /= peak;
  }
  save_image(scaled, path, depth);
}

}  // namespace lfsweep
