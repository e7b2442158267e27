#include "lfsweep/lf_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

namespace lfsweep {
namespace {

static_assert(sizeof(float) == 4 && sizeof(double) == 8);

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  if constexpr (std::is_same_v<T, float>) {
    put_le(out, std::bit_cast<std::uint32_t>(value));
  } else if constexpr (std::is_same_v<T, double>) {
    put_le(out, std::bit_cast<std::uint64_t>(value));
  } else {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      out.push_back(static_cast<std::uint8_t>((value >> (8 * i)) & 0xff));
    }
  }
}

class Reader {
 public:
  Reader(std::istream& in, const std::string& name) : in_(in), name_(name) {}

  template <typename T>
  T get_le() {
    if constexpr (std::is_same_v<T, float>) {
      return std::bit_cast<float>(get_le<std::uint32_t>());
    } else if constexpr (std::is_same_v<T, double>) {
      return std::bit_cast<double>(get_le<std::uint64_t>());
    } else {
      std::uint8_t bytes[sizeof(T)];
      read(bytes, sizeof(T));
      T value = 0;
      for (std::size_t i = 0; i < sizeof(T); ++i) {
        value |= static_cast<T>(bytes[i]) << (8 * i);
      }
      return value;
    }
  }

  void read(void* dst, std::size_t bytes) {
    in_.read(static_cast<char*>(dst), static_cast<std::streamsize>(bytes));
    if (static_cast<std::size_t>(in_.gcount()) != bytes) {
      raise(ErrorCode::TruncatedFile, name_ + ": unexpected end of file");
    }
  }

 private:
  std::istream& in_;
  std::string name_;
};

}  // namespace

std::uint64_t lf4d_file_size(std::uint32_t nx, std::uint32_t ny, std::uint32_t n_xi,
                             std::uint32_t n_eta) {
  return kLf4dHeaderBytes + 4ull * nx * ny * n_xi * n_eta;
}

void save_light_field(const LightField4D& lf, const std::filesystem::path& path) {
  if (lf.data.size() != lf.sample_count()) {
    raise(ErrorCode::DimensionMismatch, "light field data does not match its dimensions");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::IoFailure, "cannot create " + path.string());

  std::vector<std::uint8_t> header;
  header.reserve(kLf4dHeaderBytes);
  header.insert(header.end(), {'L', 'F', '4', 'D'});
  put_le(header, kLf4dVersion);
  put_le(header, static_cast<std::uint32_t>(lf.width));
  put_le(header, static_cast<std::uint32_t>(lf.height));
  put_le(header, static_cast<std::uint32_t>(lf.angular.n_xi));
  put_le(header, static_cast<std::uint32_t>(lf.angular.n_eta));
  put_le(header, lf.pixel_pitch);
  put_le(header, lf.angular.xi_max);
  put_le(header, lf.angular.eta_max);
  put_le(header, lf.principal_plane_z);
  out.write(reinterpret_cast<const char*>(header.data()),
            static_cast<std::streamsize>(header.size()));

  // Samples are written in storage order, which is already row-major over
  // (x, y, xi, eta).
  std::vector<std::uint8_t> buffer;
  buffer.reserve(1 << 20);
  for (double v : lf.data) {
    put_le(buffer, static_cast<float>(v));
    if (buffer.size() >= (1 << 20)) {
      out.write(reinterpret_cast<const char*>(buffer.data()),
                static_cast<std::streamsize>(buffer.size()));
      buffer.clear();
    }
  }
  if (!buffer.empty()) {
    out.write(reinterpret_cast<const char*>(buffer.data()),
              static_cast<std::streamsize>(buffer.size()));
  }
  if (!out) raise(ErrorCode::IoFailure, "failed writing " + path.string());
}

LightField4D load_light_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoFailure, "cannot open " + path.string());
  Reader reader(in, path.string());

  char magic[4];
  reader.read(magic, 4);
  if (std::memcmp(magic, "LF4D", 4) != 0) {
    raise(ErrorCode::BadMagic, path.string() + " is not an LF4D container");
  }
  const auto version = reader.get_le<std::uint16_t>();
  if (version != kLf4dVersion) {
    raise(ErrorCode::VersionUnsupported,
          path.string() + ": version " + std::to_string(version) + " is not supported");
  }

  const auto nx = reader.get_le<std::uint32_t>();
  const auto ny = reader.get_le<std::uint32_t>();
  const auto n_xi = reader.get_le<std::uint32_t>();
  const auto n_eta = reader.get_le<std::uint32_t>();
  const double pitch = reader.get_le<double>();
  const double xi_max = reader.get_le<double>();
  const double eta_max = reader.get_le<double>();
  const double plane_z = reader.get_le<double>();
  if (nx == 0 || ny == 0 || n_xi == 0 || n_eta == 0) {
    raise(ErrorCode::DimensionMismatch, path.string() + ": zero-sized dimension");
  }

  AngularSampling ang;
  ang.xi_max = xi_max;
  ang.eta_max = eta_max;
  ang.n_xi = static_cast<int>(n_xi);
  ang.n_eta = static_cast<int>(n_eta);
  LightField4D lf(static_cast<int>(nx), static_cast<int>(ny), pitch, ang);
  lf.principal_plane_z = plane_z;

  std::vector<std::uint8_t> raw(lf.sample_count() * 4);
  reader.read(raw.data(), raw.size());
  for (std::size_t i = 0; i < lf.sample_count(); ++i) {
    std::uint32_t bits = 0;
    for (int b = 0; b < 4; ++b) bits |= static_cast<std::uint32_t>(raw[4 * i + b]) << (8 * b);
    lf.data[i] = std::bit_cast<float>(bits);
  }
  return lf;
}

}  // namespace lfsweep
