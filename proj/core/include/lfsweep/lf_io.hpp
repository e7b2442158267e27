#pragma once

#include <cstdint>
#include <filesystem>

#include "lfsweep/light_field.hpp"

namespace lfsweep {

// LF4D container, all fields little-endian:
//   bytes 0..3   magic "LF4D"
//   u16          version (currently 1)
//   4 x u32      dims (x, y, xi, eta)
//   f64          pixel_pitch [mm/px]
//   f64          xi_max
//   f64          eta_max
//   f64          principal_plane_z [mm]
//   f32[...]     samples, row-major over (x, y, xi, eta)
inline constexpr std::uint16_t kLf4dVersion = 1;
inline constexpr std::uint64_t kLf4dHeaderBytes = 4 + 2 + 4 * 4 + 4 * 8;

void save_light_field(const LightField4D& lf, const std::filesystem::path& path);
LightField4D load_light_field(const std::filesystem::path& path);

// Exact on-disk size in bytes for the given dims.
std::uint64_t lf4d_file_size(std::uint32_t nx, std::uint32_t ny, std::uint32_t n_xi,
                             std::uint32_t n_eta);

}  // namespace lfsweep
