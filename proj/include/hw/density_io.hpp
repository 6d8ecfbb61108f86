#pragma once

// JSON text format for density matrices:
//   { "dims": [2, N], "rows": M, "cols": M, "entries": [[re, im], ...] }
// with entries in row-major order. Doubles are written with round-trip
// precision so export followed by import reproduces the matrix exactly.

#include <filesystem>
#include <string>
#include <string_view>

#include "hw/linalg.hpp"

namespace hw {

std::string density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(std::string_view text);

void write_density_file(const DensityMatrix& rho, const std::filesystem::path& path);
DensityMatrix read_density_file(const std::filesystem::path& path);

}  // namespace hw
