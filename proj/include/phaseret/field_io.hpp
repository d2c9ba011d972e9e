#pragma once

#include <filesystem>

#include "phaseret/field.hpp"

namespace phaseret {

// WF01 field file, bit-exact:
//   magic "WF01", then little-endian u32 rows, u32 cols, f64 pitch [m],
//   then rows*cols samples row-major as (f64 real, f64 imag).

void write_field(const WaveField& field, const std::filesystem::path& path);

WaveField read_field(const std::filesystem::path& path);

}  // namespace phaseret
