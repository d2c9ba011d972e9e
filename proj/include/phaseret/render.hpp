#pragma once

#include <filesystem>
#include <vector>

#include "phaseret/field.hpp"

namespace phaseret {

/// Linear map [0, max(g)] -> [0, 255]; an all-zero image stays black.
std::vector<unsigned char> amplitude_gray(const RealGrid& g);

/// Linear map of the principal interval (-pi, pi] -> [0, 255].
std::vector<unsigned char> phase_gray(const RealGrid& g);

/// Binary PGM (P5, maxval 255), row-major.
void write_pgm(std::size_t rows, std::size_t cols, const std::vector<unsigned char>& bytes,
               const std::filesystem::path& path);

/// Writes <amplitude_path> and <phase_path> renders of a field.
void render_field(const WaveField& field, const std::filesystem::path& amplitude_path,
                  const std::filesystem::path& phase_path);

}  // namespace phaseret
