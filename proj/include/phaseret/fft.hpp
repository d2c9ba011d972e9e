#pragma once

#include <cstddef>

#include "phaseret/field.hpp"

namespace phaseret::fft {

// Unitary 2-D DFT on row-major complex data, in place. Both directions scale
// by 1/sqrt(rows*cols) so inverse(forward(x)) = x and energy is preserved.
// Reentrant: the plan cache is internally synchronized.

void forward(std::size_t rows, std::size_t cols, Complex* data);

void inverse(std::size_t rows, std::size_t cols, Complex* data);

}  // namespace phaseret::fft
