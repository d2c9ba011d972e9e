#pragma once

#include <cstddef>
#include <vector>

#include "phaseret/field.hpp"

namespace phaseret {

/// Overcomplete analysis/synthesis pair built from overlapping B x B blocks,
/// each transformed with the orthonormal separable 2-D DCT-II. Block origins
/// run 0, step, 2*step, ... and the final origin is clamped so the last block
/// ends exactly at the image edge; every pixel is covered at least once.
/// Synthesis inverse-transforms each block, overlap-adds and divides by the
/// per-pixel coverage, which makes it an exact left inverse of analysis.
class FrameOperator {
public:
    FrameOperator(std::size_t image_rows, std::size_t image_cols, std::size_t block,
                  std::size_t step);

    std::size_t image_rows() const { return image_rows_; }
    std::size_t image_cols() const { return image_cols_; }
    std::size_t block() const { return block_; }
    std::size_t step() const { return step_; }
    std::size_t num_blocks() const { return row_origins_.size() * col_origins_.size(); }
    std::size_t spectrum_size() const { return num_blocks() * block_ * block_; }
    const std::vector<std::size_t>& row_origins() const { return row_origins_; }
    const std::vector<std::size_t>& col_origins() const { return col_origins_; }
    const std::vector<int>& coverage() const { return coverage_; }

    /// Orthonormal 1-D DCT-II matrix, block x block, row-major.
    const std::vector<double>& basis() const { return dct_; }

private:
    std::size_t image_rows_, image_cols_;
    std::size_t block_, step_;
    std::vector<std::size_t> row_origins_, col_origins_;
    std::vector<int> coverage_;
    std::vector<double> dct_;
};

/// Frame coefficients in block-scan order (row-major over block origins,
/// row-major within each transformed block). Carries the geometry of the
/// generating frame so synthesis can reject mismatched inputs.
struct SpectrumVector {
    std::size_t image_rows = 0;
    std::size_t image_cols = 0;
    std::size_t block = 0;
    std::size_t step = 0;
    std::vector<double> coefficients;
};

/// theta = Phi * x : extract each block, transform, concatenate.
SpectrumVector analyze(const RealGrid& x, const FrameOperator& frame);

/// x = Psi * theta : inverse-transform blocks, overlap-add, divide by coverage.
RealGrid synthesize(const SpectrumVector& theta, const FrameOperator& frame);

/// sign(u) * max(|u| - tau, 0).
double soft_threshold(double u, double tau);

/// Elementwise shrinkage of a spectrum. Each block's DC coefficient passes
/// through unshrunk unless shrink_dc is set. Throws on negative tau.
SpectrumVector soft_threshold(const SpectrumVector& theta, double tau, bool shrink_dc = false);

}  // namespace phaseret
