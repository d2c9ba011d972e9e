#include "phaseret/frame.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phaseret {

namespace {

std::vector<std::size_t> clamped_origins(std::size_t extent, std::size_t block,
                                         std::size_t step) {
    std::vector<std::size_t> origins;
    for (std::size_t o = 0; o + block <= extent; o += step) origins.push_back(o);
    if (origins.back() != extent - block) origins.push_back(extent - block);
    return origins;
}

// out = D * X   (all B x B, row-major)
void mul_left(const std::vector<double>& d, const double* x, double* out, std::size_t b) {
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < b; ++k) acc += d[i * b + k] * x[k * b + j];
            out[i * b + j] = acc;
        }
    }
}

// out = X * D^T
void mul_right_t(const double* x, const std::vector<double>& d, double* out, std::size_t b) {
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < b; ++k) acc += x[i * b + k] * d[j * b + k];
            out[i * b + j] = acc;
        }
    }
}

// out = D^T * X
void mul_left_t(const std::vector<double>& d, const double* x, double* out, std::size_t b) {
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < b; ++k) acc += d[k * b + i] * x[k * b + j];
            out[i * b + j] = acc;
        }
    }
}

// out = X * D
void mul_right(const double* x, const std::vector<double>& d, double* out, std::size_t b) {
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < b; ++k) acc += x[i * b + k] * d[k * b + j];
            out[i * b + j] = acc;
        }
    }
}

void check_compatible(const SpectrumVector& theta, const FrameOperator& frame) {
    if (theta.image_rows != frame.image_rows() || theta.image_cols != frame.image_cols() ||
        theta.block != frame.block() || theta.step != frame.step()) {
        throw std::invalid_argument("synthesize: spectrum was generated for a different frame");
    }
    if (theta.coefficients.size() != frame.spectrum_size()) {
        throw std::invalid_argument("synthesize: coefficient count mismatch");
    }
}

}  // namespace

FrameOperator::FrameOperator(std::size_t image_rows, std::size_t image_cols, std::size_t block,
                             std::size_t step)
    : image_rows_(image_rows), image_cols_(image_cols), block_(block), step_(step) {
    if (block_ < 1 || step_ < 1 || step_ > block_) {
        throw std::invalid_argument("FrameOperator: need 1 <= step <= block");
    }
    if (block_ > image_rows_ || block_ > image_cols_) {
        throw std::invalid_argument("FrameOperator: block larger than image");
    }
    row_origins_ = clamped_origins(image_rows_, block_, step_);
    col_origins_ = clamped_origins(image_cols_, block_, step_);

    coverage_.assign(image_rows_ * image_cols_, 0);
    for (std::size_t orow : row_origins_) {
        for (std::size_t ocol : col_origins_) {
            for (std::size_t r = 0; r < block_; ++r) {
                for (std::size_t c = 0; c < block_; ++c) {
                    coverage_[(orow + r) * image_cols_ + (ocol + c)] += 1;
                }
            }
        }
    }

    // Orthonormal DCT-II: D[j][k] = c_j * cos(pi*(2k+1)*j/(2B)).
    const double pi = std::numbers::pi;
    dct_.resize(block_ * block_);
    for (std::size_t j = 0; j < block_; ++j) {
        const double cj = (j == 0) ? std::sqrt(1.0 / static_cast<double>(block_))
                                   : std::sqrt(2.0 / static_cast<double>(block_));
        for (std::size_t k = 0; k < block_; ++k) {
            dct_[j * block_ + k] =
                cj * std::cos(pi * (2.0 * static_cast<double>(k) + 1.0) *
                              static_cast<double>(j) / (2.0 * static_cast<double>(block_)));
        }
    }
}

SpectrumVector analyze(const RealGrid& x, const FrameOperator& frame) {
    if (x.rows != frame.image_rows() || x.cols != frame.image_cols()) {
        throw std::invalid_argument("analyze: image/frame dimension mismatch");
    }
    const std::size_t b = frame.block();
    SpectrumVector theta;
    theta.image_rows = frame.image_rows();
    theta.image_cols = frame.image_cols();
    theta.block = b;
    theta.step = frame.step();
    theta.coefficients.resize(frame.spectrum_size());

    std::vector<double> blk(b * b), tmp(b * b);
    std::size_t pos = 0;
    for (std::size_t orow : frame.row_origins()) {
        for (std::size_t ocol : frame.col_origins()) {
            for (std::size_t r = 0; r < b; ++r) {
                for (std::size_t c = 0; c < b; ++c) {
                    blk[r * b + c] = x.at(orow + r, ocol + c);
                }
            }
            mul_left(frame.basis(), blk.data(), tmp.data(), b);
            mul_right_t(tmp.data(), frame.basis(), &theta.coefficients[pos], b);
            pos += b * b;
        }
    }
    return theta;
}

RealGrid synthesize(const SpectrumVector& theta, const FrameOperator& frame) {
    check_compatible(theta, frame);
    const std::size_t b = frame.block();
    RealGrid out(frame.image_rows(), frame.image_cols(), 0.0);

    std::vector<double> tmp(b * b), blk(b * b);
    std::size_t pos = 0;
    for (std::size_t orow : frame.row_origins()) {
        for (std::size_t ocol : frame.col_origins()) {
            mul_left_t(frame.basis(), &theta.coefficients[pos], tmp.data(), b);
            mul_right(tmp.data(), frame.basis(), blk.data(), b);
            pos += b * b;
            for (std::size_t r = 0; r < b; ++r) {
                for (std::size_t c = 0; c < b; ++c) {
                    out.at(orow + r, ocol + c) += blk[r * b + c];
                }
            }
        }
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        out.values[k] /= static_cast<double>(frame.coverage()[k]);
    }
    return out;
}

double soft_threshold(double u, double tau) {
    const double m = std::abs(u) - tau;
    return (m > 0.0) ? std::copysign(m, u) : 0.0;
}

SpectrumVector soft_threshold(const SpectrumVector& theta, double tau, bool shrink_dc) {
    if (tau < 0.0) {
        throw std::invalid_argument("soft_threshold: negative threshold");
    }
    const std::size_t coeffs_per_block = theta.block * theta.block;
    if (coeffs_per_block == 0) {
        throw std::invalid_argument("soft_threshold: spectrum has no frame geometry");
    }
    SpectrumVector out = theta;
    for (std::size_t k = 0; k < out.coefficients.size(); ++k) {
        if (!shrink_dc && k % coeffs_per_block == 0) continue;  // DC exempt
        out.coefficients[k] = soft_threshold(out.coefficients[k], tau);
    }
    return out;
}

}  // namespace phaseret
