#include "phaseret/propagation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "phaseret/fft.hpp"

namespace phaseret {

namespace {

void check_dims(const WaveField& f, const TransferFunction& tf) {
    if (f.rows() != tf.rows() || f.cols() != tf.cols()) {
        throw std::invalid_argument("propagate: field/transfer dimension mismatch");
    }
}

WaveField apply(const WaveField& field, const TransferFunction& tf, bool adjoint) {
    check_dims(field, tf);
    std::vector<Complex> spectrum = field.samples();
    fft::forward(field.rows(), field.cols(), spectrum.data());
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        const Complex h = adjoint ? std::conj(tf.values()[k]) : tf.values()[k];
        spectrum[k] *= h;
    }
    fft::inverse(field.rows(), field.cols(), spectrum.data());
    return WaveField(field.rows(), field.cols(), field.pitch(), std::move(spectrum));
}

// Signed wrap-around frequency index: 0..n/2-1 stay, the rest map to negatives.
double signed_index(std::size_t m, std::size_t n) {
    return (m < (n + 1) / 2) ? static_cast<double>(m)
                             : static_cast<double>(m) - static_cast<double>(n);
}

}  // namespace

TransferFunction::TransferFunction(std::size_t rows, std::size_t cols, double distance,
                                   std::vector<Complex> values)
    : rows_(rows), cols_(cols), distance_(distance), values_(std::move(values)) {
    if (rows_ == 0 || cols_ == 0 || values_.size() != rows_ * cols_) {
        throw std::invalid_argument("TransferFunction: bad dimensions");
    }
}

TransferFunction make_transfer(const OpticalSetup& setup, double z) {
    setup.validate();
    if (z < 0.0) {
        throw std::invalid_argument("make_transfer: negative distance");
    }
    const double pi = std::numbers::pi;
    const double lambda = setup.wavelength;
    const std::size_t rows = setup.rows;
    const std::size_t cols = setup.cols;
    std::vector<Complex> values(rows * cols);
    for (std::size_t m = 0; m < rows; ++m) {
        const double fx = signed_index(m, rows) / (static_cast<double>(rows) * setup.pitch);
        const double lfx2 = (lambda * fx) * (lambda * fx);
        for (std::size_t n = 0; n < cols; ++n) {
            const double fy = signed_index(n, cols) / (static_cast<double>(cols) * setup.pitch);
            const double arg = 1.0 - lfx2 - (lambda * fy) * (lambda * fy);
            Complex h;
            if (arg < 0.0) {
                // Evanescent: hard zero for z > 0, identity at z = 0.
                h = (z == 0.0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            } else {
                const double ph = (2.0 * pi / lambda) * z * std::sqrt(arg);
                h = Complex(std::cos(ph), std::sin(ph));
            }
            values[m * cols + n] = h;
        }
    }
    return TransferFunction(rows, cols, z, std::move(values));
}

WaveField propagate_forward(const WaveField& field, const TransferFunction& tf) {
    return apply(field, tf, false);
}

WaveField propagate_adjoint(const WaveField& field, const TransferFunction& tf) {
    return apply(field, tf, true);
}

}  // namespace phaseret
