#include "phaseret/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phaseret {

namespace {

void check_same_dims(std::size_t ar, std::size_t ac, std::size_t br, std::size_t bc,
                     const char* what) {
    if (ar != br || ac != bc) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(ar) + "x" + std::to_string(ac) + " vs " +
                                    std::to_string(br) + "x" + std::to_string(bc) + ")");
    }
}

}  // namespace

RealGrid::RealGrid(std::size_t r, std::size_t c, std::vector<double> v)
    : rows(r), cols(c), values(std::move(v)) {
    if (values.size() != rows * cols) {
        throw std::invalid_argument("RealGrid: value count does not match dimensions");
    }
}

WaveField::WaveField(std::size_t rows, std::size_t cols, double pitch,
                     std::vector<Complex> samples)
    : rows_(rows), cols_(cols), pitch_(pitch), samples_(std::move(samples)) {
    if (rows_ == 0 || cols_ == 0) {
        throw std::invalid_argument("WaveField: dimensions must be at least 1x1");
    }
    if (!(pitch_ > 0.0)) {
        throw std::invalid_argument("WaveField: pitch must be positive");
    }
    if (samples_.size() != rows_ * cols_) {
        throw std::invalid_argument("WaveField: sample count does not match dimensions");
    }
    for (const Complex& s : samples_) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            throw std::invalid_argument("WaveField: non-finite sample");
        }
    }
}

WaveField WaveField::filled(std::size_t rows, std::size_t cols, double pitch, Complex value) {
    return WaveField(rows, cols, pitch, std::vector<Complex>(rows * cols, value));
}

WaveField make_chessboard_object(std::size_t rows, std::size_t cols, std::size_t tile,
                                 double pitch) {
    if (tile == 0) {
        throw std::invalid_argument("make_chessboard_object: tile must be at least 1");
    }
    if (rows % tile != 0 || cols % tile != 0) {
        throw std::invalid_argument("make_chessboard_object: dimensions not divisible by tile");
    }
    const double half_pi = std::numbers::pi / 2.0;
    std::vector<Complex> samples(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const bool w = ((r / tile) + (c / tile)) % 2 == 0;  // w = 1 at the top-left tile
            const double phi = w ? half_pi : -half_pi;
            samples[r * cols + c] = Complex(std::cos(phi), std::sin(phi));
        }
    }
    return WaveField(rows, cols, pitch, std::move(samples));
}

RealGrid amplitude(const WaveField& field) {
    RealGrid out(field.rows(), field.cols());
    for (std::size_t k = 0; k < field.size(); ++k) {
        out.values[k] = std::abs(field.samples()[k]);
    }
    return out;
}

RealGrid phase(const WaveField& field) {
    const double pi = std::numbers::pi;
    RealGrid out(field.rows(), field.cols());
    for (std::size_t k = 0; k < field.size(); ++k) {
        double a = std::arg(field.samples()[k]);  // [-pi, pi]
        if (a <= -pi) a = pi;                     // principal value in (-pi, pi]
        out.values[k] = a;
    }
    return out;
}

WaveField compose(const RealGrid& a, const RealGrid& phi, double pitch) {
    check_same_dims(a.rows, a.cols, phi.rows, phi.cols, "compose");
    std::vector<Complex> samples(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a.values[k] < 0.0) {
            throw std::invalid_argument("compose: negative amplitude");
        }
        samples[k] = a.values[k] * Complex(std::cos(phi.values[k]), std::sin(phi.values[k]));
    }
    return WaveField(a.rows, a.cols, pitch, std::move(samples));
}

double wrap_phase(double x) {
    const double pi = std::numbers::pi;
    double y = std::remainder(x, 2.0 * pi);  // [-pi, pi]
    if (y <= -pi) y = pi;
    return y;
}

double rmse(const RealGrid& a, const RealGrid& b) {
    check_same_dims(a.rows, a.cols, b.rows, b.cols, "rmse");
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a.values[k] - b.values[k];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(a.size()));
}

AlignedError rmse_phase_aligned(const WaveField& estimate, const WaveField& reference) {
    check_same_dims(estimate.rows(), estimate.cols(), reference.rows(), reference.cols(),
                    "rmse_phase_aligned");
    Complex inner(0.0, 0.0);
    for (std::size_t k = 0; k < estimate.size(); ++k) {
        inner += estimate.samples()[k] * std::conj(reference.samples()[k]);
    }
    const double c = (std::abs(inner) > 0.0) ? std::arg(inner) : 0.0;

    double acc_aligned = 0.0;
    double acc_raw = 0.0;
    double acc_amp = 0.0;
    for (std::size_t k = 0; k < estimate.size(); ++k) {
        const double dphi = std::arg(estimate.samples()[k]) - std::arg(reference.samples()[k]);
        const double da = wrap_phase(dphi - c);
        const double dr = wrap_phase(dphi);
        acc_aligned += da * da;
        acc_raw += dr * dr;
        const double dm = std::abs(estimate.samples()[k]) - std::abs(reference.samples()[k]);
        acc_amp += dm * dm;
    }
    const double n = static_cast<double>(estimate.size());
    return AlignedError{std::sqrt(acc_aligned / n), std::sqrt(acc_amp / n),
                        std::sqrt(acc_raw / n), c};
}

}  // namespace phaseret
