#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace phaseret {

using Complex = std::complex<double>;

/// Real-valued image on a row-major grid. Companion to WaveField for
/// amplitude, phase and intensity data.
struct RealGrid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // rows*cols, row-major

    RealGrid() = default;
    RealGrid(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), values(r * c, fill) {}
    RealGrid(std::size_t r, std::size_t c, std::vector<double> v);

    std::size_t size() const { return values.size(); }
    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// Complex sampled wavefield on a regular grid with physical pixel pitch.
/// Immutable after construction; construction validates that dimensions are
/// nonzero, pitch is positive and every sample is finite.
class WaveField {
public:
    WaveField(std::size_t rows, std::size_t cols, double pitch, std::vector<Complex> samples);

    /// Uniform field of the given value.
    static WaveField filled(std::size_t rows, std::size_t cols, double pitch, Complex value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return samples_.size(); }
    double pitch() const { return pitch_; }
    const std::vector<Complex>& samples() const { return samples_; }
    Complex at(std::size_t r, std::size_t c) const { return samples_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    double pitch_;
    std::vector<Complex> samples_;
};

/// Phase-only test object exp(j*pi*(w - 1/2)) where w is a binary chessboard
/// of tile x tile squares, w = 1 in the top-left tile. Amplitude is 1
/// everywhere and the phase is exactly +-pi/2.
/// Throws std::invalid_argument unless rows and cols are divisible by tile.
WaveField make_chessboard_object(std::size_t rows, std::size_t cols, std::size_t tile, double pitch);

/// |u[k]| per pixel.
RealGrid amplitude(const WaveField& field);

/// arg(u[k]) per pixel, principal value in (-pi, pi].
RealGrid phase(const WaveField& field);

/// a[k] * exp(j*phi[k]) per pixel. Requires matching dimensions and a >= 0.
WaveField compose(const RealGrid& a, const RealGrid& phi, double pitch);

/// Wrap an angle to the principal interval (-pi, pi].
double wrap_phase(double x);

/// sqrt(mean((a-b)^2)) over all pixels.
double rmse(const RealGrid& a, const RealGrid& b);

struct AlignedError {
    double phase_rmse;      // after global phase alignment, wrapped differences
    double amplitude_rmse;  // rmse(|estimate|, |reference|)
    double raw_phase_rmse;  // without alignment, wrapped differences
    double global_phase;    // the removed constant c, estimate ~ reference*exp(jc)
};

/// Phase and amplitude RMSE between two fields after removing the global
/// phase constant c = arg<estimate, reference> (intensity observations carry
/// no information about a global phase factor).
AlignedError rmse_phase_aligned(const WaveField& estimate, const WaveField& reference);

}  // namespace phaseret
