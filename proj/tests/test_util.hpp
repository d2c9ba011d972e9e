#pragma once

#include <cmath>
#include <random>

#include "phaseret/field.hpp"
#include "phaseret/setup.hpp"

namespace testutil {

using phaseret::Complex;
using phaseret::RealGrid;
using phaseret::WaveField;

inline RealGrid random_grid(std::size_t rows, std::size_t cols, std::uint64_t seed,
                            double lo = -1.0, double hi = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    RealGrid g(rows, cols);
    for (double& v : g.values) v = dist(rng);
    return g;
}

// Amplitudes well away from zero so phases are well conditioned.
inline WaveField random_field(std::size_t rows, std::size_t cols, double pitch,
                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(0.3, 1.5);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    std::vector<Complex> samples(rows * cols);
    for (Complex& s : samples) {
        const double a = amp(rng);
        const double p = ang(rng);
        s = a * Complex(std::cos(p), std::sin(p));
    }
    return WaveField(rows, cols, pitch, std::move(samples));
}

inline double rel_l2_diff(const WaveField& a, const WaveField& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        num += std::norm(a.samples()[k] - b.samples()[k]);
        den += std::norm(b.samples()[k]);
    }
    return std::sqrt(num / (den > 0.0 ? den : 1.0));
}

inline phaseret::OpticalSetup paper_setup(std::size_t rows, std::size_t cols,
                                          std::size_t num_planes = 5) {
    phaseret::OpticalSetup s;
    s.wavelength = 532e-9;
    s.pitch = 6.7e-6;
    s.delta_z = 2e-3;
    s.num_planes = num_planes;
    s.rows = rows;
    s.cols = cols;
    s.z1 = 2.0 * s.in_focus_distance();
    return s;
}

}  // namespace testutil
