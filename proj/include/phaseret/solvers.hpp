#pragma once

#include <cstddef>
#include <vector>

#include "phaseret/field.hpp"
#include "phaseret/propagation.hpp"

namespace phaseret {

/// Weights of the split criteria and the multiplier step sizes.
struct AlgoParams {
    double tau_a = 0.01;    // amplitude sparsity weight, >= 0
    double tau_phi = 0.01;  // phase sparsity weight, >= 0
    std::vector<double> gamma_r;  // per-plane penalty weights, > 0
    double gamma_a = 1.0;   // amplitude spectrum penalty, > 0
    double gamma_phi = 1.0; // phase spectrum penalty, > 0
    double xi = 1.0;        // splitting weight, > 0
    std::vector<double> alpha_r;  // multiplier step per plane
    std::vector<double> sigma_r;  // per-plane noise std used as weights, > 0
    std::size_t iterations = 100;

    /// Unit-order defaults: gamma_r = 1/sigma, unit spectral weights and
    /// steps. A nonpositive sigma (noiseless data) falls back to weight 1.
    static AlgoParams defaults(std::size_t num_planes, double sigma);

    void validate(std::size_t num_planes) const;
};

/// Per-pixel observation fit: argmin over u of
///   (1/2)*(o - |u|^2)^2 + (1/gamma)*|u - p|^2.
/// The minimizer keeps the phase of p; its amplitude is the best nonnegative
/// root of gamma*a^3 + a*(1 - gamma*o) - |p| = 0 (candidates include a = 0,
/// ties go to the smaller amplitude). When p = 0 the direction is
/// exp(j*fallback_phase). o may be negative (noise can push intensities
/// below zero).
Complex fit_observation_pixel(double o, Complex p, double gamma, double fallback_phase = 0.0);

/// Plane-wise G fit with p[k] = u_half[k] - lambda[k]; at p[k] = 0 the phase
/// falls back to the phase of u_half[k] (0 if that is zero too).
WaveField fit_observation_plane(const RealGrid& o, const WaveField& u_half,
                                const WaveField& lambda, double gamma);

/// lambda + alpha * (u_next - u_half), elementwise.
WaveField lagrange_update(const WaveField& lambda, const WaveField& u_next,
                          const WaveField& u_half, double alpha);

/// Regularized object update, exact in the frequency domain:
///   u0^(f) = [sum_r w_r conj(H_r) (u_r^ + L_r^) + v0^/xi] / [sum_r w_r |H_r|^2 + 1/xi]
/// with w_r = 1/(sigma_r^2 gamma_r). The denominator is >= 1/xi > 0 at every
/// frequency, so the update is never singular.
WaveField object_update(const std::vector<WaveField>& planes,
                        const std::vector<WaveField>& lambdas, const WaveField& v0,
                        const std::vector<TransferFunction>& transfers,
                        const AlgoParams& params);

/// Minimum of the object-update denominator over all frequencies.
double object_update_min_denominator(const std::vector<TransferFunction>& transfers,
                                     const AlgoParams& params);

}  // namespace phaseret
