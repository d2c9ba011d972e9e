#include "phaseret/algorithms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "phaseret/propagation.hpp"

namespace phaseret {

namespace {

std::vector<TransferFunction> build_transfers(const ObservationStack& obs,
                                              const OpticalSetup& setup) {
    setup.validate();
    if (setup.rows != obs.rows() || setup.cols != obs.cols()) {
        throw std::invalid_argument("reconstruction: observation/setup dimension mismatch");
    }
    std::vector<TransferFunction> transfers;
    transfers.reserve(obs.num_planes());
    for (std::size_t r = 0; r < obs.num_planes(); ++r) {
        transfers.push_back(make_transfer(setup, obs.distance(r)));
    }
    return transfers;
}

double fidelity_term(const WaveField& u0, const ObservationStack& obs,
                     const std::vector<TransferFunction>& transfers,
                     const std::vector<double>& sigmas) {
    double total = 0.0;
    for (std::size_t r = 0; r < obs.num_planes(); ++r) {
        const WaveField ur = propagate_forward(u0, transfers[r]);
        double acc = 0.0;
        for (std::size_t k = 0; k < ur.size(); ++k) {
            const double res = obs.plane(r).values[k] - std::norm(ur.samples()[k]);
            acc += res * res;
        }
        total += acc / (2.0 * sigmas[r] * sigmas[r]);
    }
    return total;
}

double l1_norm(const SpectrumVector& theta) {
    double acc = 0.0;
    for (double c : theta.coefficients) acc += std::abs(c);
    return acc;
}

double objective_impl(const WaveField& u0, const ObservationStack& obs,
                      const std::vector<TransferFunction>& transfers, const AlgoParams& params,
                      const FramePair* frames) {
    double obj = fidelity_term(u0, obs, transfers, params.sigma_r);
    if (frames != nullptr) {
        obj += params.tau_a * l1_norm(analyze(amplitude(u0), frames->amplitude));
        obj += params.tau_phi * l1_norm(analyze(phase(u0), frames->phase));
    }
    return obj;
}

TraceEntry make_entry(std::size_t iteration, const WaveField& u0, const WaveField* truth,
                      double objective) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    TraceEntry e{iteration, nan, nan, objective};
    if (truth != nullptr) {
        const AlignedError err = rmse_phase_aligned(u0, *truth);
        e.phase_rmse = err.phase_rmse;
        e.amplitude_rmse = err.amplitude_rmse;
    }
    return e;
}

// v0 = Psi_a theta_a o exp(j Psi_phi theta_phi). The synthesized amplitude
// may dip below zero after shrinkage; the product form keeps that exact.
// With both thresholds at zero the shrinkage is the identity and the left
// inverse collapses the whole step to v0 = u0; return that exactly.
WaveField sparse_splitting_field(const WaveField& u0, const FramePair& frames,
                                 const AlgoParams& params) {
    if (params.tau_a * params.gamma_a == 0.0 && params.tau_phi * params.gamma_phi == 0.0) {
        return u0;
    }
    const RealGrid a0 = amplitude(u0);
    const RealGrid phi0 = phase(u0);
    const SpectrumVector theta_a =
        soft_threshold(analyze(a0, frames.amplitude), params.tau_a * params.gamma_a,
                       frames.shrink_dc);
    const SpectrumVector theta_phi =
        soft_threshold(analyze(phi0, frames.phase), params.tau_phi * params.gamma_phi,
                       frames.shrink_dc);
    const RealGrid sa = synthesize(theta_a, frames.amplitude);
    const RealGrid sp = synthesize(theta_phi, frames.phase);
    std::vector<Complex> samples(u0.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        samples[k] = sa.values[k] * Complex(std::cos(sp.values[k]), std::sin(sp.values[k]));
    }
    return WaveField(u0.rows(), u0.cols(), u0.pitch(), std::move(samples));
}

// One engine for AL and D-AL; they differ only in how v0 is produced.
// step_frames == nullptr runs plain AL (v0 := u0). objective_frames controls
// whether the recorded objective includes the sparsity terms, so a warm-start
// stage can be scored with the same criterion as the D-AL stage that follows.
void iterate_core(ReconstructionState& state, const ObservationStack& obs,
                  const OpticalSetup& setup, const FramePair* step_frames,
                  const FramePair* objective_frames, const AlgoParams& params,
                  std::size_t iterations, const WaveField* truth) {
    const std::size_t num_planes = obs.num_planes();
    params.validate(num_planes);
    if (state.lambdas.size() != num_planes) {
        throw std::invalid_argument("iterate: state/observation plane count mismatch");
    }
    if (state.u0.rows() != obs.rows() || state.u0.cols() != obs.cols()) {
        throw std::invalid_argument("iterate: state/observation dimension mismatch");
    }
    const std::vector<TransferFunction> transfers = build_transfers(obs, setup);

    if (state.trace.empty()) {
        state.trace.push_back(make_entry(
            0, state.u0, truth, objective_impl(state.u0, obs, transfers, params, objective_frames)));
    }

    std::vector<WaveField> u_half;
    std::vector<WaveField> u_next;
    for (std::size_t it = 0; it < iterations; ++it) {
        state.v0 = (step_frames != nullptr) ? sparse_splitting_field(state.u0, *step_frames, params)
                                            : state.u0;
        u_half.clear();
        u_next.clear();
        for (std::size_t r = 0; r < num_planes; ++r) {
            u_half.push_back(propagate_forward(state.v0, transfers[r]));
            u_next.push_back(fit_observation_plane(obs.plane(r), u_half[r], state.lambdas[r],
                                                   params.gamma_r[r]));
        }
        // u0 update reads the pre-update multipliers.
        WaveField new_u0 = object_update(u_next, state.lambdas, state.v0, transfers, params);
        for (std::size_t r = 0; r < num_planes; ++r) {
            state.lambdas[r] =
                lagrange_update(state.lambdas[r], u_next[r], u_half[r], params.alpha_r[r]);
        }
        state.u0 = std::move(new_u0);
        state.trace.push_back(make_entry(
            state.trace.back().iteration + 1, state.u0, truth,
            objective_impl(state.u0, obs, transfers, params, objective_frames)));
    }
}

std::vector<WaveField> zero_multipliers(const ObservationStack& obs, const WaveField& like) {
    return std::vector<WaveField>(
        obs.num_planes(), WaveField::filled(like.rows(), like.cols(), like.pitch(), Complex(0, 0)));
}

}  // namespace

ReconstructionState make_initial_state(const ObservationStack& obs, const WaveField& init) {
    if (init.rows() != obs.rows() || init.cols() != obs.cols()) {
        throw std::invalid_argument("make_initial_state: init/observation dimension mismatch");
    }
    return ReconstructionState{init, zero_multipliers(obs, init), init, {}};
}

void iterate_al(ReconstructionState& state, const ObservationStack& obs,
                const OpticalSetup& setup, const AlgoParams& params, std::size_t iterations,
                const WaveField* truth) {
    iterate_core(state, obs, setup, nullptr, nullptr, params, iterations, truth);
}

void iterate_dal(ReconstructionState& state, const ObservationStack& obs,
                 const OpticalSetup& setup, const FramePair& frames, const AlgoParams& params,
                 std::size_t iterations, const WaveField* truth) {
    iterate_core(state, obs, setup, &frames, &frames, params, iterations, truth);
}

ReconstructionState run_sbmir_fb(const ObservationStack& obs, const OpticalSetup& setup,
                                 const WaveField& init, std::size_t iterations,
                                 const WaveField* truth) {
    const std::vector<TransferFunction> transfers = build_transfers(obs, setup);
    ReconstructionState state = make_initial_state(obs, init);
    const std::size_t num_planes = obs.num_planes();

    // Fidelity-only objective; sigma = 0 planes are scored with unit weight.
    std::vector<double> sigmas(num_planes);
    for (std::size_t r = 0; r < num_planes; ++r) {
        sigmas[r] = (obs.sigma(r) > 0.0) ? obs.sigma(r) : 1.0;
    }
    auto objective = [&](const WaveField& u0) { return fidelity_term(u0, obs, transfers, sigmas); };

    state.trace.push_back(make_entry(0, state.u0, truth, objective(state.u0)));
    for (std::size_t it = 0; it < iterations; ++it) {
        std::vector<Complex> acc(state.u0.size(), Complex(0.0, 0.0));
        for (std::size_t r = 0; r < num_planes; ++r) {
            WaveField ur = propagate_forward(state.u0, transfers[r]);
            std::vector<Complex> replaced(ur.size());
            for (std::size_t k = 0; k < ur.size(); ++k) {
                const double mag = std::sqrt(std::max(obs.plane(r).values[k], 0.0));
                const Complex u = ur.samples()[k];
                const double m = std::abs(u);
                const Complex unit = (m > 0.0) ? u / m : Complex(1.0, 0.0);
                replaced[k] = mag * unit;
            }
            const WaveField back = propagate_adjoint(
                WaveField(ur.rows(), ur.cols(), ur.pitch(), std::move(replaced)), transfers[r]);
            for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += back.samples()[k];
        }
        const double inv_k = 1.0 / static_cast<double>(num_planes);
        for (Complex& c : acc) c *= inv_k;
        state.u0 = WaveField(state.u0.rows(), state.u0.cols(), state.u0.pitch(), std::move(acc));
        state.v0 = state.u0;
        state.trace.push_back(
            make_entry(state.trace.back().iteration + 1, state.u0, truth, objective(state.u0)));
    }
    return state;
}

ReconstructionState run_al(const ObservationStack& obs, const OpticalSetup& setup,
                           const WaveField& init, const AlgoParams& params,
                           const WaveField* truth) {
    ReconstructionState state = make_initial_state(obs, init);
    iterate_al(state, obs, setup, params, params.iterations, truth);
    return state;
}

ReconstructionState run_dal(const ObservationStack& obs, const OpticalSetup& setup,
                            const WaveField& init, const FramePair& frames,
                            const AlgoParams& params, const WaveField* truth) {
    ReconstructionState state = make_initial_state(obs, init);
    iterate_dal(state, obs, setup, frames, params, params.iterations, truth);
    return state;
}

ReconstructionState run_al_then_dal(const ObservationStack& obs, const OpticalSetup& setup,
                                    const WaveField& init, const FramePair& frames,
                                    const AlgoParams& params, std::size_t warm_iterations,
                                    std::size_t dal_iterations, bool reset_multipliers,
                                    const WaveField* truth) {
    ReconstructionState state = make_initial_state(obs, init);
    iterate_core(state, obs, setup, nullptr, &frames, params, warm_iterations, truth);
    if (reset_multipliers) {
        state.lambdas = zero_multipliers(obs, state.u0);
    }
    iterate_core(state, obs, setup, &frames, &frames, params, dal_iterations, truth);
    return state;
}

double evaluate_objective(const WaveField& u0, const ObservationStack& obs,
                          const OpticalSetup& setup, const AlgoParams& params,
                          const FramePair* frames) {
    params.validate(obs.num_planes());
    if (u0.rows() != obs.rows() || u0.cols() != obs.cols()) {
        throw std::invalid_argument("evaluate_objective: dimension mismatch");
    }
    return objective_impl(u0, obs, build_transfers(obs, setup), params, frames);
}

}  // namespace phaseret
