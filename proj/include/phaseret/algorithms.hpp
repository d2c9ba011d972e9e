#pragma once

#include <cstddef>
#include <vector>

#include "phaseret/field.hpp"
#include "phaseret/frame.hpp"
#include "phaseret/observations.hpp"
#include "phaseret/setup.hpp"
#include "phaseret/solvers.hpp"

namespace phaseret {

struct TraceEntry {
    std::size_t iteration;
    double phase_rmse;      // aligned; NaN when no reference was supplied
    double amplitude_rmse;  // NaN when no reference was supplied
    double objective;
};

/// Live state of a reconstruction: object estimate, per-plane multipliers,
/// splitting field and the per-iteration trace (entry 0 is the initial
/// state, so trace length = completed iterations + 1).
struct ReconstructionState {
    WaveField u0;
    std::vector<WaveField> lambdas;
    WaveField v0;
    std::vector<TraceEntry> trace;
};

/// Analysis/synthesis frames for the object amplitude and phase, plus the
/// shrinkage DC policy.
struct FramePair {
    FrameOperator amplitude;
    FrameOperator phase;
    bool shrink_dc = false;
};

/// Fresh state: u0 = v0 = init, all multipliers zero, empty trace.
ReconstructionState make_initial_state(const ObservationStack& obs, const WaveField& init);

/// Run `iterations` more iterations of the augmented Lagrangian loop on an
/// existing state, with v0^t := u0^t (no sparse filtering). Appends to the
/// trace; `truth` enables the RMSE columns.
void iterate_al(ReconstructionState& state, const ObservationStack& obs,
                const OpticalSetup& setup, const AlgoParams& params, std::size_t iterations,
                const WaveField* truth = nullptr);

/// Same loop with the sparse step enabled: spectra of amplitude and phase are
/// soft-thresholded at tau*gamma and v0 is synthesized from them.
void iterate_dal(ReconstructionState& state, const ObservationStack& obs,
                 const OpticalSetup& setup, const FramePair& frames, const AlgoParams& params,
                 std::size_t iterations, const WaveField* truth = nullptr);

/// Multi-plane magnitude-replacement baseline: propagate to every plane,
/// replace amplitudes by sqrt(max(o_r, 0)) keeping phases, back-propagate and
/// average. The trace objective is the data fidelity term alone.
ReconstructionState run_sbmir_fb(const ObservationStack& obs, const OpticalSetup& setup,
                                 const WaveField& init, std::size_t iterations,
                                 const WaveField* truth = nullptr);

ReconstructionState run_al(const ObservationStack& obs, const OpticalSetup& setup,
                           const WaveField& init, const AlgoParams& params,
                           const WaveField* truth = nullptr);

ReconstructionState run_dal(const ObservationStack& obs, const OpticalSetup& setup,
                            const WaveField& init, const FramePair& frames,
                            const AlgoParams& params, const WaveField* truth = nullptr);

/// Two-stage protocol: warm_iterations of AL, then dal_iterations of D-AL on
/// the same state. Multipliers carry over unless reset_multipliers is set.
/// The trace is continuous across the stages and both stages evaluate the
/// full objective (with the sparsity terms) for comparability.
ReconstructionState run_al_then_dal(const ObservationStack& obs, const OpticalSetup& setup,
                                    const WaveField& init, const FramePair& frames,
                                    const AlgoParams& params, std::size_t warm_iterations,
                                    std::size_t dal_iterations, bool reset_multipliers = false,
                                    const WaveField* truth = nullptr);

/// The constrained ML criterion at u0: sum_r 1/(2 sigma_r^2) ||o_r - |A_r u0|^2||^2
/// plus tau_a ||Phi_a a0||_1 + tau_phi ||Phi_phi phi0||_1 when frames are
/// given (sigma_r taken from params, which keeps the value finite for
/// noiseless stacks).
double evaluate_objective(const WaveField& u0, const ObservationStack& obs,
                          const OpticalSetup& setup, const AlgoParams& params,
                          const FramePair* frames);

}  // namespace phaseret
