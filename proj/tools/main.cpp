// Multi-plane phase-retrieval bench: simulate noisy intensity observations of
// a complex object and reconstruct it with SBMIR-FB, AL or D-AL.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "phaseret/algorithms.hpp"
#include "phaseret/config.hpp"
#include "phaseret/field_io.hpp"
#include "phaseret/observations.hpp"
#include "phaseret/render.hpp"
#include "phaseret/report.hpp"

namespace fs = std::filesystem;
using namespace phaseret;

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir;       // overrides config out_dir when set
    std::string algorithm;     // overrides config algorithm when set
    std::string truth_path;
    std::optional<std::uint64_t> seed;
};

ExperimentConfig load_effective_config(const CommonOptions& opt) {
    ExperimentConfig cfg = load_config(opt.config_path);
    if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
    if (!opt.algorithm.empty()) cfg.algorithm = opt.algorithm;
    if (opt.seed.has_value()) cfg.seed = *opt.seed;
    cfg.validate();
    return cfg;
}

WaveField build_object(const ExperimentConfig& cfg) {
    if (cfg.object == "chessboard") {
        return make_chessboard_object(cfg.rows, cfg.cols, cfg.tile, cfg.pitch);
    }
    WaveField field = read_field(cfg.object_file);
    if (field.rows() != cfg.rows || field.cols() != cfg.cols) {
        throw std::runtime_error("object file " + cfg.object_file +
                                 " does not match the configured grid");
    }
    return field;
}

WaveField flat_init(const ObservationStack& obs, double pitch) {
    return WaveField::filled(obs.rows(), obs.cols(), pitch, Complex(1.0, 0.0));
}

void check_dims(const ExperimentConfig& cfg, const ObservationStack& obs) {
    if (obs.rows() != cfg.rows || obs.cols() != cfg.cols) {
        throw std::runtime_error("observation grid " + std::to_string(obs.rows()) + "x" +
                                 std::to_string(obs.cols()) + " does not match the configured " +
                                 std::to_string(cfg.rows) + "x" + std::to_string(cfg.cols));
    }
}

std::optional<WaveField> load_truth(const CommonOptions& opt, const ExperimentConfig& cfg) {
    if (opt.truth_path.empty()) return std::nullopt;
    WaveField truth = read_field(opt.truth_path);
    if (truth.rows() != cfg.rows || truth.cols() != cfg.cols) {
        throw std::runtime_error("ground-truth field does not match the configured grid");
    }
    return truth;
}

ReconstructionState run_algorithm(const std::string& algorithm, const ExperimentConfig& cfg,
                                  const ObservationStack& obs, const OpticalSetup& setup,
                                  const WaveField& init, const WaveField* truth,
                                  std::size_t total_budget_for_baselines) {
    const AlgoParams params = cfg.to_algo_params(obs.num_planes());
    if (algorithm == "sbmir") {
        return run_sbmir_fb(obs, setup, init, total_budget_for_baselines, truth);
    }
    if (algorithm == "al") {
        AlgoParams p = params;
        p.iterations = total_budget_for_baselines;
        return run_al(obs, setup, init, p, truth);
    }
    const FramePair frames{FrameOperator(cfg.rows, cfg.cols, cfg.block, cfg.step),
                           FrameOperator(cfg.rows, cfg.cols, cfg.block, cfg.step),
                           cfg.shrink_dc};
    return run_al_then_dal(obs, setup, init, frames, params, cfg.warm_iterations,
                           cfg.iterations, cfg.reset_multipliers, truth);
}

int cmd_simulate(const CommonOptions& opt) {
    const ExperimentConfig cfg = load_effective_config(opt);
    const fs::path out(cfg.out_dir);
    fs::create_directories(out);

    const WaveField object = build_object(cfg);
    OpticalSetup setup = cfg.to_setup();
    const ObservationStack obs = simulate_observations(object, setup, cfg.sigma, cfg.seed);

    write_field(object, out / "truth.wf");
    write_observations(obs, out / "observations.obs");

    std::printf("simulated %zu planes on a %zux%zu grid (sigma = %g, seed = %llu)\n",
                obs.num_planes(), obs.rows(), obs.cols(), cfg.sigma,
                static_cast<unsigned long long>(cfg.seed));
    for (std::size_t r = 0; r < obs.num_planes(); ++r) {
        std::printf("  plane %zu: z = %.6g m\n", r + 1, obs.distance(r));
    }
    std::printf("wrote %s and %s\n", (out / "observations.obs").c_str(),
                (out / "truth.wf").c_str());
    return 0;
}

int cmd_reconstruct(const CommonOptions& opt, const std::string& obs_path) {
    const ExperimentConfig cfg = load_effective_config(opt);
    const fs::path out(cfg.out_dir);
    fs::create_directories(out);

    const ObservationStack obs = read_observations(obs_path);
    check_dims(cfg, obs);
    const std::optional<WaveField> truth = load_truth(opt, cfg);
    const WaveField* truth_ptr = truth.has_value() ? &*truth : nullptr;

    OpticalSetup setup = cfg.to_setup();
    setup.num_planes = obs.num_planes();
    const WaveField init = flat_init(obs, cfg.pitch);

    // sbmir/al run `iterations`; dal runs warm_iterations of AL + `iterations` of D-AL.
    const ReconstructionState state =
        run_algorithm(cfg.algorithm, cfg, obs, setup, init, truth_ptr, cfg.iterations);

    write_field(state.u0, out / "reconstruction.wf");
    write_trace_csv(state.trace, truth.has_value(), out / "trace.csv");
    render_field(state.u0, out / "amplitude.pgm", out / "phase.pgm");

    std::printf("%s finished after %zu iterations\n", cfg.algorithm.c_str(),
                state.trace.back().iteration);
    if (truth.has_value()) {
        const AlignedError err = rmse_phase_aligned(state.u0, *truth);
        std::printf("phase RMSE = %.4g (raw %.4g), amplitude RMSE = %.4g\n", err.phase_rmse,
                    err.raw_phase_rmse, err.amplitude_rmse);
    }
    std::printf("wrote %s\n", (out / "reconstruction.wf").c_str());
    return 0;
}

int cmd_compare(const CommonOptions& opt, const std::string& obs_path) {
    const ExperimentConfig cfg = load_effective_config(opt);
    if (opt.truth_path.empty()) {
        throw std::runtime_error("compare requires --truth");
    }
    const fs::path out(cfg.out_dir);
    fs::create_directories(out);

    const ObservationStack obs = read_observations(obs_path);
    check_dims(cfg, obs);
    const std::optional<WaveField> truth = load_truth(opt, cfg);

    OpticalSetup setup = cfg.to_setup();
    setup.num_planes = obs.num_planes();
    const WaveField init = flat_init(obs, cfg.pitch);

    // Shared budget: the baselines run warm + dal iterations in one stage.
    const std::size_t total = cfg.warm_iterations + cfg.iterations;

    std::vector<ComparisonRow> rows;
    std::vector<std::pair<std::string, const WaveField*>> recons;
    std::vector<ReconstructionState> states;
    for (const std::string algorithm : {"sbmir", "al", "dal"}) {
        states.push_back(run_algorithm(algorithm, cfg, obs, setup, init, &*truth, total));
        const ReconstructionState& st = states.back();
        const AlignedError err = rmse_phase_aligned(st.u0, *truth);
        rows.push_back({algorithm, err.phase_rmse, err.amplitude_rmse, err.raw_phase_rmse});
        write_field(st.u0, out / (algorithm + ".wf"));
        render_field(st.u0, out / (algorithm + "_amplitude.pgm"), out / (algorithm + "_phase.pgm"));
        write_trace_csv(st.trace, true, out / (algorithm + "_trace.csv"));
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        recons.emplace_back(rows[i].algorithm, &states[i].u0);
    }

    write_comparison_csv(rows, out / "report.csv");
    write_cross_sections(*truth, recons, out / "cross_section_phase.csv",
                         out / "cross_section_amplitude.csv");
    std::fputs(comparison_table(rows).c_str(), stdout);
    std::printf("wrote %s\n", (out / "report.csv").c_str());
    return 0;
}

int cmd_render(const std::string& field_path, const std::string& out_dir) {
    const fs::path out(out_dir.empty() ? "." : out_dir);
    fs::create_directories(out);
    const WaveField field = read_field(field_path);
    const std::string stem = fs::path(field_path).stem().string();
    const fs::path amp = out / (stem + "_amplitude.pgm");
    const fs::path phs = out / (stem + "_phase.pgm");
    render_field(field, amp, phs);
    std::printf("wrote %s and %s\n", amp.c_str(), phs.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-plane phase retrieval bench"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string obs_path;
    std::string field_path;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* c = cmd->add_option("--config", opt.config_path, "experiment config file");
        if (needs_config) c->required();
        cmd->add_option("--out", opt.out_dir, "output directory (overrides config)");
        cmd->add_option("--seed", opt.seed, "noise seed (overrides config)");
        cmd->add_option("--algorithm", opt.algorithm, "sbmir | al | dal (overrides config)")
            ->check(CLI::IsMember({"sbmir", "al", "dal"}));
        cmd->add_option("--truth", opt.truth_path, "ground-truth field file for RMSE reporting");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "simulate noisy intensity observations");
    add_common(simulate, true);

    CLI::App* reconstruct = app.add_subcommand("reconstruct", "reconstruct from an observation stack");
    add_common(reconstruct, true);
    reconstruct->add_option("observations", obs_path, "OB01 observation stack")->required();

    CLI::App* compare = app.add_subcommand("compare", "run all three algorithms and report RMSE");
    add_common(compare, true);
    compare->add_option("observations", obs_path, "OB01 observation stack")->required();

    CLI::App* render = app.add_subcommand("render", "render a field file to PGM images");
    render->add_option("field", field_path, "WF01 field file")->required();
    render->add_option("--out", opt.out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmd_simulate(opt);
        if (reconstruct->parsed()) return cmd_reconstruct(opt, obs_path);
        if (compare->parsed()) return cmd_compare(opt, obs_path);
        if (render->parsed()) return cmd_render(field_path, opt.out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
