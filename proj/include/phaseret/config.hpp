#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "phaseret/setup.hpp"
#include "phaseret/solvers.hpp"

namespace phaseret {

/// Flat `key = value` experiment description. `#` starts a comment, keys are
/// rejected when unknown or duplicated, and every diagnostic carries the line
/// number. Defaults reproduce the chessboard bench.
struct ExperimentConfig {
    // grid and optics
    std::size_t rows = 128;
    std::size_t cols = 128;
    double pitch = 6.7e-6;
    double wavelength = 532e-9;
    double z1 = 0.0;             // explicit first-plane distance [m]
    double z1_zf_multiple = 2.0; // when > 0 overrides z1 with multiple * z_f
    double delta_z = 2e-3;
    std::size_t num_planes = 5;

    // object
    std::string object = "chessboard";  // chessboard | file
    std::size_t tile = 16;
    std::string object_file;

    // noise
    double sigma = 0.05;
    std::uint64_t seed = 1;

    // run
    std::string algorithm = "dal";  // sbmir | al | dal
    std::size_t iterations = 50;    // sbmir/al length; D-AL stage length for dal
    std::size_t warm_iterations = 50;  // AL warm start before the D-AL stage
    bool reset_multipliers = false;

    // weights
    double tau_a = 0.01;
    double tau_phi = 0.01;
    double gamma = 0.0;  // per-plane gamma_r; 0 derives 1/sigma
    double gamma_a = 1.0;
    double gamma_phi = 1.0;
    double xi = 1.0;
    double alpha = 1.0;

    // frame
    std::size_t block = 8;
    std::size_t step = 4;
    bool shrink_dc = false;

    std::string out_dir = "out";

    bool operator==(const ExperimentConfig&) const = default;

    /// Semantic checks beyond parsing (positive physical quantities, known
    /// enumeration values, object_file presence). Throws std::invalid_argument.
    void validate() const;

    /// Optical setup with z1 resolved (z1_zf_multiple takes precedence).
    OpticalSetup to_setup() const;

    /// Per-plane solver weights sized for `num_planes` planes (pass the
    /// plane count of the observation stack being reconstructed); gamma = 0
    /// falls back to 1/sigma (weight 1 for noiseless sigma).
    AlgoParams to_algo_params(std::size_t num_planes) const;
};

/// Parse from text; `source_name` prefixes diagnostics ("file:line: ...").
ExperimentConfig parse_config(const std::string& text, const std::string& source_name);

ExperimentConfig load_config(const std::filesystem::path& path);

/// Full key set in canonical order; parse(serialize(c)) == c.
std::string serialize_config(const ExperimentConfig& config);

}  // namespace phaseret
