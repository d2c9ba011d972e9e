#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "phaseret/algorithms.hpp"
#include "phaseret/field.hpp"

namespace phaseret {

// CSV conventions throughout: ',' delimiter, '.' decimal separator, one
// header row.

/// One row per completed iteration (the iteration-0 snapshot is kept in the
/// in-memory trace only). Columns iteration,phase_rmse,amplitude_rmse,objective,
/// or iteration,objective when with_rmse is false.
void write_trace_csv(const std::vector<TraceEntry>& trace, bool with_rmse,
                     const std::filesystem::path& path);

struct ComparisonRow {
    std::string algorithm;
    double phase_rmse;      // aligned
    double amplitude_rmse;
    double raw_phase_rmse;
};

void write_comparison_csv(const std::vector<ComparisonRow>& rows,
                          const std::filesystem::path& path);

/// Fixed-width table for terminal output.
std::string comparison_table(const std::vector<ComparisonRow>& rows);

/// Middle-row cross sections of phase and amplitude for the ground truth and
/// each reconstruction (the reconstructions are globally phase-aligned to the
/// truth first). Columns: col,truth,<name>,... One data row per grid column.
void write_cross_sections(const WaveField& truth,
                          const std::vector<std::pair<std::string, const WaveField*>>& recons,
                          const std::filesystem::path& phase_csv,
                          const std::filesystem::path& amplitude_csv);

}  // namespace phaseret
