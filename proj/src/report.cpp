#include "phaseret/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace phaseret {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) {
        throw std::runtime_error("csv: cannot open " + path.string());
    }
    return os;
}

}  // namespace

void write_trace_csv(const std::vector<TraceEntry>& trace, bool with_rmse,
                     const std::filesystem::path& path) {
    std::ofstream os = open_csv(path);
    os << (with_rmse ? "iteration,phase_rmse,amplitude_rmse,objective" : "iteration,objective")
       << "\n";
    for (const TraceEntry& e : trace) {
        if (e.iteration == 0) continue;
        os << e.iteration << ",";
        if (with_rmse) {
            os << num(e.phase_rmse) << "," << num(e.amplitude_rmse) << ",";
        }
        os << num(e.objective) << "\n";
    }
    if (!os) {
        throw std::runtime_error("csv: write failed for " + path.string());
    }
}

void write_comparison_csv(const std::vector<ComparisonRow>& rows,
                          const std::filesystem::path& path) {
    std::ofstream os = open_csv(path);
    os << "algorithm,phase_rmse,amplitude_rmse,raw_phase_rmse\n";
    for (const ComparisonRow& r : rows) {
        os << r.algorithm << "," << num(r.phase_rmse) << "," << num(r.amplitude_rmse) << ","
           << num(r.raw_phase_rmse) << "\n";
    }
    if (!os) {
        throw std::runtime_error("csv: write failed for " + path.string());
    }
}

std::string comparison_table(const std::vector<ComparisonRow>& rows) {
    std::ostringstream os;
    char line[128];
    std::snprintf(line, sizeof(line), "%-10s %12s %12s %14s\n", "algorithm", "phase RMSE",
                  "ampl RMSE", "raw phase RMSE");
    os << line;
    for (const ComparisonRow& r : rows) {
        std::snprintf(line, sizeof(line), "%-10s %12.4g %12.4g %14.4g\n", r.algorithm.c_str(),
                      r.phase_rmse, r.amplitude_rmse, r.raw_phase_rmse);
        os << line;
    }
    return os.str();
}

void write_cross_sections(const WaveField& truth,
                          const std::vector<std::pair<std::string, const WaveField*>>& recons,
                          const std::filesystem::path& phase_csv,
                          const std::filesystem::path& amplitude_csv) {
    const std::size_t mid = truth.rows() / 2;

    std::vector<RealGrid> aligned_phases;
    std::vector<RealGrid> amplitudes;
    for (const auto& [name, field] : recons) {
        const double c = rmse_phase_aligned(*field, truth).global_phase;
        std::vector<Complex> rotated = field->samples();
        const Complex rot(std::cos(-c), std::sin(-c));
        for (Complex& s : rotated) s *= rot;
        const WaveField aligned(field->rows(), field->cols(), field->pitch(), std::move(rotated));
        aligned_phases.push_back(phase(aligned));
        amplitudes.push_back(amplitude(aligned));
    }
    const RealGrid truth_phase = phase(truth);
    const RealGrid truth_amp = amplitude(truth);

    auto write = [&](const std::filesystem::path& path, const RealGrid& truth_grid,
                     const std::vector<RealGrid>& grids) {
        std::ofstream os = open_csv(path);
        os << "col,truth";
        for (const auto& [name, field] : recons) os << "," << name;
        os << "\n";
        for (std::size_t c = 0; c < truth.cols(); ++c) {
            os << c << "," << num(truth_grid.at(mid, c));
            for (const RealGrid& g : grids) os << "," << num(g.at(mid, c));
            os << "\n";
        }
        if (!os) {
            throw std::runtime_error("csv: write failed for " + path.string());
        }
    };
    write(phase_csv, truth_phase, aligned_phases);
    write(amplitude_csv, truth_amp, amplitudes);
}

}  // namespace phaseret
