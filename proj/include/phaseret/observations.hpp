#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "phaseret/field.hpp"
#include "phaseret/setup.hpp"

namespace phaseret {

/// K intensity planes o_r with per-plane noise levels and strictly
/// increasing distances. The seed records how the noise was generated; it is
/// provenance metadata and is not part of the OB01 file format.
class ObservationStack {
public:
    ObservationStack(std::vector<RealGrid> planes, std::vector<double> sigmas,
                     std::vector<double> distances, std::uint64_t seed);

    std::size_t num_planes() const { return planes_.size(); }
    std::size_t rows() const { return planes_.front().rows; }
    std::size_t cols() const { return planes_.front().cols; }
    const RealGrid& plane(std::size_t r) const { return planes_[r]; }      // 0-based
    double sigma(std::size_t r) const { return sigmas_[r]; }
    double distance(std::size_t r) const { return distances_[r]; }
    const std::vector<double>& distances() const { return distances_; }
    std::uint64_t seed() const { return seed_; }

private:
    std::vector<RealGrid> planes_;
    std::vector<double> sigmas_;
    std::vector<double> distances_;
    std::uint64_t seed_;
};

/// o_r = |A_r u0|^2 + eps_r with eps_r ~ N(0, sigma^2) i.i.d., drawn from a
/// generator seeded with `seed` (plane by plane, row-major). Observations may
/// go negative. sigma = 0 produces noiseless intensities.
ObservationStack simulate_observations(const WaveField& u0, const OpticalSetup& setup,
                                       double sigma, std::uint64_t seed);

// OB01 observation file, bit-exact:
//   magic "OB01", little-endian u32 K, u32 rows, u32 cols, then per plane
//   f64 z_r [m], f64 sigma_r, rows*cols intensities as f64 row-major.

void write_observations(const ObservationStack& obs, const std::filesystem::path& path);

ObservationStack read_observations(const std::filesystem::path& path);

}  // namespace phaseret
