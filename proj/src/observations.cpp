#include "phaseret/observations.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include "phaseret/propagation.hpp"
#include "wire.hpp"

namespace phaseret {

namespace {

constexpr char kMagic[4] = {'O', 'B', '0', '1'};
constexpr std::uint64_t kMaxPixels = 1ull << 26;
constexpr std::uint32_t kMaxPlanes = 4096;

}  // namespace

ObservationStack::ObservationStack(std::vector<RealGrid> planes, std::vector<double> sigmas,
                                   std::vector<double> distances, std::uint64_t seed)
    : planes_(std::move(planes)), sigmas_(std::move(sigmas)),
      distances_(std::move(distances)), seed_(seed) {
    if (planes_.empty()) {
        throw std::invalid_argument("ObservationStack: need at least one plane");
    }
    if (sigmas_.size() != planes_.size() || distances_.size() != planes_.size()) {
        throw std::invalid_argument("ObservationStack: per-plane vectors must match plane count");
    }
    const std::size_t r0 = planes_.front().rows;
    const std::size_t c0 = planes_.front().cols;
    if (r0 == 0 || c0 == 0) {
        throw std::invalid_argument("ObservationStack: empty grid");
    }
    for (const RealGrid& g : planes_) {
        if (g.rows != r0 || g.cols != c0 || g.values.size() != r0 * c0) {
            throw std::invalid_argument("ObservationStack: planes must share dimensions");
        }
    }
    for (double s : sigmas_) {
        if (!(s >= 0.0)) throw std::invalid_argument("ObservationStack: negative sigma");
    }
    for (std::size_t r = 1; r < distances_.size(); ++r) {
        if (!(distances_[r] > distances_[r - 1])) {
            throw std::invalid_argument("ObservationStack: distances must be strictly increasing");
        }
    }
}

ObservationStack simulate_observations(const WaveField& u0, const OpticalSetup& setup,
                                       double sigma, std::uint64_t seed) {
    setup.validate();
    if (setup.rows != u0.rows() || setup.cols != u0.cols()) {
        throw std::invalid_argument("simulate_observations: object/setup dimension mismatch");
    }
    if (!(sigma >= 0.0)) {
        throw std::invalid_argument("simulate_observations: sigma must be nonnegative");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> unit_normal(0.0, 1.0);

    std::vector<RealGrid> planes;
    std::vector<double> sigmas(setup.num_planes, sigma);
    std::vector<double> distances;
    planes.reserve(setup.num_planes);
    for (std::size_t r = 1; r <= setup.num_planes; ++r) {
        const double z = setup.plane_distance(r);
        distances.push_back(z);
        const WaveField ur = propagate_forward(u0, make_transfer(setup, z));
        RealGrid o(u0.rows(), u0.cols());
        for (std::size_t k = 0; k < o.size(); ++k) {
            o.values[k] = std::norm(ur.samples()[k]);
            if (sigma > 0.0) o.values[k] += sigma * unit_normal(rng);
        }
        planes.push_back(std::move(o));
    }
    return ObservationStack(std::move(planes), std::move(sigmas), std::move(distances), seed);
}

void write_observations(const ObservationStack& obs, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw std::runtime_error("write_observations: cannot open " + path.string());
    }
    os.write(kMagic, 4);
    wire::put_u32(os, static_cast<std::uint32_t>(obs.num_planes()));
    wire::put_u32(os, static_cast<std::uint32_t>(obs.rows()));
    wire::put_u32(os, static_cast<std::uint32_t>(obs.cols()));
    for (std::size_t r = 0; r < obs.num_planes(); ++r) {
        wire::put_f64(os, obs.distance(r));
        wire::put_f64(os, obs.sigma(r));
        for (double v : obs.plane(r).values) wire::put_f64(os, v);
    }
    if (!os) {
        throw std::runtime_error("write_observations: write failed for " + path.string());
    }
}

ObservationStack read_observations(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw std::runtime_error("read_observations: cannot open " + path.string());
    }
    const std::string what = "read_observations: " + path.string();
    wire::expect_magic(is, kMagic, what);
    const std::uint32_t num_planes = wire::get_u32(is, what);
    const std::uint64_t rows = wire::get_u32(is, what);
    const std::uint64_t cols = wire::get_u32(is, what);
    if (num_planes == 0 || num_planes > kMaxPlanes || rows == 0 || cols == 0 ||
        rows * cols > kMaxPixels) {
        throw std::runtime_error(what + ": dimension overflow");
    }
    std::vector<RealGrid> planes;
    std::vector<double> sigmas;
    std::vector<double> distances;
    for (std::uint32_t r = 0; r < num_planes; ++r) {
        distances.push_back(wire::get_f64(is, what));
        sigmas.push_back(wire::get_f64(is, what));
        RealGrid g(rows, cols);
        for (double& v : g.values) v = wire::get_f64(is, what);
        planes.push_back(std::move(g));
    }
    wire::expect_eof(is, what);
    return ObservationStack(std::move(planes), std::move(sigmas), std::move(distances), 0);
}

}  // namespace phaseret
