#include "phaseret/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace phaseret {

namespace {

unsigned char to_byte(double unit) {
    const long v = std::lround(std::clamp(unit, 0.0, 1.0) * 255.0);
    return static_cast<unsigned char>(v);
}

}  // namespace

std::vector<unsigned char> amplitude_gray(const RealGrid& g) {
    double max = 0.0;
    for (double v : g.values) max = std::max(max, v);
    std::vector<unsigned char> bytes(g.size());
    if (max > 0.0) {
        for (std::size_t k = 0; k < g.size(); ++k) bytes[k] = to_byte(g.values[k] / max);
    }
    return bytes;
}

std::vector<unsigned char> phase_gray(const RealGrid& g) {
    const double pi = std::numbers::pi;
    std::vector<unsigned char> bytes(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        bytes[k] = to_byte((g.values[k] + pi) / (2.0 * pi));
    }
    return bytes;
}

void write_pgm(std::size_t rows, std::size_t cols, const std::vector<unsigned char>& bytes,
               const std::filesystem::path& path) {
    if (bytes.size() != rows * cols) {
        throw std::invalid_argument("write_pgm: byte count does not match dimensions");
    }
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw std::runtime_error("write_pgm: cannot open " + path.string());
    }
    os << "P5\n" << cols << " " << rows << "\n255\n";
    os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!os) {
        throw std::runtime_error("write_pgm: write failed for " + path.string());
    }
}

void render_field(const WaveField& field, const std::filesystem::path& amplitude_path,
                  const std::filesystem::path& phase_path) {
    write_pgm(field.rows(), field.cols(), amplitude_gray(amplitude(field)), amplitude_path);
    write_pgm(field.rows(), field.cols(), phase_gray(phase(field)), phase_path);
}

}  // namespace phaseret
