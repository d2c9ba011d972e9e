#include "phaseret/field_io.hpp"

#include <fstream>

#include "wire.hpp"

namespace phaseret {

namespace {

constexpr char kMagic[4] = {'W', 'F', '0', '1'};

// Reject absurd headers before allocating the payload.
constexpr std::uint64_t kMaxPixels = 1ull << 26;

}  // namespace

void write_field(const WaveField& field, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw std::runtime_error("write_field: cannot open " + path.string());
    }
    os.write(kMagic, 4);
    wire::put_u32(os, static_cast<std::uint32_t>(field.rows()));
    wire::put_u32(os, static_cast<std::uint32_t>(field.cols()));
    wire::put_f64(os, field.pitch());
    for (const Complex& s : field.samples()) {
        wire::put_f64(os, s.real());
        wire::put_f64(os, s.imag());
    }
    if (!os) {
        throw std::runtime_error("write_field: write failed for " + path.string());
    }
}

WaveField read_field(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw std::runtime_error("read_field: cannot open " + path.string());
    }
    const std::string what = "read_field: " + path.string();
    wire::expect_magic(is, kMagic, what);
    const std::uint64_t rows = wire::get_u32(is, what);
    const std::uint64_t cols = wire::get_u32(is, what);
    if (rows == 0 || cols == 0 || rows * cols > kMaxPixels) {
        throw std::runtime_error(what + ": dimension overflow");
    }
    const double pitch = wire::get_f64(is, what);
    std::vector<Complex> samples(rows * cols);
    for (Complex& s : samples) {
        const double re = wire::get_f64(is, what);
        const double im = wire::get_f64(is, what);
        s = Complex(re, im);
    }
    wire::expect_eof(is, what);
    return WaveField(rows, cols, pitch, std::move(samples));
}

}  // namespace phaseret
