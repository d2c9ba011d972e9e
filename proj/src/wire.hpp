#pragma once

// Little-endian scalar encoding shared by the WF01 and OB01 binary formats.
// Byte order is explicit so files are bit-exact across hosts.

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace phaseret::wire {

inline void put_u32(std::ostream& os, std::uint32_t v) {
    const unsigned char b[4] = {
        static_cast<unsigned char>(v & 0xffu),
        static_cast<unsigned char>((v >> 8) & 0xffu),
        static_cast<unsigned char>((v >> 16) & 0xffu),
        static_cast<unsigned char>((v >> 24) & 0xffu),
    };
    os.write(reinterpret_cast<const char*>(b), 4);
}

inline void put_f64(std::ostream& os, double v) {
    const std::uint64_t u = std::bit_cast<std::uint64_t>(v);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xffu);
    os.write(reinterpret_cast<const char*>(b), 8);
}

inline std::uint32_t get_u32(std::istream& is, const std::string& what) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4)) {
        throw std::runtime_error(what + ": truncated file");
    }
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

inline double get_f64(std::istream& is, const std::string& what) {
    unsigned char b[8];
    if (!is.read(reinterpret_cast<char*>(b), 8)) {
        throw std::runtime_error(what + ": truncated file");
    }
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return std::bit_cast<double>(u);
}

inline void expect_magic(std::istream& is, const char magic[4], const std::string& what) {
    char got[4];
    if (!is.read(got, 4)) {
        throw std::runtime_error(what + ": truncated file");
    }
    for (int i = 0; i < 4; ++i) {
        if (got[i] != magic[i]) {
            throw std::runtime_error(what + ": bad magic");
        }
    }
}

inline void expect_eof(std::istream& is, const std::string& what) {
    is.peek();
    if (!is.eof()) {
        throw std::runtime_error(what + ": trailing data after payload");
    }
}

}  // namespace phaseret::wire
