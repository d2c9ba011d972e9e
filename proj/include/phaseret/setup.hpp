#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phaseret {

/// Multi-plane measurement geometry: sensor planes at z_r = z1 + (r-1)*delta_z.
struct OpticalSetup {
    double wavelength = 0.0;  // lambda [m]
    double pitch = 0.0;       // pixel side [m]
    double z1 = 0.0;          // object to first sensor plane [m]
    double delta_z = 0.0;     // plane spacing [m]
    std::size_t num_planes = 1;
    std::size_t rows = 0;
    std::size_t cols = 0;

    void validate() const {
        if (!(wavelength > 0.0)) throw std::invalid_argument("OpticalSetup: wavelength must be positive");
        if (!(pitch > 0.0)) throw std::invalid_argument("OpticalSetup: pitch must be positive");
        if (!(delta_z >= 0.0)) throw std::invalid_argument("OpticalSetup: delta_z must be nonnegative");
        if (num_planes < 1) throw std::invalid_argument("OpticalSetup: need at least one plane");
        if (rows == 0 || cols == 0) throw std::invalid_argument("OpticalSetup: empty grid");
    }

    /// Distance of plane r, 1-based: z1 + (r-1)*delta_z.
    double plane_distance(std::size_t r) const {
        if (r < 1 || r > num_planes) {
            throw std::invalid_argument("OpticalSetup: plane index " + std::to_string(r) +
                                        " out of range 1.." + std::to_string(num_planes));
        }
        return z1 + static_cast<double>(r - 1) * delta_z;
    }

    /// In-focus distance z_f = N*pitch^2/wavelength for an N-row aperture.
    double in_focus_distance() const {
        return static_cast<double>(rows) * pitch * pitch / wavelength;
    }
};

}  // namespace phaseret
