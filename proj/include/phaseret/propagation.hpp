#pragma once

#include <vector>

#include "phaseret/field.hpp"
#include "phaseret/setup.hpp"

namespace phaseret {

/// Angular-spectrum transfer function: one complex multiplier per discrete
/// spatial frequency. |H| = 1 on the propagating circle, 0 beyond it
/// (evanescent cutoff), identically 1 at distance 0.
class TransferFunction {
public:
    TransferFunction(std::size_t rows, std::size_t cols, double distance,
                     std::vector<Complex> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double distance() const { return distance_; }
    const std::vector<Complex>& values() const { return values_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    double distance_;
    std::vector<Complex> values_;
};

/// H[m,n] = exp(i * (2*pi/lambda) * z * sqrt(1 - (lambda*fx)^2 - (lambda*fy)^2))
/// with fx = m~/(rows*pitch), fy = n~/(cols*pitch) over signed wrap-around
/// frequency indices. Evanescent entries are zeroed for z > 0.
/// Throws on negative z.
TransferFunction make_transfer(const OpticalSetup& setup, double z);

/// inverse-DFT( H o DFT(field) ), unitary DFT normalization.
WaveField propagate_forward(const WaveField& field, const TransferFunction& tf);

/// Adjoint operator: same with conj(H). Inverts the forward propagation
/// exactly when |H| = 1 at every frequency.
WaveField propagate_adjoint(const WaveField& field, const TransferFunction& tf);

}  // namespace phaseret
