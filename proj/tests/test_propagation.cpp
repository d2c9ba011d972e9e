#include <doctest.h>

#include <cmath>
#include <numbers>

#include "phaseret/propagation.hpp"
#include "test_util.hpp"

using namespace phaseret;

namespace {
const double kPi = std::numbers::pi;

Complex inner(const WaveField& a, const WaveField& b) {
    Complex acc(0, 0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        acc += a.samples()[k] * std::conj(b.samples()[k]);
    }
    return acc;
}

double energy(const WaveField& u) {
    double acc = 0;
    for (const Complex& s : u.samples()) acc += std::norm(s);
    return acc;
}
}  // namespace

TEST_SUITE("propagation") {

TEST_CASE("zero distance gives the identity transfer") {
    const auto setup = testutil::paper_setup(32, 32);
    const TransferFunction tf = make_transfer(setup, 0.0);
    for (const Complex& h : tf.values()) {
        CHECK(h.real() == doctest::Approx(1.0));
        CHECK(h.imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("zero frequency entry carries exp(i 2 pi z / lambda)") {
    const auto setup = testutil::paper_setup(16, 16);
    const double z = 3.1e-3;
    const TransferFunction tf = make_transfer(setup, z);
    // the phase is ~3.6e4 rad, so two roundings of it differ by O(1e-11)
    const Complex expected = std::polar(1.0, 2 * kPi * z / setup.wavelength);
    CHECK(std::abs(tf.values()[0] - expected) < 1e-9);
}

TEST_CASE("paper sampling has no evanescent frequencies") {
    // max |lambda f| = lambda/(2 pitch) ~ 0.0397 < 1
    const auto setup = testutil::paper_setup(128, 128);
    CHECK(setup.wavelength / (2 * setup.pitch) < 0.05);
    const TransferFunction tf = make_transfer(setup, setup.z1);
    for (const Complex& h : tf.values()) {
        CHECK(std::abs(h) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("negative distance is rejected") {
    const auto setup = testutil::paper_setup(8, 8);
    CHECK_THROWS_AS(make_transfer(setup, -1e-3), std::invalid_argument);
}

TEST_CASE("constant field propagates as a plane wave") {
    const auto setup = testutil::paper_setup(32, 32);
    const double z = 5e-3;
    const Complex c(0.7, -0.2);
    const WaveField u = WaveField::filled(32, 32, setup.pitch, c);
    const WaveField ur = propagate_forward(u, make_transfer(setup, z));
    const Complex expected = c * std::polar(1.0, 2 * kPi * z / setup.wavelength);
    for (const Complex& s : ur.samples()) {
        CHECK(std::abs(s - expected) < 1e-9);  // limited by phase argument reduction
    }
}

TEST_CASE("energy is conserved without evanescent cutoff") {
    const auto setup = testutil::paper_setup(64, 64);
    const WaveField u = testutil::random_field(64, 64, setup.pitch, 21);
    const WaveField ur = propagate_forward(u, make_transfer(setup, setup.z1));
    CHECK(energy(ur) == doctest::Approx(energy(u)).epsilon(1e-12));
}

TEST_CASE("adjoint inverts forward in the unitary regime") {
    const auto setup = testutil::paper_setup(64, 64);
    const TransferFunction tf = make_transfer(setup, setup.z1 + 4e-3);
    const WaveField u = testutil::random_field(64, 64, setup.pitch, 22);
    const WaveField back = propagate_adjoint(propagate_forward(u, tf), tf);
    CHECK(testutil::rel_l2_diff(back, u) < 1e-12);
}

TEST_CASE("adjoint identity <Au, v> = <u, A^H v>") {
    const auto setup = testutil::paper_setup(48, 48);
    const TransferFunction tf = make_transfer(setup, 7e-3);
    const WaveField u = testutil::random_field(48, 48, setup.pitch, 23);
    const WaveField v = testutil::random_field(48, 48, setup.pitch, 24);
    const Complex lhs = inner(propagate_forward(u, tf), v);
    const Complex rhs = inner(u, propagate_adjoint(v, tf));
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-12);
}

TEST_CASE("propagation composes over distance") {
    const auto setup = testutil::paper_setup(32, 32);
    const WaveField u = testutil::random_field(32, 32, setup.pitch, 25);
    const WaveField two_steps = propagate_forward(
        propagate_forward(u, make_transfer(setup, 3e-3)), make_transfer(setup, 4e-3));
    const WaveField one_step = propagate_forward(u, make_transfer(setup, 7e-3));
    CHECK(testutil::rel_l2_diff(two_steps, one_step) < 1e-10);
}

TEST_CASE("dimension mismatch is rejected") {
    const auto setup = testutil::paper_setup(16, 16);
    const TransferFunction tf = make_transfer(setup, 1e-3);
    const WaveField u = testutil::random_field(8, 8, setup.pitch, 26);
    CHECK_THROWS_AS(propagate_forward(u, tf), std::invalid_argument);
}

}  // TEST_SUITE
