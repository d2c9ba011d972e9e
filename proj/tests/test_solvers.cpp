#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle_util.hpp"
#include "phaseret/solvers.hpp"
#include "test_util.hpp"

using namespace phaseret;

namespace {

WaveField sum(const WaveField& a, const WaveField& b) {
    std::vector<Complex> s(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) s[k] = a.samples()[k] + b.samples()[k];
    return WaveField(a.rows(), a.cols(), a.pitch(), std::move(s));
}

}  // namespace

TEST_SUITE("solvers") {

TEST_CASE("consistent observation is a fixed point of the pixel fit") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> mag(0.1, 2.0), ang(-3.0, 3.0), gam(0.1, 50.0);
    for (int i = 0; i < 50; ++i) {
        const Complex p = std::polar(mag(rng), ang(rng));
        const Complex out = fit_observation_pixel(std::norm(p), p, gam(rng));
        CHECK(std::abs(out - p) < 1e-9 * std::abs(p));
    }
}

TEST_CASE("cubic example: o=1, |p|=0.5, gamma=1 gives cbrt(1/2)") {
    const Complex p = std::polar(0.5, 1.1);
    const Complex out = fit_observation_pixel(1.0, p, 1.0);
    CHECK(std::abs(out) == doctest::Approx(std::cbrt(0.5)).epsilon(1e-10));
    CHECK(std::arg(out) == doctest::Approx(1.1).epsilon(1e-12));
}

TEST_CASE("large gamma approaches magnitude replacement") {
    const Complex p = std::polar(1.0, -0.4);
    const Complex out = fit_observation_pixel(4.0, p, 100.0);
    // root of 100 a^3 - 399 a - 1 = 0 near 2
    CHECK(std::abs(out) == doctest::Approx(1.99875).epsilon(1e-3));
    CHECK(std::abs(std::abs(out) - 2.0) < 2e-3);
}

TEST_CASE("returned amplitude beats a dense grid search") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> obs(-0.5, 4.0), mag(0.0, 3.0), ang(-3.0, 3.0);
    std::uniform_real_distribution<double> gam(0.1, 100.0);
    for (int i = 0; i < 200; ++i) {
        const double o = obs(rng);
        const double gamma = gam(rng);
        const Complex p = std::polar(mag(rng), ang(rng));
        const Complex out = fit_observation_pixel(o, p, gamma);
        const double ours = oracle::pixel_objective(std::abs(out), o, std::abs(p), gamma);
        const double grid = oracle::grid_search_objective(o, std::abs(p), gamma, 5.0, 1e-4);
        CHECK(ours <= grid + 1e-6);
    }
}

TEST_CASE("pixel fit keeps the phase of p") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> obs(-0.5, 4.0), mag(0.01, 3.0), ang(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const Complex p = std::polar(mag(rng), ang(rng));
        const Complex out = fit_observation_pixel(obs(rng), p, 1.7);
        if (std::abs(out) > 0.0) {
            const double diff = std::abs(std::remainder(std::arg(out) - std::arg(p),
                                                        2 * std::numbers::pi));
            CHECK(diff < 1e-13);
        }
    }
}

TEST_CASE("degenerate p = 0 uses the fallback direction") {
    const double gamma = 1000.0;
    const Complex out = fit_observation_pixel(1.0, Complex(0, 0), gamma, 0.7);
    CHECK(std::abs(out) == doctest::Approx(std::sqrt(1.0 - 1.0 / gamma)).epsilon(1e-9));
    CHECK(std::arg(out) == doctest::Approx(0.7).epsilon(1e-12));
    // tiny observation: staying at zero is optimal
    const Complex zero = fit_observation_pixel(-0.3, Complex(0, 0), 1.0, 0.0);
    CHECK(std::abs(zero) == 0.0);
}

TEST_CASE("non-finite pixel inputs are rejected") {
    CHECK_THROWS_AS(fit_observation_pixel(std::nan(""), Complex(1, 0), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_observation_pixel(1.0, Complex(1, 0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(fit_observation_pixel(1.0, Complex(1, 0), -2.0), std::invalid_argument);
}

TEST_CASE("plane fit equals the pixelwise fit") {
    const WaveField u_half = testutil::random_field(16, 16, 1e-6, 3);
    const WaveField lambda = testutil::random_field(16, 16, 1e-6, 4);
    const RealGrid o = testutil::random_grid(16, 16, 5, -0.2, 2.5);
    const double gamma = 3.0;
    const WaveField fit = fit_observation_plane(o, u_half, lambda, gamma);
    for (std::size_t k = 0; k < fit.size(); ++k) {
        const Complex uh = u_half.samples()[k];
        const Complex p = uh - lambda.samples()[k];
        const double fb = (std::abs(uh) > 0) ? std::arg(uh) : 0.0;
        const Complex expected = fit_observation_pixel(o.values[k], p, gamma, fb);
        CHECK(std::abs(fit.samples()[k] - expected) == 0.0);
    }
}

TEST_CASE("noiseless consistent plane passes through") {
    const WaveField u_half = testutil::random_field(12, 12, 1e-6, 6);
    RealGrid o(12, 12);
    for (std::size_t k = 0; k < o.size(); ++k) o.values[k] = std::norm(u_half.samples()[k]);
    const WaveField zero = WaveField::filled(12, 12, 1e-6, Complex(0, 0));
    const WaveField fit = fit_observation_plane(o, u_half, zero, 2.0);
    CHECK(testutil::rel_l2_diff(fit, u_half) < 1e-9);
}

TEST_CASE("lambda = u_half falls back to the u_half phase") {
    const WaveField u_half = testutil::random_field(8, 8, 1e-6, 7);
    RealGrid o(8, 8, 1.0);
    const WaveField fit = fit_observation_plane(o, u_half, u_half, 10.0);
    for (std::size_t k = 0; k < fit.size(); ++k) {
        if (std::abs(fit.samples()[k]) > 0) {
            CHECK(std::arg(fit.samples()[k]) ==
                  doctest::Approx(std::arg(u_half.samples()[k])).epsilon(1e-12));
        }
    }
}

TEST_CASE("multiplier update arithmetic") {
    const WaveField lambda = testutil::random_field(8, 8, 1e-6, 8);
    const WaveField u_next = testutil::random_field(8, 8, 1e-6, 9);
    const WaveField u_half = testutil::random_field(8, 8, 1e-6, 10);

    const WaveField unchanged = lagrange_update(lambda, u_next, u_half, 0.0);
    CHECK(testutil::rel_l2_diff(unchanged, lambda) == 0.0);

    const WaveField same = lagrange_update(lambda, u_next, u_next, 1.0);
    CHECK(testutil::rel_l2_diff(same, lambda) == 0.0);

    const WaveField zero = WaveField::filled(1, 1, 1e-6, Complex(0, 0));
    const WaveField a(1, 1, 1e-6, {Complex(0.6, 0.5)});
    const WaveField b(1, 1, 1e-6, {Complex(0.5, 0.3)});
    const WaveField stepped = lagrange_update(zero, a, b, 1.0);
    CHECK(stepped.samples()[0].real() == doctest::Approx(0.1));
    CHECK(stepped.samples()[0].imag() == doctest::Approx(0.2));
}

TEST_CASE("object update reproduces a consistent object") {
    const auto setup = testutil::paper_setup(16, 16, 1);
    const WaveField truth = testutil::random_field(16, 16, setup.pitch, 11);
    const TransferFunction tf = make_transfer(setup, setup.z1);
    const WaveField u1 = propagate_forward(truth, tf);
    const WaveField zero = WaveField::filled(16, 16, setup.pitch, Complex(0, 0));
    AlgoParams params = AlgoParams::defaults(1, 0.05);
    const WaveField out = object_update({u1}, {zero}, truth, {tf}, params);
    CHECK(testutil::rel_l2_diff(out, truth) < 1e-12);
}

TEST_CASE("huge xi reduces to pure back-propagation") {
    const auto setup = testutil::paper_setup(16, 16, 1);
    const TransferFunction tf = make_transfer(setup, setup.z1);
    const WaveField u1 = testutil::random_field(16, 16, setup.pitch, 12);
    const WaveField v0 = testutil::random_field(16, 16, setup.pitch, 13);
    const WaveField zero = WaveField::filled(16, 16, setup.pitch, Complex(0, 0));
    AlgoParams params = AlgoParams::defaults(1, 1.0);
    params.xi = 1e12;
    const WaveField out = object_update({u1}, {zero}, v0, {tf}, params);
    const WaveField back = propagate_adjoint(u1, tf);
    CHECK(testutil::rel_l2_diff(out, back) < 1e-9);
}

TEST_CASE("object update is linear in its field inputs") {
    const auto setup = testutil::paper_setup(8, 8, 2);
    std::vector<TransferFunction> tfs{make_transfer(setup, setup.z1),
                                      make_transfer(setup, setup.z1 + setup.delta_z)};
    AlgoParams params = AlgoParams::defaults(2, 0.05);
    auto fields = [&](std::uint64_t seed) {
        return std::vector<WaveField>{testutil::random_field(8, 8, setup.pitch, seed),
                                      testutil::random_field(8, 8, setup.pitch, seed + 50)};
    };
    const auto p1 = fields(100), p2 = fields(200);
    const auto l1 = fields(300), l2 = fields(400);
    const WaveField v1 = testutil::random_field(8, 8, setup.pitch, 500);
    const WaveField v2 = testutil::random_field(8, 8, setup.pitch, 600);

    const WaveField separate = sum(object_update(p1, l1, v1, tfs, params),
                                   object_update(p2, l2, v2, tfs, params));
    const WaveField joint = object_update({sum(p1[0], p2[0]), sum(p1[1], p2[1])},
                                          {sum(l1[0], l2[0]), sum(l1[1], l2[1])},
                                          sum(v1, v2), tfs, params);
    CHECK(testutil::rel_l2_diff(joint, separate) < 1e-12);
}

TEST_CASE("object update denominator never drops below 1/xi") {
    const auto setup = testutil::paper_setup(16, 16, 3);
    std::vector<TransferFunction> tfs;
    for (std::size_t r = 1; r <= 3; ++r) {
        tfs.push_back(make_transfer(setup, setup.plane_distance(r)));
    }
    AlgoParams params = AlgoParams::defaults(3, 0.05);
    params.xi = 2.5;
    CHECK(object_update_min_denominator(tfs, params) >= 1.0 / params.xi);
}

TEST_CASE("object update matches a dense solve") {
    const auto setup = testutil::paper_setup(8, 8, 2);
    const std::size_t n = 64;
    std::vector<TransferFunction> tfs{make_transfer(setup, setup.z1),
                                      make_transfer(setup, setup.z1 + setup.delta_z)};
    AlgoParams params = AlgoParams::defaults(2, 0.05);
    params.xi = 0.7;
    params.gamma_r = {3.0, 11.0};

    const std::vector<WaveField> planes{testutil::random_field(8, 8, setup.pitch, 1),
                                        testutil::random_field(8, 8, setup.pitch, 2)};
    const std::vector<WaveField> lambdas{testutil::random_field(8, 8, setup.pitch, 3),
                                         testutil::random_field(8, 8, setup.pitch, 4)};
    const WaveField v0 = testutil::random_field(8, 8, setup.pitch, 5);

    // (sum_r w_r A_r^H A_r + I/xi) u = sum_r w_r A_r^H (u_r + L_r) + v0/xi
    std::vector<Complex> lhs(n * n, Complex(0, 0));
    std::vector<Complex> rhs(n, Complex(0, 0));
    for (std::size_t r = 0; r < 2; ++r) {
        const double w = 1.0 / (params.sigma_r[r] * params.sigma_r[r] * params.gamma_r[r]);
        const auto fwd = oracle::dense_operator(tfs[r], setup.pitch, false);
        const auto adj = oracle::dense_operator(tfs[r], setup.pitch, true);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Complex acc(0, 0);
                for (std::size_t k = 0; k < n; ++k) acc += adj[i * n + k] * fwd[k * n + j];
                lhs[i * n + j] += w * acc;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            Complex acc(0, 0);
            for (std::size_t k = 0; k < n; ++k) {
                acc += adj[i * n + k] * (planes[r].samples()[k] + lambdas[r].samples()[k]);
            }
            rhs[i] += w * acc;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        lhs[i * n + i] += 1.0 / params.xi;
        rhs[i] += v0.samples()[i] / params.xi;
    }
    const std::vector<Complex> expected = oracle::solve_dense(lhs, rhs);
    const WaveField out = object_update(planes, lambdas, v0, tfs, params);
    double num = 0, den = 0;
    for (std::size_t k = 0; k < n; ++k) {
        num += std::norm(out.samples()[k] - expected[k]);
        den += std::norm(expected[k]);
    }
    CHECK(std::sqrt(num / den) < 1e-8);
}

TEST_CASE("params validation") {
    AlgoParams p = AlgoParams::defaults(2, 0.05);
    CHECK_NOTHROW(p.validate(2));
    CHECK_THROWS_AS(p.validate(3), std::invalid_argument);
    p.tau_a = -0.1;
    CHECK_THROWS_AS(p.validate(2), std::invalid_argument);
    p = AlgoParams::defaults(2, 0.05);
    p.sigma_r[1] = 0.0;
    CHECK_THROWS_AS(p.validate(2), std::invalid_argument);
    p = AlgoParams::defaults(2, 0.05);
    p.xi = 0.0;
    CHECK_THROWS_AS(p.validate(2), std::invalid_argument);
}

}  // TEST_SUITE
