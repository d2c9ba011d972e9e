#include "phaseret/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "phaseret/fft.hpp"

namespace phaseret {

namespace {

// All real roots of t^3 + P*t + Q = 0. Three roots via the trigonometric
// method when the discriminant is positive, one via Cardano otherwise.
int depressed_cubic_roots(double P, double Q, double out[3]) {
    const double disc = -4.0 * P * P * P - 27.0 * Q * Q;
    if (disc > 0.0) {
        const double m = 2.0 * std::sqrt(-P / 3.0);  // P < 0 whenever disc > 0
        double arg = 3.0 * Q / (P * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double base = std::acos(arg) / 3.0;
        const double two_thirds_pi = 2.0 * std::numbers::pi / 3.0;
        for (int k = 0; k < 3; ++k) {
            out[k] = m * std::cos(base - two_thirds_pi * static_cast<double>(k));
        }
        return 3;
    }
    const double s = -Q / 2.0;
    const double r = std::sqrt(std::max(s * s + P * P * P / 27.0, 0.0));
    // Pick the cube root that avoids cancellation between s and r.
    const double a = (s >= 0.0) ? std::cbrt(s + r) : std::cbrt(s - r);
    const double b = (a != 0.0) ? -P / (3.0 * a) : 0.0;
    out[0] = a + b;
    return 1;
}

double pixel_objective(double a, double o, double pm, double gamma) {
    const double res = o - a * a;
    const double d = a - pm;
    return 0.5 * res * res + d * d / gamma;
}

// f(a) = gamma*a^3 + (1 - gamma*o)*a - pm, the stationarity condition.
double cubic_f(double a, double gamma, double o, double pm) {
    return gamma * a * a * a + (1.0 - gamma * o) * a - pm;
}

double newton_polish(double a, double gamma, double o, double pm) {
    for (int i = 0; i < 4; ++i) {
        const double f = cubic_f(a, gamma, o, pm);
        const double df = 3.0 * gamma * a * a + (1.0 - gamma * o);
        if (std::abs(df) < 1e-300) break;
        const double step = f / df;
        if (!std::isfinite(step) || std::abs(step) > 0.5 * (1.0 + std::abs(a))) break;
        a -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(a))) break;
    }
    return a;
}

// Bracketed bisection on f; only reached if the closed form degenerates.
double bisect_root(double gamma, double o, double pm) {
    double lo = 0.0;
    double hi = std::max(std::sqrt(std::max(o, 0.0)), pm) + 1.0;
    for (int i = 0; i < 200 && cubic_f(hi, gamma, o, pm) < 0.0; ++i) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cubic_f(mid, gamma, o, pm) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

void check_same_shape(const WaveField& a, const WaveField& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

}  // namespace

AlgoParams AlgoParams::defaults(std::size_t num_planes, double sigma) {
    const double s = (sigma > 0.0) ? sigma : 1.0;
    AlgoParams p;
    p.gamma_r.assign(num_planes, 1.0 / s);
    p.alpha_r.assign(num_planes, 1.0);
    p.sigma_r.assign(num_planes, s);
    return p;
}

void AlgoParams::validate(std::size_t num_planes) const {
    if (tau_a < 0.0 || tau_phi < 0.0) {
        throw std::invalid_argument("AlgoParams: tau must be nonnegative");
    }
    if (!(gamma_a > 0.0) || !(gamma_phi > 0.0) || !(xi > 0.0)) {
        throw std::invalid_argument("AlgoParams: spectral and splitting weights must be positive");
    }
    if (gamma_r.size() != num_planes || alpha_r.size() != num_planes ||
        sigma_r.size() != num_planes) {
        throw std::invalid_argument("AlgoParams: per-plane vectors must have one entry per plane");
    }
    for (double g : gamma_r) {
        if (!(g > 0.0)) throw std::invalid_argument("AlgoParams: gamma_r must be positive");
    }
    for (double s : sigma_r) {
        if (!(s > 0.0)) throw std::invalid_argument("AlgoParams: sigma_r must be positive");
    }
}

Complex fit_observation_pixel(double o, Complex p, double gamma, double fallback_phase) {
    if (!std::isfinite(o) || !std::isfinite(p.real()) || !std::isfinite(p.imag()) ||
        !std::isfinite(gamma) || !(gamma > 0.0)) {
        throw std::invalid_argument("fit_observation_pixel: non-finite input");
    }
    const double pm = std::abs(p);

    double candidates[8];
    int nc = 0;
    candidates[nc++] = 0.0;
    double roots[3];
    const int nroots =
        depressed_cubic_roots((1.0 - gamma * o) / gamma, -pm / gamma, roots);
    bool have_root = false;
    for (int i = 0; i < nroots; ++i) {
        if (!std::isfinite(roots[i])) continue;
        have_root = true;
        const double polished = newton_polish(roots[i], gamma, o, pm);
        if (roots[i] > 0.0) candidates[nc++] = roots[i];
        if (std::isfinite(polished) && polished > 0.0) candidates[nc++] = polished;
    }
    if (!have_root) {
        candidates[nc++] = bisect_root(gamma, o, pm);
    }

    std::sort(candidates, candidates + nc);
    double best_a = candidates[0];
    double best_j = pixel_objective(best_a, o, pm, gamma);
    for (int i = 1; i < nc; ++i) {
        const double j = pixel_objective(candidates[i], o, pm, gamma);
        if (j < best_j) {  // strict: ties keep the smaller amplitude
            best_j = j;
            best_a = candidates[i];
        }
    }

    const Complex dir = (pm > 0.0)
                            ? p / pm
                            : Complex(std::cos(fallback_phase), std::sin(fallback_phase));
    return best_a * dir;
}

WaveField fit_observation_plane(const RealGrid& o, const WaveField& u_half,
                                const WaveField& lambda, double gamma) {
    check_same_shape(u_half, lambda, "fit_observation_plane");
    if (o.rows != u_half.rows() || o.cols != u_half.cols()) {
        throw std::invalid_argument("fit_observation_plane: observation dimension mismatch");
    }
    if (!(gamma > 0.0)) {
        throw std::invalid_argument("fit_observation_plane: gamma must be positive");
    }
    std::vector<Complex> out(u_half.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const Complex uh = u_half.samples()[k];
        const Complex p = uh - lambda.samples()[k];
        const double fallback = (std::abs(uh) > 0.0) ? std::arg(uh) : 0.0;
        out[k] = fit_observation_pixel(o.values[k], p, gamma, fallback);
    }
    return WaveField(u_half.rows(), u_half.cols(), u_half.pitch(), std::move(out));
}

WaveField lagrange_update(const WaveField& lambda, const WaveField& u_next,
                          const WaveField& u_half, double alpha) {
    check_same_shape(lambda, u_next, "lagrange_update");
    check_same_shape(lambda, u_half, "lagrange_update");
    std::vector<Complex> out(lambda.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = lambda.samples()[k] + alpha * (u_next.samples()[k] - u_half.samples()[k]);
    }
    return WaveField(lambda.rows(), lambda.cols(), lambda.pitch(), std::move(out));
}

WaveField object_update(const std::vector<WaveField>& planes,
                        const std::vector<WaveField>& lambdas, const WaveField& v0,
                        const std::vector<TransferFunction>& transfers,
                        const AlgoParams& params) {
    const std::size_t num_planes = planes.size();
    if (num_planes == 0) {
        throw std::invalid_argument("object_update: need at least one plane");
    }
    if (lambdas.size() != num_planes || transfers.size() != num_planes) {
        throw std::invalid_argument("object_update: plane/multiplier/transfer count mismatch");
    }
    params.validate(num_planes);
    const std::size_t rows = v0.rows();
    const std::size_t cols = v0.cols();
    const std::size_t n = rows * cols;

    std::vector<Complex> numerator = v0.samples();
    fft::forward(rows, cols, numerator.data());
    const double inv_xi = 1.0 / params.xi;
    for (Complex& c : numerator) c *= inv_xi;
    std::vector<double> denominator(n, inv_xi);

    std::vector<Complex> spectrum(n);
    for (std::size_t r = 0; r < num_planes; ++r) {
        check_same_shape(planes[r], v0, "object_update");
        check_same_shape(lambdas[r], v0, "object_update");
        if (transfers[r].rows() != rows || transfers[r].cols() != cols) {
            throw std::invalid_argument("object_update: transfer dimension mismatch");
        }
        const double w = 1.0 / (params.sigma_r[r] * params.sigma_r[r] * params.gamma_r[r]);
        for (std::size_t k = 0; k < n; ++k) {
            spectrum[k] = planes[r].samples()[k] + lambdas[r].samples()[k];
        }
        fft::forward(rows, cols, spectrum.data());
        const std::vector<Complex>& h = transfers[r].values();
        for (std::size_t k = 0; k < n; ++k) {
            numerator[k] += w * std::conj(h[k]) * spectrum[k];
            denominator[k] += w * std::norm(h[k]);
        }
    }

    for (std::size_t k = 0; k < n; ++k) numerator[k] /= denominator[k];
    fft::inverse(rows, cols, numerator.data());
    return WaveField(rows, cols, v0.pitch(), std::move(numerator));
}

double object_update_min_denominator(const std::vector<TransferFunction>& transfers,
                                     const AlgoParams& params) {
    if (transfers.empty()) {
        throw std::invalid_argument("object_update_min_denominator: no transfers");
    }
    params.validate(transfers.size());
    const std::size_t n = transfers.front().values().size();
    std::vector<double> denominator(n, 1.0 / params.xi);
    for (std::size_t r = 0; r < transfers.size(); ++r) {
        const double w = 1.0 / (params.sigma_r[r] * params.sigma_r[r] * params.gamma_r[r]);
        for (std::size_t k = 0; k < n; ++k) {
            denominator[k] += w * std::norm(transfers[r].values()[k]);
        }
    }
    return *std::min_element(denominator.begin(), denominator.end());
}

}  // namespace phaseret
