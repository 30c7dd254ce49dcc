#include "dlct/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlct {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGuardBudget = kPi / 4.0;

struct QuadratureSteps {
    double half_extent = 0.0;  // X
    double step = 0.0;         // substep width
    int intervals = 0;         // even count of substeps
};

void require_params(const LctParams& p) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.gamma)) {
        throw std::invalid_argument("LCT parameters must be finite");
    }
    if (p.beta == 0.0) {
        throw std::invalid_argument("LCT parameter beta must be nonzero");
    }
}

void require_config(const QuadratureConfig& cfg) {
    if (cfg.oversampling < 1) {
        throw std::invalid_argument("oversampling must be at least 1");
    }
    if (!(cfg.padding >= 1.0)) {
        throw std::invalid_argument("padding must be at least 1");
    }
}

QuadratureSteps quadrature_steps(const Grid& g, const QuadratureConfig& cfg) {
    QuadratureSteps qs;
    qs.half_extent = 0.5 * cfg.padding * std::sqrt(static_cast<double>(g.n_samples));
    const double raw = cfg.padding * cfg.oversampling * g.n_samples;  // 2X per substep
    int intervals = static_cast<int>(std::ceil(raw - 1e-9));
    if (intervals % 2 != 0) ++intervals;
    qs.intervals = intervals;
    qs.step = 2.0 * qs.half_extent / intervals;
    return qs;
}

double guard_value(const LctParams& p, const Grid& g, const QuadratureSteps& qs) {
    return kPi * (std::abs(p.gamma) + 2.0 * std::abs(p.beta) * g.max_coordinate()) * qs.step;
}

}  // namespace

std::string rule_name(QuadratureRule r) {
    return r == QuadratureRule::simpson ? "simpson" : "trapezoid";
}

QuadratureRule rule_from_name(const std::string& name) {
    if (name == "simpson") return QuadratureRule::simpson;
    if (name == "trapezoid") return QuadratureRule::trapezoid;
    throw std::invalid_argument("unknown quadrature rule: " + name);
}

int required_oversampling(const LctParams& p, const Grid& g, const QuadratureConfig& cfg) {
    require_params(p);
    require_config(cfg);
    QuadratureConfig probe = cfg;
    const double slope = std::abs(p.gamma) + 2.0 * std::abs(p.beta) * g.max_coordinate();
    probe.oversampling = std::max(1, static_cast<int>(4.0 * slope * g.spacing()));
    while (guard_value(p, g, quadrature_steps(g, probe)) > kGuardBudget * (1.0 + 1e-12)) {
        ++probe.oversampling;
    }
    return probe.oversampling;
}

SignalVector continuous_lct(const LctParams& p, const AnalyticSignal& f, const Grid& g,
                            const QuadratureConfig& cfg) {
    require_params(p);
    require_config(cfg);

    const QuadratureSteps qs = quadrature_steps(g, cfg);
    if (guard_value(p, g, qs) > kGuardBudget * (1.0 + 1e-12)) {
        throw std::invalid_argument(
            "quadrature substep cannot resolve the quadratic phase; increase oversampling to "
            "at least " + std::to_string(required_oversampling(p, g, cfg)));
    }

    const int m = qs.intervals;
    const double delta = qs.step;
    const double x0 = -qs.half_extent;

    // weights folded with the chirp exp(i pi gamma u'^2) and the signal
    std::vector<std::complex<double>> weighted(static_cast<unsigned>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        double w;
        if (cfg.rule == QuadratureRule::simpson) {
            w = (j == 0 || j == m) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
            w *= delta / 3.0;
        } else {
            w = (j == 0 || j == m) ? 0.5 : 1.0;
            w *= delta;
        }
        const double up = x0 + j * delta;
        const std::complex<double> value = f.evaluate(up);
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            throw std::invalid_argument("non-finite integrand sample");
        }
        weighted[static_cast<unsigned>(j)] =
            w * value * std::polar(1.0, kPi * std::fmod(p.gamma * up * up, 2.0));
    }

    const std::complex<double> sqrt_beta =
        p.beta >= 0.0 ? std::complex<double>(std::sqrt(p.beta), 0.0)
                      : std::complex<double>(0.0, std::sqrt(-p.beta));
    const std::complex<double> front = sqrt_beta * std::polar(1.0, -kPi / 4.0);

    SignalVector out;
    out.grid = g;
    out.samples.resize(g.n_samples);

    for (int k = 0; k < g.n_samples; ++k) {
        const double u = g.coordinate(k);
        const std::complex<double> ratio = std::polar(1.0, -2.0 * kPi * p.beta * u * delta);
        std::complex<double> rotor = 0.0;
        std::complex<double> acc = 0.0;
        for (int j = 0; j <= m; ++j) {
            if (j % 512 == 0) {
                // periodic re-anchor keeps the rotor recurrence from drifting
                const double up = x0 + j * delta;
                rotor = std::polar(1.0, -2.0 * kPi * std::fmod(p.beta * u * up, 1.0));
            }
            acc += weighted[static_cast<unsigned>(j)] * rotor;
            rotor *= ratio;
        }
        out.samples(k) = front * std::polar(1.0, kPi * std::fmod(p.alpha * u * u, 2.0)) * acc;
    }
    return out;
}

double percent_mse(const SignalVector& x, const SignalVector& ref) {
    if (!(x.grid == ref.grid)) {
        throw std::invalid_argument("signals live on different grids");
    }
    const double ref_energy = ref.samples.squaredNorm();
    if (!(ref_energy > 0.0)) {
        throw std::invalid_argument("reference signal has zero energy");
    }
    return 100.0 * (x.samples - ref.samples).squaredNorm() / ref_energy;
}

}  // namespace dlct
