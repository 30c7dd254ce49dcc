#include "dlct/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dlct {

namespace {

constexpr double kPi = std::numbers::pi;

double tri(double u) {
    return std::max(0.0, 1.0 - std::abs(u));
}

}  // namespace

AnalyticSignal chirped_pulse() {
    return {SignalId::f1, [](double u) {
                return std::exp(std::complex<double>(-kPi * u * u, -kPi * u * u));
            }};
}

AnalyticSignal trapezoidal() {
    return {SignalId::f2, [](double u) {
                return std::complex<double>(1.5 * tri(u / 3.0) - 0.5 * tri(u), 0.0);
            }};
}

AnalyticSignal rectangular_pulse() {
    return {SignalId::f3, [](double u) {
                const double a = std::abs(u);
                if (a < 0.5) return std::complex<double>(1.0, 0.0);
                if (a == 0.5) return std::complex<double>(0.5, 0.0);
                return std::complex<double>(0.0, 0.0);
            }};
}

AnalyticSignal damped_sine() {
    return {SignalId::f4, [](double u) {
                return std::complex<double>(std::exp(-2.0 * std::abs(u)) * std::sin(3.0 * kPi * u),
                                            0.0);
            }};
}

AnalyticSignal signal_by_id(SignalId id) {
    switch (id) {
        case SignalId::f1: return chirped_pulse();
        case SignalId::f2: return trapezoidal();
        case SignalId::f3: return rectangular_pulse();
        case SignalId::f4: return damped_sine();
        case SignalId::custom: break;
    }
    throw std::invalid_argument("no built-in evaluator for custom signals");
}

SignalId signal_id_from_name(const std::string& name) {
    if (name == "F1" || name == "f1") return SignalId::f1;
    if (name == "F2" || name == "f2") return SignalId::f2;
    if (name == "F3" || name == "f3") return SignalId::f3;
    if (name == "F4" || name == "f4") return SignalId::f4;
    throw std::invalid_argument("unknown signal: " + name);
}

std::string signal_name(SignalId id) {
    switch (id) {
        case SignalId::f1: return "F1";
        case SignalId::f2: return "F2";
        case SignalId::f3: return "F3";
        case SignalId::f4: return "F4";
        case SignalId::custom: return "custom";
    }
    return "custom";
}

SignalVector sample(const AnalyticSignal& f, const Grid& g) {
    SignalVector x;
    x.grid = g;
    x.samples.resize(g.n_samples);
    const double h = g.spacing();
    for (int k = 0; k < g.n_samples; ++k) {
        x.samples(k) = f.evaluate(g.indices[static_cast<unsigned>(k)] * h);
    }
    return x;
}

SignalVector reverse(const SignalVector& x) {
    const Grid& g = x.grid;
    const double lo = g.indices.front();
    const double hi = g.indices.back();
    SignalVector out;
    out.grid = g;
    out.samples.resize(g.n_samples);
    for (int k = 0; k < g.n_samples; ++k) {
        double target = -g.indices[static_cast<unsigned>(k)];
        if (target > hi) target -= g.n_samples;
        if (target < lo) target += g.n_samples;
        const int pos = static_cast<int>(std::llround(target - lo));
        out.samples(k) = x.samples(pos);
    }
    return out;
}

}  // namespace dlct
