#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>
#include <numbers>

#include "dlct/oracle.hpp"
#include "dlct/signal.hpp"

using namespace dlct;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("signal evaluators at hallmark points") {
    CHECK(chirped_pulse().evaluate(0.0) == Complex(1.0, 0.0));
    CHECK(damped_sine().evaluate(0.0) == Complex(0.0, 0.0));
    CHECK(trapezoidal().evaluate(0.0) == Complex(1.0, 0.0));
    CHECK(rectangular_pulse().evaluate(0.5) == Complex(0.5, 0.0));
    CHECK(rectangular_pulse().evaluate(-0.5) == Complex(0.5, 0.0));
    CHECK(rectangular_pulse().evaluate(0.49) == Complex(1.0, 0.0));
    CHECK(rectangular_pulse().evaluate(0.51) == Complex(0.0, 0.0));
    // trapezoid: flat top of height 1 on |u| <= 1, feet at |u| = 3
    CHECK(trapezoidal().evaluate(1.0) == Complex(1.0, 0.0));
    CHECK(trapezoidal().evaluate(2.0) == Complex(0.5, 0.0));
    CHECK(trapezoidal().evaluate(3.0) == Complex(0.0, 0.0));
}

TEST_CASE("sampling the rectangular pulse at N = 256") {
    const Grid g = make_grid(256, Scheme::ordinary);
    const SignalVector x = sample(rectangular_pulse(), g);
    int ones = 0;
    int halves = 0;
    for (int k = 0; k < 256; ++k) {
        const double index = g.indices[static_cast<unsigned>(k)];
        const Complex v = x.samples(k);
        if (std::abs(index) < 8.0) {
            CHECK(v == Complex(1.0, 0.0));
            ++ones;
        } else if (std::abs(index) == 8.0) {
            CHECK(v == Complex(0.5, 0.0));
            ++halves;
        } else {
            CHECK(v == Complex(0.0, 0.0));
        }
    }
    CHECK(ones == 15);
    CHECK(halves == 2);
}

TEST_CASE("percent_mse basics") {
    const Grid g = make_grid(8, Scheme::ordinary);
    SignalVector ref{Eigen::VectorXcd::Ones(8), g};
    SignalVector same = ref;
    CHECK(percent_mse(same, ref) == 0.0);

    SignalVector zero{Eigen::VectorXcd::Zero(8), g};
    CHECK(percent_mse(zero, ref) == 100.0);

    SignalVector scaled{1.1 * ref.samples, g};
    CHECK(percent_mse(scaled, ref) == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(percent_mse(ref, zero), std::invalid_argument);
    SignalVector other{Eigen::VectorXcd::Ones(8), make_grid(8, Scheme::centered)};
    CHECK_THROWS_AS(percent_mse(other, ref), std::invalid_argument);
}

TEST_CASE("oracle reproduces the closed-form transform of the chirped pulse") {
    const Grid g = make_grid(256, Scheme::ordinary);
    const SignalVector out = continuous_lct({0.0, 1.0, 0.0}, chirped_pulse(), g, {});

    // int exp(-pi s u'^2) exp(-i 2 pi u u') du' = s^(-1/2) exp(-pi u^2 / s)
    // with s = 1 + i, times the exp(-i pi / 4) front factor
    Eigen::VectorXcd closed(g.n_samples);
    const Complex front = std::pow(2.0, -0.25) * std::polar(1.0, -3.0 * kPi / 8.0);
    for (int k = 0; k < g.n_samples; ++k) {
        const double u = g.coordinate(k);
        closed(k) = front * std::exp(Complex(-kPi * u * u / 2.0, kPi * u * u / 2.0));
    }

    const double err = (out.samples - closed).squaredNorm() / closed.squaredNorm();
    CHECK(err <= 1e-6);
}

TEST_CASE("oracle is linear in the signal") {
    const Grid g = make_grid(64, Scheme::ordinary);
    const LctParams p{-0.8, 3.0, 1.0};
    const Complex a(0.7, -0.3);
    const Complex b(-1.2, 0.4);

    const AnalyticSignal f1 = chirped_pulse();
    const AnalyticSignal f4 = damped_sine();
    const AnalyticSignal mix{SignalId::custom, [=](double u) {
                                 return a * f1.evaluate(u) + b * f4.evaluate(u);
                             }};

    const SignalVector out1 = continuous_lct(p, f1, g, {});
    const SignalVector out4 = continuous_lct(p, f4, g, {});
    const SignalVector mixed = continuous_lct(p, mix, g, {});

    const Eigen::VectorXcd expected = a * out1.samples + b * out4.samples;
    const double rel = (mixed.samples - expected).norm() / expected.norm();
    CHECK(rel <= 1e-10);
}

TEST_CASE("oracle output energy matches input energy for the chirped pulse") {
    const Grid g = make_grid(256, Scheme::ordinary);
    const SignalVector in = sample(chirped_pulse(), g);
    const SignalVector out = continuous_lct({-3.0, -2.0, -1.0}, chirped_pulse(), g, {});
    const double ein = in.samples.squaredNorm();
    const double eout = out.samples.squaredNorm();
    CHECK(std::abs(eout - ein) <= 1e-4 * ein);
}

TEST_CASE("oracle self-convergence improves with each substep halving") {
    const Grid g = make_grid(256, Scheme::ordinary);
    const LctParams t1{-3.0, -2.0, -1.0};
    const SignalVector o16 = continuous_lct(t1, chirped_pulse(), g, {16});
    const SignalVector o32 = continuous_lct(t1, chirped_pulse(), g, {32});
    const SignalVector o64 = continuous_lct(t1, chirped_pulse(), g, {64});
    const double first = (o32.samples - o16.samples).norm();
    const double second = (o64.samples - o32.samples).norm();
    CHECK(second < first);
}

TEST_CASE("oracle refuses an unresolvable quadratic phase") {
    const Grid g = make_grid(256, Scheme::ordinary);
    const LctParams t2{-0.8, 3.0, 1.0};
    QuadratureConfig coarse;
    coarse.oversampling = 3;
    CHECK_THROWS_AS(continuous_lct(t2, chirped_pulse(), g, coarse), std::invalid_argument);
    CHECK(required_oversampling(t2, g, coarse) == 13);
    // and the default configuration is fine for all four experiment transforms
    CHECK(required_oversampling(t2, g, {}) <= 16);
}

TEST_CASE("oracle rejects a non-finite integrand") {
    const Grid g = make_grid(16, Scheme::ordinary);
    const AnalyticSignal bad{SignalId::custom, [](double u) {
                                 return u == 0.0 ? Complex(std::nan(""), 0.0)
                                                 : Complex(0.0, 0.0);
                             }};
    CHECK_THROWS_AS(continuous_lct({0.0, 1.0, 0.0}, bad, g, {}), std::invalid_argument);
}

TEST_CASE("trapezoid rule is available and close to simpson") {
    const Grid g = make_grid(64, Scheme::ordinary);
    QuadratureConfig trap;
    trap.rule = QuadratureRule::trapezoid;
    const SignalVector a = continuous_lct({0.0, 1.0, 0.0}, chirped_pulse(), g, trap);
    const SignalVector b = continuous_lct({0.0, 1.0, 0.0}, chirped_pulse(), g, {});
    CHECK((a.samples - b.samples).norm() / b.samples.norm() <= 1e-4);
}
