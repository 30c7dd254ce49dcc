#pragma once

#include <complex>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "dlct/grid.hpp"

namespace dlct {

enum class SignalId : unsigned char { f1, f2, f3, f4, custom };

/// Continuous test signal, evaluated pointwise as u -> complex value.
struct AnalyticSignal {
    SignalId id = SignalId::custom;
    std::function<std::complex<double>(double)> evaluate;
};

/// Length-N complex sample vector tied to its grid.
struct SignalVector {
    Eigen::VectorXcd samples;
    Grid grid;
};

AnalyticSignal chirped_pulse();      // F1: exp(-pi u^2 - i pi u^2)
AnalyticSignal trapezoidal();        // F2: 1.5 tri(u/3) - 0.5 tri(u)
AnalyticSignal rectangular_pulse();  // F3: rect(u), 1/2 at the edges
AnalyticSignal damped_sine();        // F4: exp(-2|u|) sin(3 pi u)

AnalyticSignal signal_by_id(SignalId id);
SignalId signal_id_from_name(const std::string& name);
std::string signal_name(SignalId id);

/// samples[k] = f(index_k * h)
SignalVector sample(const AnalyticSignal& f, const Grid& g);

/// Circulant index reversal: entry at index m becomes the entry at -m,
/// wrapped back into the index window when -m falls outside it.
SignalVector reverse(const SignalVector& x);

}  // namespace dlct
