#pragma once

#include "dlct/params.hpp"
#include "dlct/signal.hpp"

namespace dlct {

enum class QuadratureRule : unsigned char { trapezoid = 0, simpson = 1 };

/// Settings for the brute-force quadrature reference.
struct QuadratureConfig {
    int oversampling = 16;  // integration substeps per output grid step
    double padding = 3.0;   // integration half-extent = padding * sqrt(N) / 2
    QuadratureRule rule = QuadratureRule::simpson;
};

std::string rule_name(QuadratureRule r);
QuadratureRule rule_from_name(const std::string& name);

/// Smallest oversampling for which the phase-resolution guard passes.
int required_oversampling(const LctParams& p, const Grid& g, const QuadratureConfig& cfg);

/// Brute-force numerical integration of the continuous LCT of f, evaluated
/// at the grid's sample coordinates. Refuses configurations whose substep
/// cannot resolve the quadratic phase (see required_oversampling).
SignalVector continuous_lct(const LctParams& p, const AnalyticSignal& f, const Grid& g,
                            const QuadratureConfig& cfg = {});

/// 100 * sum |x_i - ref_i|^2 / sum |ref_i|^2.
double percent_mse(const SignalVector& x, const SignalVector& ref);

}  // namespace dlct
