#include "dlct/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dlct {

namespace {

void require_valid(const LctParams& p) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.gamma)) {
        throw std::invalid_argument("LCT parameters must be finite");
    }
    if (p.beta == 0.0) {
        throw std::invalid_argument("LCT parameter beta must be nonzero");
    }
}

void require_unit_det(const AbcdMatrix& m) {
    if (!(std::abs(m.det() - 1.0) <= kDetTolerance)) {
        throw std::invalid_argument("ABCD matrix must have unit determinant");
    }
}

}  // namespace

AbcdMatrix to_abcd(const LctParams& p) {
    require_valid(p);
    return {p.gamma / p.beta, 1.0 / p.beta,
            -p.beta + p.alpha * p.gamma / p.beta, p.alpha / p.beta};
}

LctParams from_abcd(const AbcdMatrix& m) {
    require_unit_det(m);
    if (m.b == 0.0) {
        throw std::invalid_argument("ABCD matrix with B = 0 has no finite-beta parameters");
    }
    return {m.d / m.b, 1.0 / m.b, m.a / m.b};
}

AbcdMatrix compose(const AbcdMatrix& first, const AbcdMatrix& second) {
    require_unit_det(first);
    require_unit_det(second);
    return {second.a * first.a + second.b * first.c,
            second.a * first.b + second.b * first.d,
            second.c * first.a + second.d * first.c,
            second.c * first.b + second.d * first.d};
}

AbcdMatrix invert(const AbcdMatrix& m) {
    require_unit_det(m);
    return {m.d, -m.b, -m.c, m.a};
}

IwasawaFactors iwasawa(const LctParams& p) {
    require_valid(p);
    // arccot onto (0, pi); atan2(1, gamma) covers the whole branch and puts
    // the fractional order in (0, 2). With this branch the scale factor is
    // sqrt(1 + gamma^2) / beta for every gamma, which is what makes the
    // three-factor product reproduce to_abcd(p).
    const double theta = std::atan2(1.0, p.gamma);
    const double hypotenuse = std::sqrt(1.0 + p.gamma * p.gamma);
    return {2.0 * theta / std::numbers::pi,
            hypotenuse / p.beta,
            p.gamma * p.beta * p.beta / (1.0 + p.gamma * p.gamma) - p.alpha};
}

AbcdMatrix special_scaling(double scale) {
    if (scale == 0.0 || !std::isfinite(scale)) {
        throw std::invalid_argument("scaling factor must be finite and nonzero");
    }
    return {scale, 0.0, 0.0, 1.0 / scale};
}

AbcdMatrix special_frt(double order) {
    if (!std::isfinite(order)) {
        throw std::invalid_argument("fractional order must be finite");
    }
    const double theta = order * std::numbers::pi / 2.0;
    return {std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta)};
}

AbcdMatrix special_chirp_mult(double chirp) {
    if (!std::isfinite(chirp)) {
        throw std::invalid_argument("chirp rate must be finite");
    }
    return {1.0, 0.0, -chirp, 1.0};
}

}  // namespace dlct
