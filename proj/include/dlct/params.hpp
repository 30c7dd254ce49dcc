#pragma once

namespace dlct {

/// Parameter triplet (alpha, beta, gamma) identifying one LCT.
/// All fields must be finite and beta must be nonzero.
struct LctParams {
    double alpha = 0.0;
    double beta = 1.0;
    double gamma = 0.0;
};

/// 2x2 real parameter matrix [a b; c d] with unit determinant.
struct AbcdMatrix {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 1.0;

    double det() const { return a * d - b * c; }
};

/// Iwasawa factor parameters of one LCT: fractional Fourier order,
/// scaling factor and chirp rate. The order lands in (0, 2) under the
/// arccot branch used by iwasawa(); the scale is negative exactly when
/// beta is negative.
struct IwasawaFactors {
    double frt_order = 1.0;
    double scale = 1.0;
    double chirp = 0.0;
};

/// Tolerance on |det - 1| accepted for ABCD matrices; absorbs rounding
/// accumulated over long composition chains.
inline constexpr double kDetTolerance = 1e-9;

AbcdMatrix to_abcd(const LctParams& p);
LctParams from_abcd(const AbcdMatrix& m);

/// Parameter matrix of "apply first, then second": returns second * first.
AbcdMatrix compose(const AbcdMatrix& first, const AbcdMatrix& second);

AbcdMatrix invert(const AbcdMatrix& m);

IwasawaFactors iwasawa(const LctParams& p);

AbcdMatrix special_scaling(double scale);
AbcdMatrix special_frt(double order);
AbcdMatrix special_chirp_mult(double chirp);

}  // namespace dlct
