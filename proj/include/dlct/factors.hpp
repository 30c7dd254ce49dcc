#pragma once

#include "dlct/operators.hpp"
#include "dlct/params.hpp"
#include "dlct/signal.hpp"

namespace dlct {

/// Chirp multiplication matrix Q_q = exp(-i 2 pi q U^2 / 2).
OperatorMatrix chirp_mult_matrix(const Grid& g, double chirp);

/// Scaling matrix M_M = exp(-i 2 pi ln(M) (UD + DU) / 2). Requires M > 0.
OperatorMatrix scaling_matrix(const Grid& g, double scale);

/// Fractional Fourier matrix F^a_lc = exp(-i a pi^2 (U^2 + D^2) / 2).
OperatorMatrix frt_lc_matrix(const Grid& g, double order);

/// Circulant reversal permutation: entry 1 at (m, -m); an index whose
/// negation falls outside the window maps to itself.
Eigen::MatrixXcd parity_matrix(const Grid& g);

/// The two Hermitian generators behind all factor matrices, held in
/// eigendecomposed form so that any number of Q_q, M_M, F^a_lc and C_L for
/// one grid reuse the same O(N^3) work. Produces the same matrices as the
/// one-shot functions above.
class FactorGenerators {
public:
    explicit FactorGenerators(const Grid& g);

    const Grid& grid() const { return grid_; }

    Eigen::MatrixXcd chirp(double chirp) const;
    Eigen::MatrixXcd scaling(double scale) const;  // scale > 0
    Eigen::MatrixXcd frt(double order) const;

private:
    Grid grid_;
    Eigen::VectorXd u_diag_;
    Eigen::MatrixXcd scaling_vectors_;
    Eigen::VectorXd scaling_values_;
    Eigen::MatrixXcd frt_vectors_;
    Eigen::VectorXd frt_values_;
};

/// DLCT matrix together with the parameters and Iwasawa factors it was
/// built from. Unitary by construction.
struct DlctMatrix {
    OperatorMatrix matrix;
    LctParams params;
    IwasawaFactors factors;
};

/// Builds C_L = Q_q M_M F^a_lc from the Iwasawa factors of p. A negative
/// scale factor (beta < 0) folds into an order shift of the fractional
/// Fourier factor: M_M F^a_lc = M_|M| F^(a-2)_lc.
DlctMatrix dlct_matrix(const Grid& g, const LctParams& p);
DlctMatrix dlct_matrix(const FactorGenerators& gens, const LctParams& p);

/// Plain matrix-vector product; requires matching grids.
SignalVector apply(const OperatorMatrix& m, const SignalVector& x);
SignalVector apply(const DlctMatrix& m, const SignalVector& x);

}  // namespace dlct
