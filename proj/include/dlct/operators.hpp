#pragma once

#include <complex>

#include <Eigen/Dense>

#include "dlct/grid.hpp"

namespace dlct {

enum class MatrixRole : unsigned char {
    dft = 0,
    coordinate = 1,       // U
    differentiation = 2,  // D
    chirp_mult = 3,
    scaling = 4,
    frt_lc = 5,
    dlct = 6,
};

/// Dense N x N complex matrix tagged with its role and the grid it acts on.
/// Rows and columns are ordered by ascending grid index.
struct OperatorMatrix {
    Eigen::MatrixXcd entries;
    MatrixRole role = MatrixRole::dft;
    Grid grid;
};

/// Unitary DFT matrix with elements exp(-i 2 pi m n / N) / sqrt(N), where m
/// and n run over the grid's (integer or half-integer) index list.
OperatorMatrix dft_matrix(const Grid& g);

/// Discrete coordinate-multiplication matrix: diagonal with entries
/// (sqrt(N)/pi) sin(pi n / N) at grid index n.
OperatorMatrix u_matrix(const Grid& g);

/// Discrete differentiation matrix D = F^-1 U F, Hermitian by construction.
OperatorMatrix d_matrix(const Grid& g);

/// exp(scale * h) for Hermitian h, through the eigendecomposition
/// h = V diag(lambda) V^H. Unitary to near machine precision when scale is
/// purely imaginary. Rejects input whose Hermiticity defect exceeds 1e-10.
Eigen::MatrixXcd hermitian_expm(const Eigen::MatrixXcd& h, std::complex<double> scale);

}  // namespace dlct
