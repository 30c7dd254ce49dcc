#include "dlct/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dlct {

namespace {
constexpr double kPi = std::numbers::pi;
}

OperatorMatrix dft_matrix(const Grid& g) {
    const int n = g.n_samples;
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::MatrixXcd f(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            // reduce m*n modulo N before forming the angle so large index
            // products cost no phase precision
            const double mn = std::fmod(g.indices[static_cast<unsigned>(r)] *
                                            g.indices[static_cast<unsigned>(c)],
                                        static_cast<double>(n));
            f(r, c) = std::polar(norm, -2.0 * kPi * mn / static_cast<double>(n));
        }
    }
    return {std::move(f), MatrixRole::dft, g};
}

OperatorMatrix u_matrix(const Grid& g) {
    const int n = g.n_samples;
    const double amp = std::sqrt(static_cast<double>(n)) / kPi;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        u(k, k) = amp * std::sin(kPi * g.indices[static_cast<unsigned>(k)] /
                                 static_cast<double>(n));
    }
    return {std::move(u), MatrixRole::coordinate, g};
}

OperatorMatrix d_matrix(const Grid& g) {
    const OperatorMatrix f = dft_matrix(g);
    const OperatorMatrix u = u_matrix(g);
    const Eigen::MatrixXcd t = f.entries.adjoint() * (u.entries * f.entries);
    // t is Hermitian up to rounding; folding it with its adjoint makes the
    // Hermiticity defect exactly zero
    Eigen::MatrixXcd d = 0.5 * (t + t.adjoint());
    return {std::move(d), MatrixRole::differentiation, g};
}

Eigen::MatrixXcd hermitian_expm(const Eigen::MatrixXcd& h, std::complex<double> scale) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("hermitian_expm requires a square matrix");
    }
    const auto n = h.rows();
    const double defect = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (!(defect <= 1e-10)) {
        throw std::invalid_argument("hermitian_expm requires a Hermitian generator");
    }
    if (scale == std::complex<double>(0.0, 0.0)) {
        return Eigen::MatrixXcd::Identity(n, n);
    }

    bool diagonal = true;
    for (Eigen::Index c = 0; c < n && diagonal; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r != c && h(r, c) != std::complex<double>(0.0, 0.0)) {
                diagonal = false;
                break;
            }
        }
    }
    if (diagonal) {
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
        for (Eigen::Index k = 0; k < n; ++k) {
            out(k, k) = std::exp(scale * h(k, k).real());
        }
        return out;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_expm: eigendecomposition failed");
    }
    const Eigen::MatrixXcd& vectors = solver.eigenvectors();
    Eigen::VectorXcd phases(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        phases(k) = std::exp(scale * solver.eigenvalues()(k));
    }
    return vectors * phases.asDiagonal() * vectors.adjoint();
}

}  // namespace dlct
