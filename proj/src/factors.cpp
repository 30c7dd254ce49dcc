#include "dlct/factors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace dlct {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXcd chirp_generator(const Eigen::VectorXd& u_diag) {
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(u_diag.size(), u_diag.size());
    for (Eigen::Index k = 0; k < u_diag.size(); ++k) {
        gen(k, k) = u_diag(k) * u_diag(k);
    }
    return gen;
}

// (UD + DU)/2; exactly Hermitian since U is real diagonal and D Hermitian
Eigen::MatrixXcd scaling_generator(const Eigen::VectorXd& u_diag, const Eigen::MatrixXcd& d) {
    Eigen::MatrixXcd gen(d.rows(), d.cols());
    for (Eigen::Index c = 0; c < d.cols(); ++c) {
        for (Eigen::Index r = 0; r < d.rows(); ++r) {
            gen(r, c) = 0.5 * (u_diag(r) * d(r, c) + d(r, c) * u_diag(c));
        }
    }
    return gen;
}

// (U^2 + D^2)/2 with the gemm asymmetry of D^2 folded out
Eigen::MatrixXcd frt_generator(const Eigen::VectorXd& u_diag, const Eigen::MatrixXcd& d) {
    Eigen::MatrixXcd dd = d * d;
    Eigen::MatrixXcd gen = 0.5 * (dd + dd.adjoint());
    for (Eigen::Index k = 0; k < u_diag.size(); ++k) {
        gen(k, k) += u_diag(k) * u_diag(k);
    }
    gen *= 0.5;
    return gen;
}

double checked_log_scale(double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw std::invalid_argument("scaling factor must be finite and positive");
    }
    return std::log(scale);
}

Eigen::MatrixXcd rebuild(const Eigen::MatrixXcd& vectors, const Eigen::VectorXd& values,
                         std::complex<double> scale) {
    if (scale == std::complex<double>(0.0, 0.0)) {
        return Eigen::MatrixXcd::Identity(vectors.rows(), vectors.cols());
    }
    Eigen::VectorXcd phases(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        phases(k) = std::exp(scale * values(k));
    }
    return vectors * phases.asDiagonal() * vectors.adjoint();
}

}  // namespace

OperatorMatrix chirp_mult_matrix(const Grid& g, double chirp) {
    if (!std::isfinite(chirp)) {
        throw std::invalid_argument("chirp rate must be finite");
    }
    const OperatorMatrix u = u_matrix(g);
    const Eigen::VectorXd u_diag = u.entries.diagonal().real();
    return {hermitian_expm(chirp_generator(u_diag), {0.0, -kPi * chirp}),
            MatrixRole::chirp_mult, g};
}

OperatorMatrix scaling_matrix(const Grid& g, double scale) {
    const double log_scale = checked_log_scale(scale);
    const Eigen::VectorXd u_diag = u_matrix(g).entries.diagonal().real();
    const OperatorMatrix d = d_matrix(g);
    return {hermitian_expm(scaling_generator(u_diag, d.entries), {0.0, -2.0 * kPi * log_scale}),
            MatrixRole::scaling, g};
}

OperatorMatrix frt_lc_matrix(const Grid& g, double order) {
    if (!std::isfinite(order)) {
        throw std::invalid_argument("fractional order must be finite");
    }
    const Eigen::VectorXd u_diag = u_matrix(g).entries.diagonal().real();
    const OperatorMatrix d = d_matrix(g);
    return {hermitian_expm(frt_generator(u_diag, d.entries), {0.0, -order * kPi * kPi}),
            MatrixRole::frt_lc, g};
}

Eigen::MatrixXcd parity_matrix(const Grid& g) {
    const double lo = g.indices.front();
    const double hi = g.indices.back();
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(g.n_samples, g.n_samples);
    for (int k = 0; k < g.n_samples; ++k) {
        double target = -g.indices[static_cast<unsigned>(k)];
        if (target > hi) target -= g.n_samples;
        if (target < lo) target += g.n_samples;
        const int pos = static_cast<int>(std::llround(target - lo));
        p(k, pos) = 1.0;
    }
    return p;
}

FactorGenerators::FactorGenerators(const Grid& g) : grid_(g) {
    u_diag_ = u_matrix(g).entries.diagonal().real();
    const OperatorMatrix d = d_matrix(g);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> scaling_solver(
        scaling_generator(u_diag_, d.entries));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> frt_solver(
        frt_generator(u_diag_, d.entries));
    if (scaling_solver.info() != Eigen::Success || frt_solver.info() != Eigen::Success) {
        throw std::runtime_error("generator eigendecomposition failed");
    }
    scaling_vectors_ = scaling_solver.eigenvectors();
    scaling_values_ = scaling_solver.eigenvalues();
    frt_vectors_ = frt_solver.eigenvectors();
    frt_values_ = frt_solver.eigenvalues();
}

Eigen::MatrixXcd FactorGenerators::chirp(double chirp) const {
    if (!std::isfinite(chirp)) {
        throw std::invalid_argument("chirp rate must be finite");
    }
    const auto n = u_diag_.size();
    if (chirp == 0.0) {
        return Eigen::MatrixXcd::Identity(n, n);
    }
    Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        q(k, k) = std::exp(std::complex<double>(0.0, -kPi * chirp) * (u_diag_(k) * u_diag_(k)));
    }
    return q;
}

Eigen::MatrixXcd FactorGenerators::scaling(double scale) const {
    const double log_scale = checked_log_scale(scale);
    return rebuild(scaling_vectors_, scaling_values_, {0.0, -2.0 * kPi * log_scale});
}

Eigen::MatrixXcd FactorGenerators::frt(double order) const {
    if (!std::isfinite(order)) {
        throw std::invalid_argument("fractional order must be finite");
    }
    return rebuild(frt_vectors_, frt_values_, {0.0, -order * kPi * kPi});
}

DlctMatrix dlct_matrix(const Grid& g, const LctParams& p) {
    return dlct_matrix(FactorGenerators(g), p);
}

DlctMatrix dlct_matrix(const FactorGenerators& gens, const LctParams& p) {
    const IwasawaFactors factors = iwasawa(p);

    double order = factors.frt_order;
    double scale = factors.scale;
    if (scale < 0.0) {
        // Negative scale means beta < 0. Scaling by a negative factor is
        // scaling by |M| composed with parity, and parity is the order -2
        // fractional Fourier factor in this phase convention, so the sign
        // folds into a shift of the fractional order.
        order -= 2.0;
        scale = -scale;
    }

    Eigen::MatrixXcd c = gens.chirp(factors.chirp) * (gens.scaling(scale) * gens.frt(order));
    return {{std::move(c), MatrixRole::dlct, gens.grid()}, p, factors};
}

SignalVector apply(const OperatorMatrix& m, const SignalVector& x) {
    if (!(m.grid == x.grid)) {
        throw std::invalid_argument("matrix and signal grids differ");
    }
    return {m.entries * x.samples, x.grid};
}

SignalVector apply(const DlctMatrix& m, const SignalVector& x) {
    return apply(m.matrix, x);
}

}  // namespace dlct
