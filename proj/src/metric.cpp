#include "tinv/metric.hpp"

#include <cmath>
#include <string>

#include "tinv/errors.hpp"
#include "tinv/numeric.hpp"

namespace tinv {

namespace {

double inf_norm(const Eigen::MatrixXd& m) {
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

} // namespace

Metric::Metric(Eigen::MatrixXd g) : g_(std::move(g)) {
    if (g_.rows() != g_.cols()) {
        throw InvalidArgument("metric matrix must be square, got " +
                              std::to_string(g_.rows()) + "x" + std::to_string(g_.cols()));
    }
    dim_ = static_cast<int>(g_.rows());
    if (dim_ < 2) {
        throw InvalidArgument("metric dimension must be at least 2, got " + std::to_string(dim_));
    }

    const double scale = max_abs(g_);
    const double asym = max_abs(Eigen::MatrixXd(g_ - g_.transpose()));
    if (asym > 1e-12 * scale) {
        throw AsymmetricMetric("metric components are not symmetric: max|g_ij - g_ji| = " +
                               std::to_string(asym));
    }

    const double det = g_.fullPivLu().determinant();
    abs_det_ = std::abs(det);
    const double det_floor = 1e-10 * std::pow(inf_norm(g_), dim_);
    if (abs_det_ < det_floor || scale == 0.0) {
        throw DegenerateMetric("|det g| = " + std::to_string(abs_det_) +
                               " below the degeneracy threshold");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g_);
    const Eigen::VectorXd& evals = es.eigenvalues();
    const double spectral_radius = evals.cwiseAbs().maxCoeff();
    const double zero_band = 1e-10 * spectral_radius;
    int pos = 0, neg = 0;
    for (int i = 0; i < dim_; ++i) {
        if (std::abs(evals(i)) <= zero_band) {
            throw DegenerateMetric("metric eigenvalue " + std::to_string(evals(i)) +
                                   " inside the zero band");
        }
        (evals(i) > 0.0 ? pos : neg) += 1;
    }
    sig_ = {pos, neg};

    // Inverse from the eigendecomposition (symmetric by construction), then
    // one Newton polish step to tighten the g_inv * g = I contract.
    g_inv_ = es.eigenvectors() * evals.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
    g_inv_ += g_inv_ * (Eigen::MatrixXd::Identity(dim_, dim_) - g_ * g_inv_);
    g_inv_ = ((g_inv_ + g_inv_.transpose()) / 2.0).eval();

    const double contract = max_abs(Eigen::MatrixXd(g_inv_ * g_ -
                                                    Eigen::MatrixXd::Identity(dim_, dim_)));
    if (contract > 1e-10) {
        throw DegenerateMetric("metric too ill-conditioned: inverse contract residual = " +
                               std::to_string(contract));
    }
}

Metric minkowski() {
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
    g(1, 1) = g(2, 2) = g(3, 3) = -1.0;
    return Metric(g);
}

Metric euclidean(int n) {
    if (n < 2) {
        throw InvalidArgument("euclidean metric dimension must be at least 2, got " +
                              std::to_string(n));
    }
    return Metric(Eigen::MatrixXd::Identity(n, n));
}

} // namespace tinv
