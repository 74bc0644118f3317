#pragma once

#include <utility>

#include <Eigen/Dense>

namespace tinv {

/// Constant symmetric nondegenerate bilinear form on an n-dimensional space
/// (n >= 2), any signature. Immutable after construction; the inverse and the
/// inertia (p positive, q negative eigenvalues) are computed once and cached.
class Metric {
public:
    /// Validates symmetry and nondegeneracy, computes the inverse and the
    /// signature. Throws AsymmetricMetric, DegenerateMetric, or
    /// InvalidArgument (n < 2).
    explicit Metric(Eigen::MatrixXd g);

    int dim() const noexcept { return dim_; }
    const Eigen::MatrixXd& g() const noexcept { return g_; }
    const Eigen::MatrixXd& g_inv() const noexcept { return g_inv_; }

    /// Inertia (p, q) with p + q = dim.
    std::pair<int, int> signature() const noexcept { return sig_; }

    double abs_det() const noexcept { return abs_det_; }

private:
    int dim_;
    Eigen::MatrixXd g_;
    Eigen::MatrixXd g_inv_;
    std::pair<int, int> sig_;
    double abs_det_;
};

/// diag(1, -1, -1, -1), index 0 the time component. Signature (1, 3).
Metric minkowski();

/// Identity metric of dimension n >= 2, signature (n, 0).
Metric euclidean(int n);

} // namespace tinv
