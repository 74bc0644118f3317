#pragma once

#include <Eigen/Dense>

namespace tinv {

double max_abs(const Eigen::MatrixXd& m);
double max_abs(const Eigen::MatrixXcd& m);

// Matrix exponential by scaling-and-squaring: X is scaled so the Frobenius
// norm of X/2^s is at most 0.5, a 12-term Taylor sum is evaluated, and the
// result squared s times.
Eigen::MatrixXd mat_exp(const Eigen::MatrixXd& x);

// Null-space basis of a complex square matrix by pivoted Gaussian elimination.
// Pivots are chosen as the largest remaining entry; elimination stops once the
// best pivot drops to pivot_tol or below, and the free columns are
// back-substituted into null vectors. Each vector is normalized so its
// largest-magnitude entry is real positive and the 2-norm is 1, which makes
// the basis deterministic.
Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& a, double pivot_tol);

} // namespace tinv
