#pragma once

#include <string>

#include <Eigen/Dense>

#include "tinv/metric.hpp"

namespace tinv {

/// Index placement of a second-order tensor. The component matrix always has
/// the first index as the row index.
enum class Variance {
    UpUp,     ///< A^{ij}
    DownDown, ///< A_{ij}
    UpDown,   ///< A^i_{.j}, contravariant index first
    DownUp,   ///< A_i^{.j}, covariant index first
};

std::string to_string(Variance v);
Variance variance_from_string(const std::string& s);

enum class TensorClass { Symmetric, SymmetricTraceless, Antisymmetric, General };

std::string to_string(TensorClass c);

/// Dense second-order tensor: components plus a variance tag. Values are
/// immutable; every operation is a pure function.
class Tensor2 {
public:
    Tensor2(Variance variance, Eigen::MatrixXd components);

    int dim() const noexcept { return dim_; }
    Variance variance() const noexcept { return var_; }
    const Eigen::MatrixXd& c() const noexcept { return c_; }

private:
    int dim_;
    Variance var_;
    Eigen::MatrixXd c_;
};

inline constexpr double kDefaultClassifyTol = 1e-9;

/// Re-expresses t in the target variance by contracting with g / g_inv on the
/// appropriate slots. Converting to the current variance returns t unchanged.
Tensor2 convert(const Tensor2& t, const Metric& m, Variance target);

/// Component transpose. Mixed tags flip between UpDown and DownUp.
Tensor2 transpose(const Tensor2& t);

/// Symmetry classification on the contravariant form. The zero tensor is both
/// symmetric and antisymmetric and is reported as SymmetricTraceless;
/// antisymmetric tensors are never reported as traceless-symmetric even
/// though their trace vanishes.
TensorClass classify(const Tensor2& t, const Metric& m, double tol = kDefaultClassifyTol);

/// Metric-contracted product, returned in the variance of a.
Tensor2 compose(const Tensor2& a, const Tensor2& b, const Metric& m);

/// k-fold metric-contracted power, k >= 1.
Tensor2 power(const Tensor2& t, const Metric& m, int k);

/// Metric trace; identical for all four variance forms of the same tensor.
double trace(const Tensor2& t, const Metric& m);

/// trace of the k-th power, k >= 1.
double trace_power(const Tensor2& t, const Metric& m, int k);

/// Components of the mixed form A^i_{.j} (the canonical form for eigenvalue
/// and characteristic-polynomial work).
Eigen::MatrixXd mixed_components(const Tensor2& t, const Metric& m);

/// Rebuilds a tensor of the requested variance from mixed-form components.
Tensor2 from_mixed(const Eigen::MatrixXd& mixed, const Metric& m, Variance target);

} // namespace tinv
