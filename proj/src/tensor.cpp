#include "tinv/tensor.hpp"

#include <cmath>

#include "tinv/errors.hpp"
#include "tinv/numeric.hpp"

namespace tinv {

namespace {

void require_same_dim(const Tensor2& t, const Metric& m) {
    if (t.dim() != m.dim()) {
        throw DimensionMismatch("tensor dimension " + std::to_string(t.dim()) +
                                " does not match metric dimension " + std::to_string(m.dim()));
    }
}

bool first_index_up(Variance v) { return v == Variance::UpUp || v == Variance::UpDown; }
bool second_index_up(Variance v) { return v == Variance::UpUp || v == Variance::DownUp; }

} // namespace

std::string to_string(Variance v) {
    switch (v) {
        case Variance::UpUp: return "uu";
        case Variance::DownDown: return "dd";
        case Variance::UpDown: return "ud";
        case Variance::DownUp: return "du";
    }
    return "uu";
}

Variance variance_from_string(const std::string& s) {
    if (s == "uu") return Variance::UpUp;
    if (s == "dd") return Variance::DownDown;
    if (s == "ud") return Variance::UpDown;
    if (s == "du") return Variance::DownUp;
    throw ParseError("unknown variance tag \"" + s + "\" (expected uu, dd, ud, or du)");
}

std::string to_string(TensorClass c) {
    switch (c) {
        case TensorClass::Symmetric: return "symmetric";
        case TensorClass::SymmetricTraceless: return "symmetric_traceless";
        case TensorClass::Antisymmetric: return "antisymmetric";
        case TensorClass::General: return "general";
    }
    return "general";
}

Tensor2::Tensor2(Variance variance, Eigen::MatrixXd components)
    : var_(variance), c_(std::move(components)) {
    if (c_.rows() != c_.cols()) {
        throw InvalidArgument("tensor components must form a square matrix, got " +
                              std::to_string(c_.rows()) + "x" + std::to_string(c_.cols()));
    }
    dim_ = static_cast<int>(c_.rows());
}

Tensor2 convert(const Tensor2& t, const Metric& m, Variance target) {
    require_same_dim(t, m);
    if (target == t.variance()) return t;

    // Raising a slot contracts with g_inv, lowering with g. First index acts
    // from the left, second from the right.
    Eigen::MatrixXd c = t.c();
    const bool from_up1 = first_index_up(t.variance());
    const bool to_up1 = first_index_up(target);
    if (from_up1 && !to_up1) c = m.g() * c;
    if (!from_up1 && to_up1) c = m.g_inv() * c;

    const bool from_up2 = second_index_up(t.variance());
    const bool to_up2 = second_index_up(target);
    if (from_up2 && !to_up2) c = c * m.g();
    if (!from_up2 && to_up2) c = c * m.g_inv();

    return Tensor2(target, std::move(c));
}

Tensor2 transpose(const Tensor2& t) {
    Variance v = t.variance();
    if (v == Variance::UpDown) v = Variance::DownUp;
    else if (v == Variance::DownUp) v = Variance::UpDown;
    return Tensor2(v, t.c().transpose());
}

TensorClass classify(const Tensor2& t, const Metric& m, double tol) {
    require_same_dim(t, m);
    if (tol <= 0.0) throw InvalidArgument("classification tolerance must be positive");

    const Eigen::MatrixXd c = convert(t, m, Variance::UpUp).c();
    const double scale = max_abs(c);
    const double sym_dev = max_abs(Eigen::MatrixXd(c - c.transpose()));
    const double anti_dev = max_abs(Eigen::MatrixXd(c + c.transpose()));
    const bool symmetric = sym_dev <= tol * scale;
    const bool antisymmetric = anti_dev <= tol * scale;

    // Zero tensor satisfies both; the tie goes to the symmetric branch so the
    // traceless refinement below applies.
    if (symmetric) {
        const double tr = trace(t, m);
        if (std::abs(tr) <= tol * t.dim() * scale) return TensorClass::SymmetricTraceless;
        return TensorClass::Symmetric;
    }
    if (antisymmetric) return TensorClass::Antisymmetric;
    return TensorClass::General;
}

Eigen::MatrixXd mixed_components(const Tensor2& t, const Metric& m) {
    require_same_dim(t, m);
    switch (t.variance()) {
        case Variance::UpDown: return t.c();
        case Variance::UpUp: return t.c() * m.g();
        case Variance::DownDown: return m.g_inv() * t.c();
        case Variance::DownUp: return m.g_inv() * t.c() * m.g();
    }
    return t.c();
}

Tensor2 from_mixed(const Eigen::MatrixXd& mixed, const Metric& m, Variance target) {
    if (mixed.rows() != m.dim() || mixed.cols() != m.dim()) {
        throw DimensionMismatch("mixed components do not match the metric dimension");
    }
    switch (target) {
        case Variance::UpDown: return Tensor2(target, mixed);
        case Variance::UpUp: return Tensor2(target, mixed * m.g_inv());
        case Variance::DownDown: return Tensor2(target, m.g() * mixed);
        case Variance::DownUp: return Tensor2(target, m.g() * mixed * m.g_inv());
    }
    return Tensor2(target, mixed);
}

Tensor2 compose(const Tensor2& a, const Tensor2& b, const Metric& m) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("cannot compose tensors of dimensions " +
                                std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
    require_same_dim(a, m);
    const Eigen::MatrixXd prod = mixed_components(a, m) * mixed_components(b, m);
    return from_mixed(prod, m, a.variance());
}

Tensor2 power(const Tensor2& t, const Metric& m, int k) {
    if (k < 1) throw InvalidArgument("tensor power requires k >= 1, got " + std::to_string(k));
    require_same_dim(t, m);
    if (k == 1) return t;
    const Eigen::MatrixXd mixed = mixed_components(t, m);
    Eigen::MatrixXd acc = mixed;
    for (int i = 1; i < k; ++i) acc = acc * mixed;
    return from_mixed(acc, m, t.variance());
}

double trace(const Tensor2& t, const Metric& m) {
    return mixed_components(t, m).trace();
}

double trace_power(const Tensor2& t, const Metric& m, int k) {
    if (k < 1) throw InvalidArgument("trace power requires k >= 1, got " + std::to_string(k));
    require_same_dim(t, m);
    const Eigen::MatrixXd mixed = mixed_components(t, m);
    Eigen::MatrixXd acc = mixed;
    for (int i = 1; i < k; ++i) acc = acc * mixed;
    return acc.trace();
}

} // namespace tinv
