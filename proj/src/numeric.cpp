#include "tinv/numeric.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace tinv {

double max_abs(const Eigen::MatrixXd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs(const Eigen::MatrixXcd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Eigen::MatrixXd mat_exp(const Eigen::MatrixXd& x) {
    const auto n = x.rows();
    const double norm = x.norm();
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const Eigen::MatrixXd y = x / std::ldexp(1.0, squarings);

    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd sum = term;
    for (int k = 1; k <= 12; ++k) {
        term = (term * y) / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& a, double pivot_tol) {
    const Eigen::Index n = a.rows();
    Eigen::MatrixXcd b = a;
    std::vector<Eigen::Index> col_perm(n);
    for (Eigen::Index j = 0; j < n; ++j) col_perm[j] = j;

    Eigen::Index rank = 0;
    for (Eigen::Index step = 0; step < n; ++step) {
        // full pivot search over the remaining submatrix
        Eigen::Index pr = step, pc = step;
        double best = -1.0;
        for (Eigen::Index i = step; i < n; ++i) {
            for (Eigen::Index j = step; j < n; ++j) {
                const double v = std::abs(b(i, j));
                if (v > best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best <= pivot_tol) break;
        if (pr != step) b.row(step).swap(b.row(pr));
        if (pc != step) {
            b.col(step).swap(b.col(pc));
            std::swap(col_perm[step], col_perm[pc]);
        }
        for (Eigen::Index i = step + 1; i < n; ++i) {
            const std::complex<double> f = b(i, step) / b(step, step);
            b.row(i).tail(n - step) -= f * b.row(step).tail(n - step);
            b(i, step) = 0.0;
        }
        ++rank;
    }

    const Eigen::Index nullity = n - rank;
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(n, nullity);
    for (Eigen::Index f = 0; f < nullity; ++f) {
        const Eigen::Index free_col = rank + f;
        Eigen::VectorXcd xp = Eigen::VectorXcd::Zero(n); // permuted coordinates
        xp(free_col) = 1.0;
        for (Eigen::Index i = rank - 1; i >= 0; --i) {
            std::complex<double> s = b(i, free_col);
            for (Eigen::Index j = i + 1; j < rank; ++j) s += b(i, j) * xp(j);
            xp(i) = -s / b(i, i);
        }
        Eigen::VectorXcd v(n);
        for (Eigen::Index j = 0; j < n; ++j) v(col_perm[j]) = xp(j);

        // canonical phase and length
        Eigen::Index imax = 0;
        double vmax = -1.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            const double m = std::abs(v(j));
            if (m > vmax) {
                vmax = m;
                imax = j;
            }
        }
        v /= v(imax);
        v /= v.norm();
        basis.col(f) = v;
    }
    return basis;
}

} // namespace tinv
