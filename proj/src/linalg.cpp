#include "sgdqe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sgdqe/kernels.hpp"

namespace sgdqe {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw DimensionMismatch("ragged initializer list");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::select(const std::vector<std::size_t>& r,
                                const std::vector<std::size_t>& c) const {
    DenseMatrix out(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double* src = row(r[i]);
        double* dst = out.row(i);
        for (std::size_t j = 0; j < c.size(); ++j) dst[j] = src[c[j]];
    }
    return out;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    DenseMatrix c(a.rows(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (ai[k] == 0.0) continue;
            kernels::axpy(n, ai[k], b.row(k), ci);
        }
    }
    return c;
}

std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matvec: size mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += ai[j] * x[j];
        y[i] = s;
    }
    return y;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

double norm_inf(const DenseMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        const double* r = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::fabs(r[j]);
        m = std::max(m, s);
    }
    return m;
}

double norm_inf(const std::vector<double>& v) { return kernels::max_abs(v.size(), v.data()); }

double norm_one(const DenseMatrix& a) {
    std::vector<double> colsum(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) colsum[j] += std::fabs(a(i, j));
    double m = 0.0;
    for (double s : colsum) m = std::max(m, s);
    return m;
}

LuFactorization::LuFactorization(const DenseMatrix& a) : n_(a.rows()), lu_(a), perm_(a.rows()) {
    if (a.rows() != a.cols()) throw DimensionMismatch("lu: matrix is not square");
    for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;
    anorm1_ = norm_one(a);
    const double threshold = 1e-13 * norm_inf(a);

    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t piv = k;
        double best = std::fabs(lu_(k, k));
        for (std::size_t i = k + 1; i < n_; ++i) {
            double v = std::fabs(lu_(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (!(best > threshold))
            throw SingularMatrix("pivot " + std::to_string(best) + " at column " +
                                 std::to_string(k) + " is below the singularity threshold");
        if (piv != k) {
            std::swap_ranges(lu_.row(k), lu_.row(k) + n_, lu_.row(piv));
            std::swap(perm_[k], perm_[piv]);
        }
        const double inv = 1.0 / lu_(k, k);
        const std::size_t tail = n_ - k - 1;
        const double* rk = lu_.row(k) + k + 1;
        for (std::size_t i = k + 1; i < n_; ++i) {
            double l = lu_(i, k) * inv;
            lu_(i, k) = l;
            if (l != 0.0) kernels::axpy(tail, -l, rk, lu_.row(i) + k + 1);
        }
    }
}

std::vector<double> LuFactorization::solve(const std::vector<double>& rhs) const {
    if (rhs.size() != n_) throw DimensionMismatch("lu solve: rhs length mismatch");
    std::vector<double> x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = rhs[perm_[i]];
    for (std::size_t i = 0; i < n_; ++i) {
        const double* r = lu_.row(i);
        double s = x[i];
        for (std::size_t j = 0; j < i; ++j) s -= r[j] * x[j];
        x[i] = s;
    }
    for (std::size_t i = n_; i-- > 0;) {
        const double* r = lu_.row(i);
        double s = x[i];
        for (std::size_t j = i + 1; j < n_; ++j) s -= r[j] * x[j];
        x[i] = s / r[i];
    }
    return x;
}

DenseMatrix LuFactorization::solve(const DenseMatrix& rhs) const {
    if (rhs.rows() != n_) throw DimensionMismatch("lu solve: rhs rows mismatch");
    const std::size_t m = rhs.cols();
    DenseMatrix x(n_, m);
    for (std::size_t i = 0; i < n_; ++i) std::copy_n(rhs.row(perm_[i]), m, x.row(i));
    for (std::size_t i = 0; i < n_; ++i) {
        const double* r = lu_.row(i);
        for (std::size_t j = 0; j < i; ++j)
            if (r[j] != 0.0) kernels::axpy(m, -r[j], x.row(j), x.row(i));
    }
    for (std::size_t i = n_; i-- > 0;) {
        const double* r = lu_.row(i);
        for (std::size_t j = i + 1; j < n_; ++j)
            if (r[j] != 0.0) kernels::axpy(m, -r[j], x.row(j), x.row(i));
        kernels::scale(m, 1.0 / r[i], x.row(i));
    }
    return x;
}

std::vector<double> LuFactorization::solve_transposed(const std::vector<double>& rhs) const {
    if (rhs.size() != n_) throw DimensionMismatch("lu solve: rhs length mismatch");
    // A^T = U^T L^T P
    std::vector<double> z(rhs);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = z[i];
        for (std::size_t j = 0; j < i; ++j) s -= lu_(j, i) * z[j];
        z[i] = s / lu_(i, i);
    }
    for (std::size_t i = n_; i-- > 0;) {
        double s = z[i];
        for (std::size_t j = i + 1; j < n_; ++j) s -= lu_(j, i) * z[j];
        z[i] = s;
    }
    std::vector<double> x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[perm_[i]] = z[i];
    return x;
}

double LuFactorization::rcond_estimate() const {
    if (n_ == 0 || anorm1_ == 0.0) return 0.0;
    std::vector<double> x(n_, 1.0 / static_cast<double>(n_));
    double est = 0.0;
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<double> y = solve(x);
        est = 0.0;
        for (double v : y) est += std::fabs(v);
        std::vector<double> xi(n_);
        for (std::size_t i = 0; i < n_; ++i) xi[i] = y[i] >= 0.0 ? 1.0 : -1.0;
        std::vector<double> z = solve_transposed(xi);
        std::size_t jmax = 0;
        double zmax = 0.0, ztx = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            ztx += z[i] * x[i];
            if (std::fabs(z[i]) > zmax) {
                zmax = std::fabs(z[i]);
                jmax = i;
            }
        }
        if (zmax <= ztx) break;
        std::fill(x.begin(), x.end(), 0.0);
        x[jmax] = 1.0;
    }
    return est > 0.0 ? 1.0 / (anorm1_ * est) : 0.0;
}

std::vector<double> lu_solve(const DenseMatrix& a, const std::vector<double>& rhs) {
    if (rhs.size() != a.rows()) throw DimensionMismatch("lu_solve: rhs length mismatch");
    return LuFactorization(a).solve(rhs);
}

DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& rhs) {
    if (rhs.rows() != a.rows()) throw DimensionMismatch("lu_solve: rhs rows mismatch");
    return LuFactorization(a).solve(rhs);
}

}  // namespace sgdqe
