#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgdqe {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Row-major dense storage.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    DenseMatrix(std::initializer_list<std::initializer_list<double>> init);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    DenseMatrix select(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x);
DenseMatrix transpose(const DenseMatrix& a);

double norm_inf(const DenseMatrix& a);
double norm_inf(const std::vector<double>& v);
double norm_one(const DenseMatrix& a);

class LuFactorization {
public:
    // Throws SingularMatrix when a pivot falls below 1e-13 * ||a||_inf.
    explicit LuFactorization(const DenseMatrix& a);

    std::size_t size() const { return n_; }
    std::vector<double> solve(const std::vector<double>& rhs) const;
    DenseMatrix solve(const DenseMatrix& rhs) const;
    std::vector<double> solve_transposed(const std::vector<double>& rhs) const;

    // Hager-style 1-norm estimate of 1/cond_1.
    double rcond_estimate() const;

    const std::vector<std::size_t>& permutation() const { return perm_; }

private:
    std::size_t n_ = 0;
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
    double anorm1_ = 0.0;
};

std::vector<double> lu_solve(const DenseMatrix& a, const std::vector<double>& rhs);
DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& rhs);

}  // namespace sgdqe
