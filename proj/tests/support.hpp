#pragma once

#include <cmath>
#include <vector>

#include "sgdqe/dq_weights.hpp"

namespace testsupport {

// k-th derivative of x^m at x
inline double monomial_derivative(int m, int k, double x) {
    if (k > m) return 0.0;
    double c = 1.0;
    for (int j = 0; j < k; ++j) c *= m - j;
    return c * std::pow(x, m - k);
}

// [p(x_1..x_N), p'(x_1), p'(x_N), p''(x_1), p''(x_N)] for p = x^m
inline std::vector<double> monomial_dofs(const std::vector<double>& x, int m) {
    std::vector<double> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = std::pow(x[i], m);
    return sgdqe::extended_dofs(v, monomial_derivative(m, 1, x.front()),
                                monomial_derivative(m, 1, x.back()),
                                monomial_derivative(m, 2, x.front()),
                                monomial_derivative(m, 2, x.back()));
}

// Largest error of (op * dofs) against the exact k-th derivative, divided by
// the size of the terms being summed, ||op||_inf * ||dofs||_inf.
inline double operator_scaled_error(const sgdqe::DenseMatrix& op, const std::vector<double>& x,
                                    int m, int k) {
    const auto dofs = monomial_dofs(x, m);
    const auto got = sgdqe::matvec(op, dofs);
    double err = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        err = std::max(err, std::fabs(got[i] - monomial_derivative(m, k, x[i])));
    return err / (sgdqe::norm_inf(op) * sgdqe::norm_inf(dofs));
}

// Same error relative to the largest exact derivative value.
inline double value_relative_error(const sgdqe::DenseMatrix& op, const std::vector<double>& x,
                                   int m, int k) {
    const auto got = sgdqe::matvec(op, monomial_dofs(x, m));
    double err = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = monomial_derivative(m, k, x[i]);
        err = std::max(err, std::fabs(got[i] - e));
        ref = std::max(ref, std::fabs(e));
    }
    return ref > 0.0 ? err / ref : err;
}

}  // namespace testsupport
