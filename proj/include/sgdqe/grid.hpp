#pragma once

#include <vector>

namespace sgdqe {

// Cosine-spaced collocation points on [0, length], endpoints included.
struct Grid1D {
    int n = 0;
    double length = 0.0;
    std::vector<double> points;
};

// Requires n >= 5 and length > 0; throws std::invalid_argument otherwise.
Grid1D gauss_lobatto_chebyshev(int n, double length);

// Raw point formula without the n >= 5 guard (n >= 2).
std::vector<double> chebyshev_lobatto_points(int n, double length);

// Integration weights of the Lagrange basis on the grid (Clenshaw-Curtis):
// sum_i w_i f(x_i) is exact for polynomials up to degree n-1.
std::vector<double> quadrature_weights(const Grid1D& grid);

// Index of the grid point closest to x.
int nearest_index(const Grid1D& grid, double x);

// Value at x of the Lagrange interpolant through (points, values).
double lagrange_interpolate(const std::vector<double>& points, const std::vector<double>& values,
                            double x);

}  // namespace sgdqe
