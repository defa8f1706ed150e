#include "sgdqe/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sgdqe {

std::vector<double> chebyshev_lobatto_points(int n, double length) {
    if (n < 2) throw std::invalid_argument("grid needs at least two points");
    std::vector<double> x(static_cast<std::size_t>(n));
    const double half = 0.5 * length;
    for (int i = 0; i < n; ++i)
        x[i] = half * (1.0 - std::cos(i * std::numbers::pi / (n - 1)));
    // pin the ends and enforce mirror symmetry exactly
    x.front() = 0.0;
    x.back() = length;
    for (int i = 0; i < n / 2; ++i) x[n - 1 - i] = length - x[i];
    if (n % 2 == 1) x[n / 2] = half;
    return x;
}

Grid1D gauss_lobatto_chebyshev(int n, double length) {
    if (n < 5) throw std::invalid_argument("grid size must be >= 5, got " + std::to_string(n));
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("grid length must be positive");
    Grid1D g;
    g.n = n;
    g.length = length;
    g.points = chebyshev_lobatto_points(n, length);
    return g;
}

std::vector<double> quadrature_weights(const Grid1D& grid) {
    const int n = grid.n;
    const int m = n - 1;
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double theta = std::numbers::pi * i / m;
        double s = 0.0;
        for (int k = 1; k <= m / 2; ++k) {
            const double b = (2 * k == m) ? 1.0 : 2.0;
            s += b * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
        }
        const double c = (i == 0 || i == m) ? 1.0 : 2.0;
        w[i] = c / m * (1.0 - s) * 0.5 * grid.length;
    }
    return w;
}

int nearest_index(const Grid1D& grid, double x) {
    int best = 0;
    for (int i = 1; i < grid.n; ++i)
        if (std::fabs(grid.points[i] - x) < std::fabs(grid.points[best] - x)) best = i;
    return best;
}

double lagrange_interpolate(const std::vector<double>& points, const std::vector<double>& values,
                            double x) {
    const std::size_t n = points.size();
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double l = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            l *= (x - points[k]) / (points[j] - points[k]);
        }
        sum += l * values[j];
    }
    return sum;
}

}  // namespace sgdqe
