#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "sgdqe/grid.hpp"

using namespace sgdqe;

TEST(Grid, ThreePointFormula) {
    const auto p = chebyshev_lobatto_points(3, 1.0);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p[0], 0.0);
    EXPECT_NEAR(p[1], 0.5, 1e-15);
    EXPECT_EQ(p[2], 1.0);
}

TEST(Grid, FivePoints) {
    const Grid1D g = gauss_lobatto_chebyshev(5, 1.0);
    const double want[] = {0.0, 0.14644661, 0.5, 0.85355339, 1.0};
    ASSERT_EQ(g.points.size(), 5u);
    for (int i = 0; i < 5; ++i) EXPECT_NEAR(g.points[i], want[i], 5e-9);
}

TEST(Grid, DoubleLengthDoublesPoints) {
    const Grid1D a = gauss_lobatto_chebyshev(5, 1.0);
    const Grid1D b = gauss_lobatto_chebyshev(5, 2.0);
    for (int i = 0; i < 5; ++i) EXPECT_DOUBLE_EQ(b.points[i], 2.0 * a.points[i]);
}

TEST(Grid, RejectsSmallOrBadInput) {
    EXPECT_THROW(gauss_lobatto_chebyshev(4, 1.0), std::invalid_argument);
    EXPECT_THROW(gauss_lobatto_chebyshev(7, 0.0), std::invalid_argument);
    EXPECT_THROW(gauss_lobatto_chebyshev(7, -1.0), std::invalid_argument);
}

TEST(Grid, InvariantsOverRandomDraws) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> nd(5, 41);
    std::uniform_real_distribution<double> ld(1e-3, 1e3);
    for (int t = 0; t < 200; ++t) {
        const int n = nd(rng);
        const double L = ld(rng);
        const Grid1D g = gauss_lobatto_chebyshev(n, L);
        ASSERT_EQ(static_cast<int>(g.points.size()), n);
        EXPECT_EQ(g.points.front(), 0.0);
        EXPECT_EQ(g.points.back(), L);
        for (int i = 1; i < n; ++i) EXPECT_LT(g.points[i - 1], g.points[i]);
        for (int i = 0; i < n; ++i)
            EXPECT_NEAR(g.points[i] + g.points[n - 1 - i], L, 4 * L * 1e-16) << n << " " << i;
        const double c = 3.0;
        const Grid1D s = gauss_lobatto_chebyshev(n, c * L);
        for (int i = 0; i < n; ++i) EXPECT_NEAR(s.points[i], c * g.points[i], 1e-15 * c * L);
    }
}

TEST(Grid, QuadratureIntegratesPolynomials) {
    for (int n : {5, 8, 11, 15}) {
        const double L = 2.5;
        const Grid1D g = gauss_lobatto_chebyshev(n, L);
        const auto w = quadrature_weights(g);
        for (int m = 0; m <= n - 1; ++m) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += w[i] * std::pow(g.points[i], m);
            const double exact = std::pow(L, m + 1) / (m + 1);
            EXPECT_NEAR(s, exact, 1e-12 * exact) << "n=" << n << " m=" << m;
        }
        for (double wi : w) EXPECT_GT(wi, 0.0);
    }
}

TEST(Grid, NearestIndexAndInterpolation) {
    const Grid1D g = gauss_lobatto_chebyshev(9, 1.0);
    EXPECT_EQ(nearest_index(g, 0.5), 4);
    EXPECT_EQ(nearest_index(g, 0.0), 0);
    EXPECT_EQ(nearest_index(g, 0.999), 8);
    std::vector<double> v(9);
    for (int i = 0; i < 9; ++i) v[i] = std::pow(g.points[i], 5) - 2 * g.points[i];
    EXPECT_NEAR(lagrange_interpolate(g.points, v, 0.37), std::pow(0.37, 5) - 0.74, 1e-13);
    EXPECT_EQ(lagrange_interpolate(g.points, v, g.points[3]), v[3]);
}
