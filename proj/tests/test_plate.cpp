#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sgdqe/beam.hpp"
#include "sgdqe/export.hpp"
#include "sgdqe/linalg.hpp"
#include "sgdqe/plate.hpp"

using namespace sgdqe;

namespace {

PlateProblem plate(const char* edges, double g_over_l, int n = 15, PlateVariant v = PlateVariant::ll) {
    PlateProblem p;
    p.edges = parse_edges(edges);
    p.g = g_over_l;
    p.n = n;
    p.variant = v;
    return p;
}

PlateProblem cfff(double g_over_l, PlateVariant v = PlateVariant::ll) {
    PlateProblem p = plate("CFFF", g_over_l, 17, v);
    p.ly = 2.0;
    return p;
}

PlateProblem central_point(const char* edges, double g_over_l, PlateVariant v) {
    PlateProblem p = plate(edges, g_over_l, 15, v);
    p.load = PlatePoint{1.0, 0.5, 0.5};
    return p;
}

}  // namespace

TEST(PlateLL, Deflections) {
    EXPECT_NEAR(solve_plate(plate("SSSS", 0.05)).report.w_center, 0.3884, 5e-4);
    EXPECT_NEAR(solve_plate(plate("CCCC", 1e-5)).report.w_center, 0.1265, 5e-4);
    EXPECT_NEAR(solve_plate(cfff(0.1)).report.w_edge_mid, 8.5059, 5e-3 * 8.5059);
}

TEST(PlateLL, CylindricalBending) {
    EXPECT_NEAR(solve_plate(plate("CGCG", 0.1)).report.w_center, 0.1028, 5e-4);
    EXPECT_NEAR(solve_plate(plate("CGCG", 0.5)).report.w_center, 0.0083, 5e-4);
}

TEST(PlateLL, CylindricalBendingEqualsClampedBeam) {
    for (double g : {1e-5, 0.05, 0.1, 0.5}) {
        BeamProblem b;
        b.left = b.right = Support::clamped;
        b.g = g;
        b.n = 15;
        const double beam = solve_beam(b).report.w_mid;
        EXPECT_NEAR(solve_plate(plate("CGCG", g)).report.w_center, beam, 5e-5) << g;
    }
}

TEST(PlateLL, CentralPointLoad) {
    EXPECT_NEAR(solve_plate(central_point("CFCF", 1e-5, PlateVariant::ll)).report.w_center, 0.7668, 5e-4);
}

// Double sine series for a simply supported gradient plate under udl:
// D (k^4 + g^2 k^6) W_mn = 16 q / (pi^2 m n), m, n odd.
struct NavierValues {
    double w_center, hm_edge;
};

NavierValues navier_ssss(const PlateProblem& p, int terms = 801) {
    const double pi = std::acos(-1.0), d = p.rigidity(), g2 = p.g * p.g, q = 1.0;
    double w = 0.0, hm = 0.0;
    for (int m = 1; m < terms; m += 2)
        for (int k = 1; k < terms; k += 2) {
            const double a = m * pi / p.lx, b = k * pi / p.ly, s2 = a * a + b * b;
            const double c = 16.0 * q / (pi * pi * m * k) / (d * (s2 * s2 + g2 * s2 * s2 * s2));
            const double sy = std::sin(0.5 * b * p.ly);
            w += c * std::sin(0.5 * a * p.lx) * sy;
            hm += g2 * d * c * a * (a * a + p.nu * b * b) * sy;
        }
    return {100.0 * d * w / (q * std::pow(p.lx, 4)), hm / (q * std::pow(p.lx, 3))};
}

TEST(Plate, SimplySupportedMatchesSeries) {
    for (PlateVariant v : {PlateVariant::ll, PlateVariant::lh})
        for (double g : {0.05, 0.1, 0.5}) {
            const PlateProblem p = plate("SSSS", g, 19, v);
            const NavierValues ref = navier_ssss(p);
            const PlateReport r = solve_plate(p).report;
            EXPECT_NEAR(r.w_center, ref.w_center, 2e-6 * ref.w_center) << g << " " << to_string(v);
            EXPECT_NEAR(r.hm_edge, ref.hm_edge, 5e-4 * ref.hm_edge) << g << " " << to_string(v);
        }
}

TEST(PlateLH, CornerModeReducesToPureModes) {
    // no free-free corner: every end takes Lagrange derivatives
    for (double g : {0.05, 0.1}) {
        PlateProblem a = plate("SSSS", g, 13, PlateVariant::lh), b = a;
        b.lh_edge_lines = LhEdgeLines::lagrange;
        const double wa = solve_plate(a).report.w_center, wb = solve_plate(b).report.w_center;
        EXPECT_NEAR(wa, wb, 1e-9 * wb);
    }
    // both ends of the free edge line meet free-free corners
    PlateProblem a = cfff(0.1, PlateVariant::lh), b = a;
    b.lh_edge_lines = LhEdgeLines::hermite;
    const double wa = solve_plate(a).report.w_edge_mid, wb = solve_plate(b).report.w_edge_mid;
    EXPECT_NEAR(wa, wb, 1e-9 * wb);
}

TEST(PlateLL, HigherMomentSimplySupported) {
    EXPECT_NEAR(std::fabs(solve_plate(plate("SSSS", 0.1)).report.hm_edge) * 1e3, 1.6666, 5e-4);
}

TEST(PlateLL, HigherMoments) {
    EXPECT_NEAR(solve_plate(plate("CCCC", 1e-5)).report.hm_edge * 1e3, 0.0, 1e-5);
    EXPECT_NEAR(std::fabs(solve_plate(cfff(0.05)).report.hm_edge) * 1e3, 23.0985, 5e-3 * 23.0985);
}

TEST(PlateLH, DeflectionSimplySupported) {
    EXPECT_NEAR(solve_plate(plate("SSSS", 0.1, 15, PlateVariant::lh)).report.w_center, 0.3481, 5e-4);
}

TEST(PlateLH, Deflections) {
    EXPECT_NEAR(solve_plate(plate("CCCC", 0.5, 15, PlateVariant::lh)).report.w_center, 0.0036, 5e-4);
}

TEST(PlateLH, CentralPointLoad) {
    EXPECT_NEAR(solve_plate(central_point("SFSF", 1e-5, PlateVariant::lh)).report.w_center, 2.3389, 5e-4);
}

TEST(Plate, BoundaryDofCounts) {
    for (PlateVariant v : {PlateVariant::ll, PlateVariant::lh})
        for (int n : {11, 13, 15, 17}) {
            EXPECT_EQ(solve_plate(plate("SSSS", 0.1, n, v)).boundary_count, static_cast<std::size_t>(4 * n - 8));
            EXPECT_EQ(solve_plate(plate("CCCC", 0.1, n, v)).boundary_count, 0u);
            EXPECT_EQ(solve_plate(plate("CFFF", 0.1, n, v)).boundary_count, static_cast<std::size_t>(9 * n - 8));
        }
}

TEST(Plate, DofLayout) {
    const PlateDofLayout l{5};
    EXPECT_EQ(l.grid(0, 0), 0u);
    EXPECT_EQ(l.grid(4, 4), 24u);
    EXPECT_EQ(l.x_slope(0, 0), 25u);
    EXPECT_EQ(l.y_slope(0, 0), 35u);
    EXPECT_EQ(l.x_curvature(0, 0), 45u);
    EXPECT_EQ(l.y_curvature(1, 4), 64u);
    EXPECT_EQ(l.total(), 65u);
    EXPECT_TRUE(l.is_interior_grid(l.grid(2, 2)));
    EXPECT_FALSE(l.is_interior_grid(l.grid(0, 2)));
    EXPECT_FALSE(l.is_interior_grid(l.x_slope(1, 2)));
}

TEST(Plate, Symmetry) {
    for (PlateVariant v : {PlateVariant::ll, PlateVariant::lh})
        for (const char* e : {"SSSS", "CCCC"})
            for (double g : {1e-5, 0.1}) {
                const PlateSolution s = solve_plate(plate(e, g, 13, v));
                const int n = 13;
                double scale = 0.0;
                for (auto& row : s.w)
                    for (double x : row) scale = std::max(scale, std::fabs(x));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        EXPECT_NEAR(s.w[i][j], s.w[n - 1 - i][j], 1e-8 * scale) << e;
                        EXPECT_NEAR(s.w[i][j], s.w[i][n - 1 - j], 1e-8 * scale) << e << " g=" << g << " v=" << to_string(v);
                    }
            }
}

TEST(Plate, ClassicalLimit) {
    EXPECT_NEAR(solve_plate(plate("SSSS", 1e-5)).report.w_center, 0.4062, 5e-5);
}

TEST(Plate, VariantsAgree) {
    for (const char* e : {"SSSS", "CCCC"})
        for (double g : {1e-5, 0.05}) {
            const double ll = solve_plate(plate(e, g)).report.w_center;
            const double lh = solve_plate(plate(e, g, 15, PlateVariant::lh)).report.w_center;
            EXPECT_NEAR(lh, ll, 1e-2 * std::fabs(ll)) << e << " g=" << g;
        }
}

TEST(Plate, CondensedMatchesDirect) {
    for (PlateVariant v : {PlateVariant::ll, PlateVariant::lh})
        for (const char* e : {"SSSS", "CFFF", "SCSF"}) {
            const PlateProblem p = plate(e, 0.1, 11, v);
            const PlateSolution a = solve_plate(p, SolveRoute::condensed);
            const PlateSolution b = solve_plate(p, SolveRoute::direct, true);
            ASSERT_GT(b.rcond, 0.0);
            // both routes lose digits in proportion to the conditioning
            const double tol = std::max(1e-9, 1e-15 / b.rcond);
            EXPECT_NEAR(a.report.w_max, b.report.w_max, tol * std::fabs(b.report.w_max))
                << e << " " << to_string(v) << " rcond=" << b.rcond;
        }
}

TEST(Plate, OperatorProductMatchesRows) {
    // interior rows against the matrix-product form on a random dof vector
    for (PlateVariant v : {PlateVariant::ll, PlateVariant::lh}) {
        const PlateOperators ops(plate("SSSS", 0.1, 9, v));
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> d(-1, 1);
        std::vector<double> x(ops.layout().total());
        for (auto& xi : x) xi = d(rng);
        const DenseMatrix whole = ops.apply_interior(x);
        const DenseMatrix mx = ops.apply_force(PlateForce::mx, x);
        for (int p = 1; p < 8; ++p)
            for (int s = 1; s < 8; ++s) {
                const auto row = ops.interior_row(p, s);
                double dot = 0.0, mag = 0.0;
                for (std::size_t k = 0; k < x.size(); ++k) {
                    dot += row[k] * x[k];
                    mag += std::fabs(row[k] * x[k]);
                }
                EXPECT_NEAR(dot, whole(p, s), 1e-12 * mag);
            }
        for (int s = 0; s < 9; ++s) {
            const auto row = ops.force_row(PlateForce::mx, 0, s);
            double dot = 0.0, mag = 0.0;
            for (std::size_t k = 0; k < x.size(); ++k) {
                dot += row[k] * x[k];
                mag += std::fabs(row[k] * x[k]);
            }
            EXPECT_NEAR(dot, mx(0, s), 1e-12 * mag);
        }
    }
}

TEST(Plate, Validation) {
    auto bad = [](PlateProblem p) { EXPECT_THROW(p.validate(), std::invalid_argument); };
    bad(plate("FFFF", 0.1));
    PlateProblem p = plate("SSSS", 0.1);
    p.nu = 0.5;
    bad(p);
    p = plate("SSSS", 0.1, 4);
    bad(p);
    p = plate("SSSS", 0.1);
    p.lx = -1;
    bad(p);
    p = central_point("SSSS", 0.1, PlateVariant::ll);
    p.n = 14;
    bad(p);
    EXPECT_THROW(parse_edges("SSS"), std::invalid_argument);
    EXPECT_THROW(parse_edges("SSXS"), std::invalid_argument);
    EXPECT_EQ(edges_to_string(parse_edges("scfg")), "SCFG");
}

TEST(Plate, RigidMotionIsSingular) {
    // guided edges leave the deflection level unconstrained
    EXPECT_THROW(solve_plate(plate("GGGG", 0.1, 11)), SingularMatrix);
}
