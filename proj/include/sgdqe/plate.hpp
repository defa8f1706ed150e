#pragma once

#include <array>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sgdqe/condense.hpp"
#include "sgdqe/dq_weights.hpp"
#include "sgdqe/grid.hpp"

namespace sgdqe {

// S: simply supported, C: clamped, F: free, G: guided (normal slope and
// normal curvature held at zero, deflection free; used for cylindrical bending).
enum class EdgeType { simply_supported, clamped, free, guided };

enum class PlateVariant { ll, lh };

// How the LH element carries the x-edge slope/curvature lines along y. The
// corners have no mixed-derivative dofs. hermite: Hermite basis truncated to
// its nodal columns (line derivatives along y vanish at both ends).
// lagrange: plain Lagrange basis. corner: truncate only at ends that meet a
// free-free corner, where the twist vanishes; elsewhere the end derivatives
// follow from Lagrange differentiation of the nodal values.
enum class LhEdgeLines { corner, hermite, lagrange };

struct PlateUdl {
    double q = 1.0;
};

struct PlatePoint {
    double p = 1.0;
    double x = 0.5;
    double y = 0.5;
};

using PlateLoad = std::variant<PlateUdl, PlatePoint>;

struct PlateProblem {
    double lx = 1.0, ly = 1.0;
    double h = 0.01;
    double e = 3e6;
    double nu = 0.3;
    double g = 0.0;
    PlateLoad load = PlateUdl{};
    // order: x = 0, y = 0, x = lx, y = ly
    std::array<EdgeType, 4> edges{EdgeType::simply_supported, EdgeType::simply_supported,
                                  EdgeType::simply_supported, EdgeType::simply_supported};
    int n = 15;
    PlateVariant variant = PlateVariant::ll;
    LhEdgeLines lh_edge_lines = LhEdgeLines::corner;

    double rigidity() const;
    void validate() const;
    bool is_udl() const { return std::holds_alternative<PlateUdl>(load); }
};

// Parses "SSSS", "CFFF", ... (case-insensitive). Throws std::invalid_argument.
std::array<EdgeType, 4> parse_edges(const std::string& letters);
std::string edges_to_string(const std::array<EdgeType, 4>& edges);

// Global dof numbering: n*n grid values (i along x, j along y, index i*n+j),
// then x-edge slopes, y-edge slopes, x-edge curvatures, y-edge curvatures,
// each 2n long (edge k = 0 at the origin side, k = 1 opposite).
struct PlateDofLayout {
    int n = 0;
    std::size_t grid(int i, int j) const { return static_cast<std::size_t>(i * n + j); }
    std::size_t x_slope(int k, int j) const { return static_cast<std::size_t>(n * n + k * n + j); }
    std::size_t y_slope(int k, int i) const { return static_cast<std::size_t>(n * n + 2 * n + k * n + i); }
    std::size_t x_curvature(int k, int j) const { return static_cast<std::size_t>(n * n + 4 * n + k * n + j); }
    std::size_t y_curvature(int k, int i) const { return static_cast<std::size_t>(n * n + 6 * n + k * n + i); }
    std::size_t total() const { return static_cast<std::size_t>(n * n + 8 * n); }
    bool is_interior_grid(std::size_t dof) const;
    std::string label(std::size_t dof) const;
};

enum class PlateForce { vx, vy, mx, my, mbar_x, mbar_y, corner };

// Derivative operators of one plate element; builds equation rows over the
// global dof vector.
class PlateOperators {
public:
    explicit PlateOperators(const PlateProblem& problem);

    const PlateDofLayout& layout() const { return layout_; }
    const Grid1D& x_grid() const { return gx_; }
    const Grid1D& y_grid() const { return gy_; }

    // sum_q sum_r X_a[p,q] Y_b[s,r] W(q,r); mixed corner terms (q, r both
    // extended) are absent.
    std::vector<double> sandwich(int p, int s, int a, int b) const;
    // Whole-grid value of the same operator as a matrix product X_a W Y_b^T,
    // where W holds the dofs arranged by (q, r).
    DenseMatrix apply(int a, int b, const std::vector<double>& dofs) const;

    std::vector<double> interior_row(int p, int s) const;
    std::vector<double> force_row(PlateForce f, int p, int s) const;
    DenseMatrix apply_interior(const std::vector<double>& dofs) const;
    DenseMatrix apply_force(PlateForce f, const std::vector<double>& dofs) const;
    double rigidity() const { return d_; }

private:
    const DenseMatrix& xmat(int a) const;
    // line: -1 for nodal lines, 0 / 1 for the x = 0 / x = lx edge lines
    const DenseMatrix& ymat(int b, int line) const;
    struct Term {
        double coef;
        int a, b;
    };
    std::vector<Term> terms(PlateForce f) const;
    std::vector<Term> interior_terms() const;

    PlateProblem pb_;
    double d_;
    PlateDofLayout layout_;
    Grid1D gx_, gy_;
    ModifiedWeightSet wx_, wy_;
    HermiteBasisSet hy_;
    std::array<std::vector<DenseMatrix>, 2> edge_y_;  // corner mode, per edge line
};

struct PlateReport {
    bool point_load = false;
    double w_center = 0.0;      // (lx/2, ly/2)
    double w_edge_mid = 0.0;    // (lx, ly/2)
    double w_max = 0.0;         // largest |w| on the grid, signed
    double bm_edge = 0.0;       // M_x at (0, ly/2)
    double hm_edge = 0.0;       // Mbar_x at (0, ly/2)
    double curvature_center = 0.0;
};

struct PlateSolution {
    std::shared_ptr<const PlateOperators> ops;
    std::vector<double> dofs;
    std::vector<std::vector<double>> w;  // w[i][j] at (x_i, y_j)
    std::size_t boundary_count = 0;
    double rcond = 0.0;
    PlateReport report;

    double force(PlateForce f, int i, int j) const;
};

AssembledSystem assemble_plate(const PlateProblem& problem, const PlateOperators& ops);
// Dof eliminations and force rows for the given edges; called by assemble_plate.
void apply_plate_bcs(AssembledSystem& system, const PlateProblem& problem, const PlateOperators& ops);

PlateSolution condense_and_solve_plate(const AssembledSystem& system, const PlateProblem& problem,
                                       std::shared_ptr<const PlateOperators> ops,
                                       SolveRoute route = SolveRoute::condensed,
                                       bool estimate_condition = false);

PlateReport nondimensionalize(const PlateSolution& solution, const PlateProblem& problem);

PlateSolution solve_plate(const PlateProblem& problem, SolveRoute route = SolveRoute::condensed,
                          bool estimate_condition = false);

}  // namespace sgdqe
