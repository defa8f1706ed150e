#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sgdqe/condense.hpp"
#include "sgdqe/dq_weights.hpp"
#include "sgdqe/grid.hpp"

namespace sgdqe {

enum class Support { simply_supported, clamped, free };
// Extra condition per end: w'' = 0, or higher-order moment = 0.
enum class NonClassical { curvature_zero, higher_moment_zero };

struct UdlLoad {
    double q = 1.0;
};

// Concentrated force. x in (0, L) goes to the nearest grid point; x = 0 or
// x = L enters the shear equation of that (free) end.
struct PointLoad {
    double p = 1.0;
    double x = 0.5;
};

using BeamLoad = std::variant<UdlLoad, PointLoad>;

struct BeamProblem {
    double length = 1.0;
    double ei = 1.0;
    double g = 0.0;
    BeamLoad load = UdlLoad{};
    Support left = Support::simply_supported;
    Support right = Support::simply_supported;
    NonClassical nc_left = NonClassical::curvature_zero;
    NonClassical nc_right = NonClassical::curvature_zero;
    int n = 11;

    // Throws std::invalid_argument with a one-line reason.
    void validate() const;
    bool is_udl() const { return std::holds_alternative<UdlLoad>(load); }
};

struct EndReactions {
    double shear = 0.0;
    double moment = 0.0;
    double higher_moment = 0.0;
};

// Dimensionless quantities. udl: w*100EI/(qL^4), M/(qL^2), Mbar/(qL^3).
// point: w*100EI/(PL^3), M/(PL), Mbar/(PL^2). curvature: w''*L.
struct BeamReport {
    bool point_load = false;
    double w_mid = 0.0;
    double w_tip = 0.0;
    double w_load = 0.0;         // under the point load (udl: same as w_mid)
    double w_mid_plain = 0.0;    // w*EI/(PL^3) at midspan, no factor 100
    double slope_tip = 0.0;      // w'(L), dimensionless slope
    double curvature_mid = 0.0;  // w''(L/2) * L
    double curvature_tip = 0.0;
    double bm_left = 0.0, bm_right = 0.0;
    double hm_left = 0.0, hm_right = 0.0;
};

struct BeamSolution {
    Grid1D grid;
    std::vector<double> dofs;  // [w_1..w_N, w'_1, w'_N, w''_1, w''_N]
    std::vector<double> w, slope, curvature;
    double end_slopes[2] = {0.0, 0.0};
    double end_curvatures[2] = {0.0, 0.0};
    EndReactions left, right;
    BeamReport report;
    std::size_t boundary_count = 0;
    double rcond = 0.0;
    double load_position = 0.0;  // actual (snapped) point-load position
};

struct BeamDofs {
    int n;
    std::size_t w(int i) const { return static_cast<std::size_t>(i); }
    std::size_t slope(int end) const { return static_cast<std::size_t>(slope_col(n, end)); }
    std::size_t curvature(int end) const { return static_cast<std::size_t>(curvature_col(n, end)); }
    std::size_t total() const { return static_cast<std::size_t>(n + 4); }
};

AssembledSystem assemble_beam(const BeamProblem& problem, const ModifiedWeightSet& weights,
                              const Grid1D& grid);

EndReactions postprocess_reactions(const std::vector<double>& dofs,
                                   const ModifiedWeightSet& weights, const BeamProblem& problem,
                                   int end);

BeamReport nondimensionalize(const BeamSolution& solution, const BeamProblem& problem);

BeamSolution condense_and_solve(const AssembledSystem& system, const BeamProblem& problem,
                                const ModifiedWeightSet& weights, const Grid1D& grid,
                                SolveRoute route = SolveRoute::condensed,
                                bool estimate_condition = false);

BeamSolution solve_beam(const BeamProblem& problem, SolveRoute route = SolveRoute::condensed,
                        bool estimate_condition = false);

const char* to_string(Support s);
const char* to_string(NonClassical c);

}  // namespace sgdqe
