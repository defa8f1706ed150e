#include "sgdqe/beam.hpp"

#include <cmath>
#include <stdexcept>

namespace sgdqe {

namespace {

double dot_row(const DenseMatrix& m, std::size_t i, const std::vector<double>& v) {
    double s = 0.0;
    const double* r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) s += r[j] * v[j];
    return s;
}

void set_row(DenseMatrix& k, std::size_t eq, const DenseMatrix& m1, double c1,
             const DenseMatrix& m2, double c2, std::size_t src) {
    for (std::size_t j = 0; j < k.cols(); ++j) k(eq, j) = c1 * m1(src, j) + c2 * m2(src, j);
}

bool at_end(double x, double length, int& end) {
    const double tol = 1e-12 * length;
    if (std::fabs(x) <= tol) {
        end = 0;
        return true;
    }
    if (std::fabs(x - length) <= tol) {
        end = 1;
        return true;
    }
    return false;
}

}  // namespace

const char* to_string(Support s) {
    switch (s) {
        case Support::simply_supported: return "simply_supported";
        case Support::clamped: return "clamped";
        case Support::free: return "free";
    }
    return "?";
}

const char* to_string(NonClassical c) {
    return c == NonClassical::curvature_zero ? "curvature_zero" : "higher_moment_zero";
}

void BeamProblem::validate() const {
    if (!(length > 0.0) || !std::isfinite(length)) throw std::invalid_argument("length must be positive");
    if (!(ei > 0.0) || !std::isfinite(ei)) throw std::invalid_argument("EI must be positive");
    if (!(g >= 0.0) || !std::isfinite(g)) throw std::invalid_argument("gradient length must be >= 0");
    if (n < 5) throw std::invalid_argument("grid size must be >= 5");
    const bool lf = left == Support::free, rf = right == Support::free;
    if (lf && rf) throw std::invalid_argument("unconstrained rigid motion: both ends free");
    if ((lf && right == Support::simply_supported) || (rf && left == Support::simply_supported))
        throw std::invalid_argument("unconstrained rigid motion: free end opposite a pin");
    if (lf && nc_left != NonClassical::higher_moment_zero)
        throw std::invalid_argument("a free end takes the higher-moment condition");
    if (rf && nc_right != NonClassical::higher_moment_zero)
        throw std::invalid_argument("a free end takes the higher-moment condition");
    if (const auto* pl = std::get_if<PointLoad>(&load)) {
        if (!std::isfinite(pl->p)) throw std::invalid_argument("point load must be finite");
        if (pl->x < 0.0 || pl->x > length) throw std::invalid_argument("point load outside the beam");
        int end = 0;
        if (at_end(pl->x, length, end)) {
            if ((end == 0 ? left : right) != Support::free)
                throw std::invalid_argument("point load on a supported end carries no bending");
        } else if (std::fabs(pl->x - 0.5 * length) <= 1e-12 * length && n % 2 == 0) {
            throw std::invalid_argument("midspan point load needs an odd grid size");
        }
    } else {
        if (!std::isfinite(std::get<UdlLoad>(load).q)) throw std::invalid_argument("load must be finite");
    }
}

AssembledSystem assemble_beam(const BeamProblem& pb, const ModifiedWeightSet& wt,
                              const Grid1D& grid) {
    pb.validate();
    const int n = pb.n;
    if (grid.n != n || static_cast<int>(wt.a.rows()) != n)
        throw std::invalid_argument("weights were built for a different grid");
    const BeamDofs dof{n};
    const double ei = pb.ei, g2 = pb.g * pb.g;

    AssembledSystem sys;
    sys.k = DenseMatrix(dof.total(), dof.total());
    sys.f.assign(dof.total(), 0.0);
    sys.labels.resize(dof.total());
    for (int i = 0; i < n; ++i) sys.labels[dof.w(i)] = "w[" + std::to_string(i) + "]";

    for (int i = 1; i < n - 1; ++i) {
        set_row(sys.k, dof.w(i), wt.d, ei, wt.f, -g2 * ei, static_cast<std::size_t>(i));
        if (pb.is_udl()) sys.f[dof.w(i)] = std::get<UdlLoad>(pb.load).q;
        sys.domain_dofs.push_back(dof.w(i));
    }

    const Support sup[2] = {pb.left, pb.right};
    const NonClassical nc[2] = {pb.nc_left, pb.nc_right};
    const char* side[2] = {"left", "right"};
    for (int e = 0; e < 2; ++e) {
        const std::size_t i = e == 0 ? 0 : static_cast<std::size_t>(n - 1);
        sys.labels[dof.slope(e)] = std::string("slope ") + side[e];
        sys.labels[dof.curvature(e)] = std::string("curvature ") + side[e];

        if (sup[e] == Support::free) {
            set_row(sys.k, dof.w(static_cast<int>(i)), wt.c, ei, wt.e, -g2 * ei, i);  // shear
            sys.boundary_dofs.push_back(dof.w(static_cast<int>(i)));
        } else {
            sys.eliminated_dofs.push_back(dof.w(static_cast<int>(i)));
        }
        if (sup[e] == Support::clamped) {
            sys.eliminated_dofs.push_back(dof.slope(e));
        } else {
            set_row(sys.k, dof.slope(e), wt.b, ei, wt.d, -g2 * ei, i);  // bending moment
            sys.boundary_dofs.push_back(dof.slope(e));
        }
        if (nc[e] == NonClassical::curvature_zero) {
            sys.eliminated_dofs.push_back(dof.curvature(e));
        } else {
            set_row(sys.k, dof.curvature(e), wt.c, g2 * ei, wt.c, 0.0, i);  // higher moment
            sys.boundary_dofs.push_back(dof.curvature(e));
        }
    }

    if (const auto* pl = std::get_if<PointLoad>(&pb.load)) {
        int end = 0;
        if (at_end(pl->x, pb.length, end)) {
            // shear row at the loaded free end
            sys.f[dof.w(end == 0 ? 0 : n - 1)] = end == 0 ? pl->p : -pl->p;
        } else {
            const int c = nearest_index(grid, pl->x);
            if (c == 0 || c == n - 1)
                throw std::invalid_argument("point load too close to an end for this grid");
            sys.f[dof.w(c)] = pl->p / quadrature_weights(grid)[static_cast<std::size_t>(c)];
        }
    }
    return sys;
}

EndReactions postprocess_reactions(const std::vector<double>& d, const ModifiedWeightSet& wt,
                                   const BeamProblem& pb, int end) {
    const std::size_t i = end == 0 ? 0 : wt.a.rows() - 1;
    const double ei = pb.ei, g2 = pb.g * pb.g;
    EndReactions r;
    r.shear = ei * dot_row(wt.c, i, d) - g2 * ei * dot_row(wt.e, i, d);
    r.moment = ei * dot_row(wt.b, i, d) - g2 * ei * dot_row(wt.d, i, d);
    r.higher_moment = g2 * ei * dot_row(wt.c, i, d);
    return r;
}

BeamReport nondimensionalize(const BeamSolution& s, const BeamProblem& pb) {
    BeamReport rep;
    const double L = pb.length;
    double amp = 1.0;
    double mscale, hscale, kscale;
    if (const auto* pl = std::get_if<PointLoad>(&pb.load)) {
        rep.point_load = true;
        amp = pl->p;
        mscale = 1.0 / (amp * L);
        hscale = 1.0 / (amp * L * L);
        kscale = pb.ei / (amp * L);
    } else {
        amp = std::get<UdlLoad>(pb.load).q;
        mscale = 1.0 / (amp * L * L);
        hscale = 1.0 / (amp * L * L * L);
        kscale = pb.ei / (amp * L * L);
    }
    const double wscale = rep.point_load ? 100.0 * pb.ei / (amp * L * L * L)
                                         : 100.0 * pb.ei / (amp * L * L * L * L);
    const auto& x = s.grid.points;
    rep.w_mid = wscale * lagrange_interpolate(x, s.w, 0.5 * L);
    rep.w_tip = wscale * s.w.back();
    rep.w_load = rep.point_load ? wscale * lagrange_interpolate(x, s.w, s.load_position) : rep.w_mid;
    rep.w_mid_plain = rep.w_mid / 100.0;
    rep.slope_tip = wscale * L * s.slope.back();
    rep.curvature_mid = kscale * lagrange_interpolate(x, s.curvature, 0.5 * L);
    rep.curvature_tip = kscale * s.curvature.back();
    rep.bm_left = mscale * s.left.moment;
    rep.bm_right = mscale * s.right.moment;
    rep.hm_left = hscale * s.left.higher_moment;
    rep.hm_right = hscale * s.right.higher_moment;
    return rep;
}

BeamSolution condense_and_solve(const AssembledSystem& sys, const BeamProblem& pb,
                                const ModifiedWeightSet& wt, const Grid1D& grid,
                                SolveRoute route, bool estimate_condition) {
    const SystemSolution sol = condense_and_solve(sys, route, estimate_condition);
    const int n = pb.n;
    BeamSolution out;
    out.grid = grid;
    out.dofs = sol.dofs;
    out.boundary_count = sol.boundary_count;
    out.rcond = sol.rcond;
    out.w.assign(sol.dofs.begin(), sol.dofs.begin() + n);
    out.slope.resize(static_cast<std::size_t>(n));
    out.curvature.resize(static_cast<std::size_t>(n));
    for (int i = 1; i < n - 1; ++i) {
        out.slope[i] = dot_row(wt.a, static_cast<std::size_t>(i), sol.dofs);
        out.curvature[i] = dot_row(wt.b, static_cast<std::size_t>(i), sol.dofs);
    }
    for (int e = 0; e < 2; ++e) {
        out.end_slopes[e] = sol.dofs[static_cast<std::size_t>(slope_col(n, e))];
        out.end_curvatures[e] = sol.dofs[static_cast<std::size_t>(curvature_col(n, e))];
        const std::size_t i = e == 0 ? 0 : static_cast<std::size_t>(n - 1);
        out.slope[i] = out.end_slopes[e];
        out.curvature[i] = out.end_curvatures[e];
    }
    out.left = postprocess_reactions(sol.dofs, wt, pb, 0);
    out.right = postprocess_reactions(sol.dofs, wt, pb, 1);
    if (const auto* pl = std::get_if<PointLoad>(&pb.load)) {
        int end = 0;
        out.load_position = at_end(pl->x, pb.length, end)
                                ? (end == 0 ? 0.0 : pb.length)
                                : grid.points[static_cast<std::size_t>(nearest_index(grid, pl->x))];
    } else {
        out.load_position = 0.5 * pb.length;
    }
    out.report = nondimensionalize(out, pb);
    return out;
}

BeamSolution solve_beam(const BeamProblem& pb, SolveRoute route, bool estimate_condition) {
    pb.validate();
    const Grid1D grid = gauss_lobatto_chebyshev(pb.n, pb.length);
    const ModifiedWeightSet wt = modified_matrices(grid);
    const AssembledSystem sys = assemble_beam(pb, wt, grid);
    return condense_and_solve(sys, pb, wt, grid, route, estimate_condition);
}

}  // namespace sgdqe
