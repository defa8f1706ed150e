#include "sgdqe/plate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sgdqe {

namespace {

bool on_boundary(int i, int n) { return i == 0 || i == n - 1; }

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// value at (x, y) of the tensor Lagrange interpolant of a grid field
double interpolate2d(const Grid1D& gx, const Grid1D& gy, const DenseMatrix& field, double x, double y) {
    std::vector<double> along_x(static_cast<std::size_t>(gx.n));
    for (int i = 0; i < gx.n; ++i) {
        std::vector<double> col(field.row(static_cast<std::size_t>(i)),
                                field.row(static_cast<std::size_t>(i)) + gy.n);
        along_x[i] = lagrange_interpolate(gy.points, col, y);
    }
    return lagrange_interpolate(gx.points, along_x, x);
}

}  // namespace

double PlateProblem::rigidity() const { return e * h * h * h / (12.0 * (1.0 - nu * nu)); }

void PlateProblem::validate() const {
    if (!(lx > 0.0) || !(ly > 0.0)) throw std::invalid_argument("plate sides must be positive");
    if (!(h > 0.0) || !(e > 0.0)) throw std::invalid_argument("thickness and modulus must be positive");
    if (!(nu > 0.0 && nu < 0.5)) throw std::invalid_argument("Poisson ratio must lie in (0, 0.5)");
    if (!(g >= 0.0) || !std::isfinite(g)) throw std::invalid_argument("gradient length must be >= 0");
    if (n < 5) throw std::invalid_argument("grid size must be >= 5");
    if (std::all_of(edges.begin(), edges.end(), [](EdgeType t) { return t == EdgeType::free; }))
        throw std::invalid_argument("unconstrained rigid motion: all edges free");
    if (const auto* pl = std::get_if<PlatePoint>(&load)) {
        if (!(pl->x > 0.0 && pl->x < lx && pl->y > 0.0 && pl->y < ly))
            throw std::invalid_argument("point load must lie inside the plate");
        const bool centred = std::fabs(pl->x - 0.5 * lx) <= 1e-12 * lx &&
                             std::fabs(pl->y - 0.5 * ly) <= 1e-12 * ly;
        if (centred && n % 2 == 0) throw std::invalid_argument("central point load needs an odd grid size");
    }
}

std::array<EdgeType, 4> parse_edges(const std::string& letters) {
    if (letters.size() != 4) throw std::invalid_argument("edge code needs four letters, got '" + letters + "'");
    std::array<EdgeType, 4> out{};
    for (int k = 0; k < 4; ++k) {
        switch (std::toupper(static_cast<unsigned char>(letters[static_cast<std::size_t>(k)]))) {
            case 'S': out[k] = EdgeType::simply_supported; break;
            case 'C': out[k] = EdgeType::clamped; break;
            case 'F': out[k] = EdgeType::free; break;
            case 'G': out[k] = EdgeType::guided; break;
            default:
                throw std::invalid_argument(std::string("unknown edge letter '") +
                                            letters[static_cast<std::size_t>(k)] + "'");
        }
    }
    return out;
}

std::string edges_to_string(const std::array<EdgeType, 4>& edges) {
    std::string s;
    for (EdgeType t : edges)
        s += t == EdgeType::simply_supported ? 'S' : t == EdgeType::clamped ? 'C' : t == EdgeType::free ? 'F' : 'G';
    return s;
}

bool PlateDofLayout::is_interior_grid(std::size_t dof) const {
    if (dof >= static_cast<std::size_t>(n * n)) return false;
    const int i = static_cast<int>(dof) / n, j = static_cast<int>(dof) % n;
    return !on_boundary(i, n) && !on_boundary(j, n);
}

std::string PlateDofLayout::label(std::size_t dof) const {
    const int d = static_cast<int>(dof);
    const int nn = n * n;
    if (d < nn) return "w(" + std::to_string(d / n) + "," + std::to_string(d % n) + ")";
    const int block = (d - nn) / (2 * n);
    const int rem = (d - nn) % (2 * n);
    static const char* names[] = {"w_x", "w_y", "w_xx", "w_yy"};
    const char* side = block % 2 == 0 ? (rem / n == 0 ? "x=0" : "x=lx") : (rem / n == 0 ? "y=0" : "y=ly");
    return std::string(names[block]) + "[" + side + "," + std::to_string(rem % n) + "]";
}

PlateOperators::PlateOperators(const PlateProblem& pb)
    : pb_(pb), d_(pb.rigidity()), layout_{pb.n},
      gx_(gauss_lobatto_chebyshev(pb.n, pb.lx)), gy_(gauss_lobatto_chebyshev(pb.n, pb.ly)),
      wx_(modified_matrices(gx_)), wy_(modified_matrices(gy_)) {
    if (pb.variant == PlateVariant::lh) hy_ = hermite_basis_matrices(gy_, 6);
    if (pb.variant != PlateVariant::lh || pb.lh_edge_lines != LhEdgeLines::corner) return;
    const int n = pb.n;
    const DenseMatrix a1 = lagrange_first_derivative(gy_);
    const DenseMatrix a2 = matmul(a1, a1);
    for (int side = 0; side < 2; ++side) {
        const EdgeType x_edge = pb.edges[side == 0 ? 0 : 2];
        for (int b = 0; b <= 6; ++b) {
            const DenseMatrix& h = hy_.order(b);
            DenseMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n + 4));
            for (int s = 0; s < n; ++s)
                for (int p = 0; p < n; ++p) m(s, p) = h(s, p);
            for (int end = 0; end < 2; ++end) {
                const EdgeType y_edge = pb.edges[end == 0 ? 1 : 3];
                if (x_edge == EdgeType::free && y_edge == EdgeType::free) continue;
                const int node = end == 0 ? 0 : n - 1;
                for (int s = 0; s < n; ++s) {
                    const double cs = h(s, slope_col(n, end)), cc = h(s, curvature_col(n, end));
                    for (int p = 0; p < n; ++p) m(s, p) += cs * a1(node, p) + cc * a2(node, p);
                }
            }
            edge_y_[side].push_back(std::move(m));
        }
    }
}

const DenseMatrix& PlateOperators::xmat(int a) const { return wx_.order(a); }

const DenseMatrix& PlateOperators::ymat(int b, int line) const {
    if (pb_.variant == PlateVariant::ll) return wy_.order(b);
    if (line < 0 || pb_.lh_edge_lines == LhEdgeLines::hermite) return hy_.order(b);
    if (pb_.lh_edge_lines == LhEdgeLines::lagrange) return wy_.order(b);
    return edge_y_[static_cast<std::size_t>(line)][static_cast<std::size_t>(b)];
}

std::vector<double> PlateOperators::sandwich(int p, int s, int a, int b) const {
    const int n = layout_.n;
    const DenseMatrix& x = xmat(a);
    std::vector<double> row(layout_.total(), 0.0);
    for (int q = 0; q < n + 4; ++q) {
        const double xv = x(p, q);
        if (xv == 0.0) continue;
        const DenseMatrix& y = ymat(b, q >= n ? (q - n) % 2 : -1);
        for (int r = 0; r < n + 4; ++r) {
            const double c = xv * y(s, r);
            if (c == 0.0) continue;
            if (q < n && r < n) {
                row[layout_.grid(q, r)] += c;
            } else if (q >= n && r < n) {
                const int t = q - n;
                row[t < 2 ? layout_.x_slope(t, r) : layout_.x_curvature(t - 2, r)] += c;
            } else if (q < n && r >= n) {
                const int t = r - n;
                row[t < 2 ? layout_.y_slope(t, q) : layout_.y_curvature(t - 2, q)] += c;
            }
            // q, r both extended: mixed corner derivative, not a dof
        }
    }
    return row;
}

DenseMatrix PlateOperators::apply(int a, int b, const std::vector<double>& dofs) const {
    const std::size_t n = static_cast<std::size_t>(layout_.n);
    const int ni = layout_.n;
    // nodal lines: W[q][r] for q < n over the extended r range
    DenseMatrix wn(n, n + 4);
    for (int q = 0; q < ni; ++q) {
        for (int r = 0; r < ni; ++r) wn(q, r) = dofs[layout_.grid(q, r)];
        wn(q, n + 0) = dofs[layout_.y_slope(0, q)];
        wn(q, n + 1) = dofs[layout_.y_slope(1, q)];
        wn(q, n + 2) = dofs[layout_.y_curvature(0, q)];
        wn(q, n + 3) = dofs[layout_.y_curvature(1, q)];
    }
    // edge lines: W[n+t][r] for r < n
    DenseMatrix we(4, n);
    for (int r = 0; r < ni; ++r) {
        we(0, r) = dofs[layout_.x_slope(0, r)];
        we(1, r) = dofs[layout_.x_slope(1, r)];
        we(2, r) = dofs[layout_.x_curvature(0, r)];
        we(3, r) = dofs[layout_.x_curvature(1, r)];
    }
    const DenseMatrix& x = xmat(a);
    std::vector<std::size_t> nodal(n), all(n);
    for (std::size_t i = 0; i < n; ++i) nodal[i] = all[i] = i;
    const DenseMatrix xn = x.select(all, nodal);
    const DenseMatrix yn = transpose(ymat(b, -1));
    DenseMatrix out = matmul(matmul(xn, wn), yn);
    // edge lines at x = 0 (slope, curvature) and x = lx may use different y bases
    for (std::size_t side = 0; side < 2; ++side) {
        const std::vector<std::size_t> ext{n + side, n + 2 + side}, rows{side, 2 + side}, cols(nodal);
        const DenseMatrix xe = x.select(all, ext);
        const DenseMatrix ye = transpose(ymat(b, static_cast<int>(side)).select(all, nodal));
        const DenseMatrix tail = matmul(matmul(xe, we.select(rows, cols)), ye);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(i, j) += tail(i, j);
    }
    return out;
}

std::vector<PlateOperators::Term> PlateOperators::interior_terms() const {
    const double d = d_, g2 = pb_.g * pb_.g;
    return {{d, 4, 0},       {2 * d, 2, 2},       {d, 0, 4},       {-g2 * d, 6, 0},
            {-3 * g2 * d, 4, 2}, {-3 * g2 * d, 2, 4}, {-g2 * d, 0, 6}};
}

std::vector<PlateOperators::Term> PlateOperators::terms(PlateForce f) const {
    const double d = d_, g2 = pb_.g * pb_.g, nu = pb_.nu;
    switch (f) {
        case PlateForce::vx:
            return {{-d, 3, 0}, {-(2 - nu) * d, 1, 2}, {g2 * d, 5, 0}, {(3 - nu) * g2 * d, 1, 4}, {3 * g2 * d, 3, 2}};
        case PlateForce::vy:
            return {{-d, 0, 3}, {-(2 - nu) * d, 2, 1}, {g2 * d, 0, 5}, {(3 - nu) * g2 * d, 4, 1}, {3 * g2 * d, 2, 3}};
        case PlateForce::mx:
            return {{-d, 2, 0}, {-nu * d, 0, 2}, {g2 * d, 4, 0}, {nu * g2 * d, 0, 4}, {(3 - nu) * g2 * d, 2, 2}};
        case PlateForce::my:
            return {{-d, 0, 2}, {-nu * d, 2, 0}, {g2 * d, 0, 4}, {nu * g2 * d, 4, 0}, {(3 - nu) * g2 * d, 2, 2}};
        case PlateForce::mbar_x:
            return {{-g2 * d, 3, 0}, {-nu * g2 * d, 1, 2}};
        case PlateForce::mbar_y:
            return {{-g2 * d, 0, 3}, {-nu * g2 * d, 2, 1}};
        case PlateForce::corner:
            return {{2 * d * (1 - nu), 1, 1}, {-2 * g2 * d * (1 - nu), 3, 1}, {-2 * g2 * d * (1 - nu), 1, 3}};
    }
    return {};
}

std::vector<double> PlateOperators::interior_row(int p, int s) const {
    std::vector<double> row(layout_.total(), 0.0);
    for (const Term& t : interior_terms()) {
        if (t.coef == 0.0) continue;
        const std::vector<double> r = sandwich(p, s, t.a, t.b);
        for (std::size_t i = 0; i < row.size(); ++i) row[i] += t.coef * r[i];
    }
    return row;
}

std::vector<double> PlateOperators::force_row(PlateForce f, int p, int s) const {
    std::vector<double> row(layout_.total(), 0.0);
    for (const Term& t : terms(f)) {
        if (t.coef == 0.0) continue;
        const std::vector<double> r = sandwich(p, s, t.a, t.b);
        for (std::size_t i = 0; i < row.size(); ++i) row[i] += t.coef * r[i];
    }
    return row;
}

DenseMatrix PlateOperators::apply_interior(const std::vector<double>& dofs) const {
    const std::size_t n = static_cast<std::size_t>(layout_.n);
    DenseMatrix out(n, n);
    for (const Term& t : interior_terms()) {
        if (t.coef == 0.0) continue;
        const DenseMatrix m = apply(t.a, t.b, dofs);
        for (std::size_t i = 0; i < n * n; ++i) out.data()[i] += t.coef * m.data()[i];
    }
    return out;
}

DenseMatrix PlateOperators::apply_force(PlateForce f, const std::vector<double>& dofs) const {
    const std::size_t n = static_cast<std::size_t>(layout_.n);
    DenseMatrix out(n, n);
    for (const Term& t : terms(f)) {
        if (t.coef == 0.0) continue;
        const DenseMatrix m = apply(t.a, t.b, dofs);
        for (std::size_t i = 0; i < n * n; ++i) out.data()[i] += t.coef * m.data()[i];
    }
    return out;
}

void apply_plate_bcs(AssembledSystem& sys, const PlateProblem& pb, const PlateOperators& ops) {
    const PlateDofLayout& L = ops.layout();
    const int n = L.n;
    std::vector<char> elim(L.total(), 0);

    auto x_edge = [&](int k, EdgeType t) {
        const int i = k == 0 ? 0 : n - 1;
        for (int j = 0; j < n; ++j) {
            const bool corner = on_boundary(j, n);
            const int kk = j == 0 ? 0 : 1;
            const bool supported = t == EdgeType::simply_supported || t == EdgeType::clamped;
            if (supported) {
                elim[L.grid(i, j)] = 1;
                elim[L.x_curvature(k, j)] = 1;
            }
            if (t == EdgeType::clamped || t == EdgeType::guided) elim[L.x_slope(k, j)] = 1;
            if (t == EdgeType::guided) elim[L.x_curvature(k, j)] = 1;
            if (corner && supported) {
                elim[L.y_slope(kk, i)] = 1;
                elim[L.y_curvature(kk, i)] = 1;
            }
        }
    };
    auto y_edge = [&](int k, EdgeType t) {
        const int j = k == 0 ? 0 : n - 1;
        for (int i = 0; i < n; ++i) {
            const bool corner = on_boundary(i, n);
            const int kk = i == 0 ? 0 : 1;
            const bool supported = t == EdgeType::simply_supported || t == EdgeType::clamped;
            if (supported) {
                elim[L.grid(i, j)] = 1;
                elim[L.y_curvature(k, i)] = 1;
            }
            if (t == EdgeType::clamped || t == EdgeType::guided) elim[L.y_slope(k, i)] = 1;
            if (t == EdgeType::guided) elim[L.y_curvature(k, i)] = 1;
            if (corner && supported) {
                elim[L.x_slope(kk, j)] = 1;
                elim[L.x_curvature(kk, j)] = 1;
            }
        }
    };
    x_edge(0, pb.edges[0]);
    y_edge(0, pb.edges[1]);
    x_edge(1, pb.edges[2]);
    y_edge(1, pb.edges[3]);

    auto put = [&](std::size_t dof, const std::vector<double>& row) {
        std::copy(row.begin(), row.end(), sys.k.row(dof));
        sys.f[dof] = 0.0;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool bx = on_boundary(i, n), by = on_boundary(j, n);
            if (!bx && !by) continue;
            const std::size_t dof = L.grid(i, j);
            if (elim[dof]) continue;
            if (bx && by)
                put(dof, ops.force_row(PlateForce::corner, i, j));
            else
                put(dof, ops.force_row(bx ? PlateForce::vx : PlateForce::vy, i, j));
        }
    for (int k = 0; k < 2; ++k) {
        const int edge = k == 0 ? 0 : n - 1;
        for (int t = 0; t < n; ++t) {
            if (!elim[L.x_slope(k, t)]) put(L.x_slope(k, t), ops.force_row(PlateForce::mx, edge, t));
            if (!elim[L.x_curvature(k, t)]) put(L.x_curvature(k, t), ops.force_row(PlateForce::mbar_x, edge, t));
            if (!elim[L.y_slope(k, t)]) put(L.y_slope(k, t), ops.force_row(PlateForce::my, t, edge));
            if (!elim[L.y_curvature(k, t)]) put(L.y_curvature(k, t), ops.force_row(PlateForce::mbar_y, t, edge));
        }
    }

    sys.boundary_dofs.clear();
    sys.domain_dofs.clear();
    sys.eliminated_dofs.clear();
    for (std::size_t d = 0; d < L.total(); ++d) {
        if (elim[d])
            sys.eliminated_dofs.push_back(d);
        else if (L.is_interior_grid(d))
            sys.domain_dofs.push_back(d);
        else
            sys.boundary_dofs.push_back(d);
    }
}

AssembledSystem assemble_plate(const PlateProblem& pb, const PlateOperators& ops) {
    pb.validate();
    const PlateDofLayout& L = ops.layout();
    const int n = L.n;
    if (n != pb.n) throw std::invalid_argument("operators were built for a different grid");
    AssembledSystem sys;
    sys.k = DenseMatrix(L.total(), L.total());
    sys.f.assign(L.total(), 0.0);
    sys.labels.resize(L.total());
    for (std::size_t d = 0; d < L.total(); ++d) sys.labels[d] = L.label(d);

    for (int i = 1; i < n - 1; ++i)
        for (int j = 1; j < n - 1; ++j) {
            const std::vector<double> row = ops.interior_row(i, j);
            std::copy(row.begin(), row.end(), sys.k.row(L.grid(i, j)));
            if (pb.is_udl()) sys.f[L.grid(i, j)] = std::get<PlateUdl>(pb.load).q;
        }

    // the row-by-row sums must agree with the matrix-product form
    {
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<double> v(L.total());
        for (double& x : v) x = u(rng);
        const DenseMatrix ref = ops.apply_interior(v);
        double scale = 0.0;
        for (double x : ref.data()) scale = std::max(scale, std::fabs(x));
        for (int i = 1; i < n - 1; ++i)
            for (int j = 1; j < n - 1; ++j) {
                const double* r = sys.k.row(L.grid(i, j));
                double s = 0.0;
                for (std::size_t c = 0; c < L.total(); ++c) s += r[c] * v[c];
                if (std::fabs(s - ref(i, j)) > 1e-9 * scale)
                    throw std::logic_error("plate interior row disagrees with operator product at " +
                                           L.label(L.grid(i, j)));
            }
    }

    if (const auto* pl = std::get_if<PlatePoint>(&pb.load)) {
        const int ci = nearest_index(ops.x_grid(), pl->x);
        const int cj = nearest_index(ops.y_grid(), pl->y);
        if (on_boundary(ci, n) || on_boundary(cj, n))
            throw std::invalid_argument("point load too close to an edge for this grid");
        const double wx = quadrature_weights(ops.x_grid())[static_cast<std::size_t>(ci)];
        const double wy = quadrature_weights(ops.y_grid())[static_cast<std::size_t>(cj)];
        sys.f[L.grid(ci, cj)] = pl->p / (wx * wy);
    }

    apply_plate_bcs(sys, pb, ops);
    return sys;
}

double PlateSolution::force(PlateForce f, int i, int j) const { return dot(ops->force_row(f, i, j), dofs); }

PlateReport nondimensionalize(const PlateSolution& s, const PlateProblem& pb) {
    PlateReport rep;
    const double d = pb.rigidity();
    const double lx = pb.lx;
    double amp, wscale, mscale, hscale, kscale;
    if (const auto* pl = std::get_if<PlatePoint>(&pb.load)) {
        rep.point_load = true;
        amp = pl->p;
        wscale = 100.0 * d / (amp * lx * lx);
        mscale = 1.0 / amp;
        hscale = 1.0 / (amp * lx);
        kscale = d / amp;
    } else {
        amp = std::get<PlateUdl>(pb.load).q;
        wscale = 100.0 * d / (amp * lx * lx * lx * lx);
        mscale = 1.0 / (amp * lx * lx);
        hscale = 1.0 / (amp * lx * lx * lx);
        kscale = d / (amp * lx * lx);
    }
    const Grid1D& gx = s.ops->x_grid();
    const Grid1D& gy = s.ops->y_grid();
    const int n = gx.n;
    DenseMatrix wm(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    double wmax = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            wm(i, j) = s.w[i][j];
            if (std::fabs(s.w[i][j]) > std::fabs(wmax)) wmax = s.w[i][j];
        }
    rep.w_center = wscale * interpolate2d(gx, gy, wm, 0.5 * pb.lx, 0.5 * pb.ly);
    std::vector<double> far_edge(s.w.back());
    rep.w_edge_mid = wscale * lagrange_interpolate(gy.points, far_edge, 0.5 * pb.ly);
    rep.w_max = wscale * wmax;

    const DenseMatrix mx = s.ops->apply_force(PlateForce::mx, s.dofs);
    const DenseMatrix mbx = s.ops->apply_force(PlateForce::mbar_x, s.dofs);
    std::vector<double> mline(mx.row(0), mx.row(0) + n), hline(mbx.row(0), mbx.row(0) + n);
    rep.bm_edge = mscale * lagrange_interpolate(gy.points, mline, 0.5 * pb.ly);
    rep.hm_edge = hscale * lagrange_interpolate(gy.points, hline, 0.5 * pb.ly);
    const DenseMatrix wxx = s.ops->apply(2, 0, s.dofs);
    rep.curvature_center = kscale * interpolate2d(gx, gy, wxx, 0.5 * pb.lx, 0.5 * pb.ly);
    return rep;
}

PlateSolution condense_and_solve_plate(const AssembledSystem& sys, const PlateProblem& pb,
                                       std::shared_ptr<const PlateOperators> ops, SolveRoute route,
                                       bool estimate_condition) {
    const SystemSolution sol = condense_and_solve(sys, route, estimate_condition);
    PlateSolution out;
    out.ops = std::move(ops);
    out.dofs = sol.dofs;
    out.boundary_count = sol.boundary_count;
    out.rcond = sol.rcond;
    const int n = pb.n;
    out.w.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.w[i][j] = sol.dofs[out.ops->layout().grid(i, j)];
    out.report = nondimensionalize(out, pb);
    return out;
}

PlateSolution solve_plate(const PlateProblem& pb, SolveRoute route, bool estimate_condition) {
    pb.validate();
    auto ops = std::make_shared<const PlateOperators>(pb);
    const AssembledSystem sys = assemble_plate(pb, *ops);
    return condense_and_solve_plate(sys, pb, ops, route, estimate_condition);
}

}  // namespace sgdqe
