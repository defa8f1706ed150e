#include "sgdqe/beam_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sgdqe {

namespace {

// k-th derivative of x^p
double mono(double x, int p, int k) {
    if (k > p) return 0.0;
    double c = 1.0;
    for (int i = 0; i < k; ++i) c *= p - i;
    return c * std::pow(x, p - k);
}

}  // namespace

AnalyticalBeamSolution::AnalyticalBeamSolution(const BeamProblem& pb)
    : length_(pb.length), ei_(pb.ei), g_(pb.g), sup_{pb.left, pb.right}, nc_{pb.nc_left, pb.nc_right} {
    pb.validate();
    const auto* udl = std::get_if<UdlLoad>(&pb.load);
    if (!udl) throw std::invalid_argument("analytical solution covers the udl case only");
    q_ = udl->q;
    form_ = g_ >= 1e-3 * length_ ? Form::gradient : Form::classical;

    const std::vector<Condition> conds = conditions();
    const std::size_t m = conds.size();
    DenseMatrix k(m, m);
    std::vector<double> rhs(m);
    for (std::size_t r = 0; r < m; ++r) {
        const Condition& c = conds[r];
        auto entry = [&](int kind, int j) {
            switch (kind) {
                case 4: return basis(j, c.x, 2) - g_ * g_ * basis(j, c.x, 4);
                case 5: return basis(j, c.x, 3) - g_ * g_ * basis(j, c.x, 5);
                default: return basis(j, c.x, kind);
            }
        };
        auto part = [&](int kind) {
            switch (kind) {
                case 4: return particular(c.x, 2) - g_ * g_ * particular(c.x, 4);
                case 5: return particular(c.x, 3) - g_ * g_ * particular(c.x, 5);
                default: return particular(c.x, kind);
            }
        };
        for (std::size_t j = 0; j < m; ++j) k(r, j) = entry(c.kind, static_cast<int>(j));
        rhs[r] = -part(c.kind);
        double scale = 0.0;
        for (std::size_t j = 0; j < m; ++j) scale = std::max(scale, std::fabs(k(r, j)));
        for (std::size_t j = 0; j < m; ++j) k(r, j) /= scale;
        rhs[r] /= scale;
    }
    const std::vector<double> sol = lu_solve(k, rhs);
    std::copy(sol.begin(), sol.end(), c_.begin());
}

std::vector<AnalyticalBeamSolution::Condition> AnalyticalBeamSolution::conditions() const {
    std::vector<Condition> out;
    for (int e = 0; e < 2; ++e) {
        const double x = e == 0 ? 0.0 : length_;
        const bool classical = form_ == Form::classical;
        switch (sup_[e]) {
            case Support::simply_supported:
                out.push_back({x, 0});
                out.push_back({x, classical ? 2 : 4});
                break;
            case Support::clamped:
                out.push_back({x, 0});
                out.push_back({x, 1});
                break;
            case Support::free:
                out.push_back({x, classical ? 3 : 5});
                out.push_back({x, classical ? 2 : 4});
                break;
        }
        if (!classical) out.push_back({x, nc_[e] == NonClassical::curvature_zero ? 2 : 3});
    }
    return out;
}

double AnalyticalBeamSolution::basis(int j, double x, int k) const {
    switch (j) {
        case 0: return mono(x, 3, k);
        case 1: return mono(x, 2, k);
        case 2: return mono(x, 1, k);
        case 3: return mono(x, 0, k);
        case 4: return (k % 2 ? -1.0 : 1.0) * std::pow(g_, 4 - k) * std::exp(-x / g_);
        case 5: return std::pow(g_, 4 - k) * std::exp(-(length_ - x) / g_);
        default: return 0.0;
    }
}

double AnalyticalBeamSolution::particular(double x, int k) const {
    return q_ / (24.0 * ei_) * mono(x, 4, k);
}

double AnalyticalBeamSolution::derivative(double x, int k) const {
    if (x < -1e-12 * length_ || x > length_ * (1.0 + 1e-12))
        throw std::invalid_argument("x outside the beam");
    if (k < 0 || k > 6) throw std::invalid_argument("derivative order must be 0..6");
    const int nb = form_ == Form::gradient ? 6 : 4;
    double s = particular(x, k);
    for (int j = 0; j < nb; ++j) s += c_[static_cast<std::size_t>(j)] * basis(j, x, k);
    return s;
}

OracleState AnalyticalBeamSolution::evaluate(double x) const {
    OracleState st;
    double d[6];
    for (int k = 0; k < 6; ++k) d[k] = derivative(x, k);
    const double g2 = g_ * g_;
    st.w = d[0];
    st.slope = d[1];
    st.curvature = d[2];
    st.shear = ei_ * (d[3] - g2 * d[5]);
    st.moment = ei_ * (d[2] - g2 * d[4]);
    st.higher_moment = g2 * ei_ * d[3];
    return st;
}

double AnalyticalBeamSolution::condition_value(const Condition& c) const {
    const double g2 = g_ * g_;
    switch (c.kind) {
        case 4: return derivative(c.x, 2) - g2 * derivative(c.x, 4);
        case 5: return derivative(c.x, 3) - g2 * derivative(c.x, 5);
        default: return derivative(c.x, c.kind);
    }
}

double AnalyticalBeamSolution::bc_residual() const {
    double worst = 0.0;
    for (const Condition& c : conditions()) {
        const int order = c.kind == 4 ? 2 : c.kind == 5 ? 3 : c.kind;
        const double natural = std::fabs(q_) * std::pow(length_, 4 - order) / ei_;
        worst = std::max(worst, std::fabs(condition_value(c)) / natural);
    }
    return worst;
}

double AnalyticalBeamSolution::equation_residual(double x) const {
    const double lhs = ei_ * (derivative(x, 4) - g_ * g_ * derivative(x, 6));
    return (lhs - q_) / q_;
}

AnalyticalBeamSolution solve_constants(const BeamProblem& problem) {
    return AnalyticalBeamSolution(problem);
}

HyperbolicSystem hyperbolic_system(Support ends, double L, double ei, double g, double q) {
    if (ends == Support::free) throw std::invalid_argument("hyperbolic system: pinned or clamped only");
    const double g2 = g * g, g3 = g2 * g, g4 = g2 * g2;
    const double sh = std::sinh(L / g), ch = std::cosh(L / g);
    HyperbolicSystem s;
    if (ends == Support::simply_supported) {
        s.k = DenseMatrix{{0, 0, 0, 1, 0, g4},
                          {0, 2, 0, 0, 0, 0},
                          {L * L * L, L * L, L, 1, g4 * sh, g4 * ch},
                          {6 * L, 2, 0, 0, 0, 0},
                          {0, 2, 0, 0, 0, g2},
                          {6 * L, 2, 0, 0, g2 * sh, g2 * ch}};
        s.f = {0.0, g2 * q / ei, -q * std::pow(L, 4) / (24 * ei), g2 * q / ei - q * L * L / (2 * ei), 0.0,
               -q * L * L / (2 * ei)};
    } else {
        s.k = DenseMatrix{{0, 0, 0, 1, 0, g4},
                          {0, 0, 1, 0, g3, 0},
                          {L * L * L, L * L, L, 1, g4 * sh, g4 * ch},
                          {3 * L * L, 2 * L, 1, 0, g3 * ch, g3 * sh},
                          {0, 2, 0, 0, 0, g2},
                          {6 * L, 2, 0, 0, g2 * sh, g2 * ch}};
        s.f = {0.0, 0.0, -q * std::pow(L, 4) / (24 * ei), -q * L * L * L / (6 * ei), 0.0,
               -q * L * L / (2 * ei)};
    }
    return s;
}

double hyperbolic_derivative(const std::vector<double>& c, double g, double ei, double q, double x,
                             int k) {
    const double gk = std::pow(g, 4 - k);
    const double sh = std::sinh(x / g), ch = std::cosh(x / g);
    const bool odd = k % 2 == 1;
    return c[0] * mono(x, 3, k) + c[1] * mono(x, 2, k) + c[2] * mono(x, 1, k) + c[3] * mono(x, 0, k) +
           c[4] * gk * (odd ? ch : sh) + c[5] * gk * (odd ? sh : ch) + q / (24 * ei) * mono(x, 4, k);
}

}  // namespace sgdqe
