#pragma once

#include <array>
#include <vector>

#include "sgdqe/beam.hpp"
#include "sgdqe/linalg.hpp"

namespace sgdqe {

struct OracleState {
    double w = 0.0, slope = 0.0, curvature = 0.0;
    double shear = 0.0, moment = 0.0, higher_moment = 0.0;
};

// Closed-form udl solution of EI(w'''' - g^2 w^(6)) = q.
//
//   w = c0 x^3 + c1 x^2 + c2 x + c3 + c4 g^4 e^{-x/g} + c5 g^4 e^{-(L-x)/g}
//       + q x^4 / (24 EI)
//
// The decaying exponentials replace sinh/cosh(x/g), which overflow for small
// g. Below g = 1e-3 L the boundary layers are dropped and the classical
// fourth-order solution (c4 = c5 = 0, four conditions) is used.
class AnalyticalBeamSolution {
public:
    enum class Form { gradient, classical };

    explicit AnalyticalBeamSolution(const BeamProblem& problem);

    Form form() const { return form_; }
    const std::array<double, 6>& constants() const { return c_; }

    // k-th derivative of w, k = 0..6
    double derivative(double x, int k) const;
    OracleState evaluate(double x) const;

    // Largest boundary-condition residual, scaled by the natural magnitude of
    // each quantity (qL^4/EI for w, qL^3/EI for slopes, and so on).
    double bc_residual() const;
    // EI(w'''' - g^2 w^(6)) - q at x, divided by q.
    double equation_residual(double x) const;

private:
    struct Condition {
        double x;
        int kind;  // 0..3: w..w''', 4: moment, 5: shear
    };
    std::vector<Condition> conditions() const;
    double condition_value(const Condition& c) const;
    double basis(int j, double x, int k) const;
    double particular(double x, int k) const;

    double length_, ei_, g_, q_;
    Support sup_[2];
    NonClassical nc_[2];
    Form form_;
    std::array<double, 6> c_{};
};

// Throws std::invalid_argument for point loads or out-of-range x.
AnalyticalBeamSolution solve_constants(const BeamProblem& problem);

// The textbook 6x6 system in the sinh/cosh basis
//   w = c1 x^3 + c2 x^2 + c3 x + c4 + c5 g^4 sinh(x/g) + c6 g^4 cosh(x/g) + q x^4/(24EI)
// for simply supported or clamped ends (both ends alike, w'' = 0 at both).
// Usable while L/g stays moderate.
struct HyperbolicSystem {
    DenseMatrix k;
    std::vector<double> f;
};
HyperbolicSystem hyperbolic_system(Support ends, double length, double ei, double g, double q);
double hyperbolic_derivative(const std::vector<double>& c, double g, double ei, double q, double x,
                             int k);

}  // namespace sgdqe
