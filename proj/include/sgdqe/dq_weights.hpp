#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "sgdqe/grid.hpp"
#include "sgdqe/linalg.hpp"

namespace sgdqe {

// Extended dof layout for one direction: n nodal values, then
// [slope at first, slope at last, curvature at first, curvature at last].
inline int slope_col(int n, int end) { return n + end; }
inline int curvature_col(int n, int end) { return n + 2 + end; }
inline int extended_size(int n) { return n + 4; }

struct DiffMatrixSet {
    DenseMatrix a, b, c, d;
};

// Derivative matrices of orders 1..6 acting on the extended dof vector,
// each n x (n+4). order(0) is [I | 0].
struct ModifiedWeightSet {
    DenseMatrix a, b, c, d, e, f;
    DenseMatrix v;  // fifth-order helper used to build e and f
    DenseMatrix identity_ext;
    const DenseMatrix& order(int k) const;
};

// gamma[k], k = 0..max_order, n x (n+4): k-th derivative of the C2 Hermite
// basis evaluated at the grid points. Orders above max_order are left empty.
struct HermiteBasisSet {
    int max_order = 0;
    std::array<DenseMatrix, 7> gamma;
    const DenseMatrix& order(int k) const;
};

// Works for any distinct points (n >= 2).
DenseMatrix lagrange_first_derivative(const std::vector<double>& x);
DenseMatrix lagrange_first_derivative(const Grid1D& grid);

DiffMatrixSet conventional_matrices(const DenseMatrix& a);

ModifiedWeightSet modified_matrices(const Grid1D& grid);

HermiteBasisSet hermite_basis_matrices(const Grid1D& grid, int max_order = 6);

// [values..., d1_first, d1_last, d2_first, d2_last]
std::vector<double> extended_dofs(const std::vector<double>& values, double d1_first,
                                  double d1_last, double d2_first, double d2_last);

// Row-major CSV, 17 significant digits, scientific notation.
void write_matrix_csv(std::ostream& os, const DenseMatrix& m);
void write_matrix_csv(const std::string& path, const DenseMatrix& m);

}  // namespace sgdqe
