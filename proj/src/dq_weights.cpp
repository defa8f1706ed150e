#include "sgdqe/dq_weights.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace sgdqe {

namespace {

void check_distinct(const std::vector<double>& x) {
    if (x.size() < 2) throw std::invalid_argument("need at least two points");
    double lo = x[0], hi = x[0];
    for (double v : x) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double tol = 1e-14 * (hi - lo);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!(std::fabs(x[i] - x[j]) > tol))
                throw std::invalid_argument("duplicate grid points");
}

DenseMatrix padded(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    DenseMatrix out(n, n + 4);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

// sum over interior k of left(i,k) * right(k,j), j < n
void interior_product_row(const DenseMatrix& left, const DenseMatrix& right, std::size_t i,
                          DenseMatrix& out) {
    const std::size_t n = left.rows();
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 1; k + 1 < n; ++k) s += left(i, k) * right(k, j);
        out(i, j) = s;
    }
}

// Ascending-coefficient polynomial, just enough for the Hermite factors.
struct Poly {
    std::vector<double> c;
    double operator()(double y) const {
        double s = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) s = s * y + c[k];
        return s;
    }
    Poly derivative() const {
        Poly d;
        for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * static_cast<double>(k));
        if (d.c.empty()) d.c.push_back(0.0);
        return d;
    }
};

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

Poly operator*(double s, Poly p) {
    for (double& v : p.c) v *= s;
    return p;
}

Poly linear(double root) { return Poly{{-root, 1.0}}; }

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

const DenseMatrix& ModifiedWeightSet::order(int k) const {
    switch (k) {
        case 0: return identity_ext;
        case 1: return a;
        case 2: return b;
        case 3: return c;
        case 4: return d;
        case 5: return e;
        case 6: return f;
        default: throw std::out_of_range("derivative order must be 0..6");
    }
}

const DenseMatrix& HermiteBasisSet::order(int k) const {
    if (k < 0 || k > max_order) throw std::out_of_range("hermite order not built");
    return gamma[static_cast<std::size_t>(k)];
}

DenseMatrix lagrange_first_derivative(const std::vector<double>& x) {
    check_distinct(x);
    const std::size_t n = x.size();
    std::vector<double> m(n, 1.0);  // prod_{k != i} (x_i - x_k)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) m[i] *= x[i] - x[k];
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double diag = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            a(i, j) = m[i] / ((x[i] - x[j]) * m[j]);
            diag += 1.0 / (x[i] - x[j]);
        }
        a(i, i) = diag;
    }
    return a;
}

DenseMatrix lagrange_first_derivative(const Grid1D& grid) {
    return lagrange_first_derivative(grid.points);
}

DiffMatrixSet conventional_matrices(const DenseMatrix& a) {
    DiffMatrixSet s;
    s.a = a;
    s.b = matmul(a, a);
    s.c = matmul(s.b, a);
    s.d = matmul(s.b, s.b);
    return s;
}

ModifiedWeightSet modified_matrices(const Grid1D& grid) {
    const int n = grid.n;
    if (n < 5) throw std::invalid_argument("modified weights need n >= 5");
    const DenseMatrix a = lagrange_first_derivative(grid);
    const DenseMatrix b = matmul(a, a);
    const std::size_t last = static_cast<std::size_t>(n - 1);
    const std::size_t ends[2] = {0, last};

    ModifiedWeightSet w;
    w.identity_ext = padded(DenseMatrix::identity(static_cast<std::size_t>(n)));
    w.a = padded(a);

    // second order: boundary rows route the end slopes through their own columns
    w.b = padded(b);
    for (int e = 0; e < 2; ++e) {
        const std::size_t i = ends[e];
        interior_product_row(a, a, i, w.b);
        for (int k = 0; k < 4; ++k) w.b(i, n + k) = 0.0;
        w.b(i, slope_col(n, 0)) = a(i, 0);
        w.b(i, slope_col(n, 1)) = a(i, last);
    }

    // third order: boundary rows take the end curvatures from their columns
    w.c = padded(matmul(b, a));
    for (int e = 0; e < 2; ++e) {
        const std::size_t i = ends[e];
        interior_product_row(a, b, i, w.c);
        for (int k = 0; k < 4; ++k) w.c(i, n + k) = 0.0;
        w.c(i, curvature_col(n, 0)) = a(i, 0);
        w.c(i, curvature_col(n, 1)) = a(i, last);
    }

    w.d = matmul(b, w.b);

    // helper: interior rows copy d (all columns), boundary rows use end curvatures
    w.v = w.d;
    for (int e = 0; e < 2; ++e) {
        const std::size_t i = ends[e];
        interior_product_row(b, b, i, w.v);
        for (int k = 0; k < 4; ++k) w.v(i, n + k) = 0.0;
        w.v(i, curvature_col(n, 0)) = b(i, 0);
        w.v(i, curvature_col(n, 1)) = b(i, last);
    }
    w.e = matmul(a, w.v);
    w.f = matmul(b, w.v);
    return w;
}

HermiteBasisSet hermite_basis_matrices(const Grid1D& grid, int max_order) {
    if (max_order < 0 || max_order > 6)
        throw std::invalid_argument("hermite max_order must be in 0..6");
    if (grid.n < 5) throw std::invalid_argument("hermite basis needs n >= 5");
    const int n = grid.n;
    const std::vector<double>& y = grid.points;
    const DenseMatrix a = lagrange_first_derivative(grid);

    // powers[m](i, p) = m-th derivative of L_p at y_i
    std::vector<DenseMatrix> powers;
    powers.push_back(DenseMatrix::identity(static_cast<std::size_t>(n)));
    for (int m = 1; m <= max_order; ++m) powers.push_back(matmul(powers.back(), a));

    // k-th derivative of L_p(y) * q(y) at every node (Leibniz rule)
    auto product_derivative = [&](int p, const Poly& q, int k) {
        std::vector<Poly> qd{q};
        for (int m = 1; m <= k; ++m) qd.push_back(qd.back().derivative());
        std::vector<double> out(static_cast<std::size_t>(n), 0.0);
        for (int m = 0; m <= k; ++m) {
            const double bc = binomial(k, m);
            const Poly& dq = qd[static_cast<std::size_t>(k - m)];
            for (int i = 0; i < n; ++i) out[i] += bc * powers[m](i, p) * dq(y[i]);
        }
        return out;
    };

    HermiteBasisSet h;
    h.max_order = max_order;
    const double y0 = y.front(), yn = y.back();
    for (int k = 0; k <= max_order; ++k) {
        DenseMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n + 4));
        auto put = [&](int col, const std::vector<double>& v) {
            for (int i = 0; i < n; ++i) g(i, col) = v[i];
        };
        for (int p = 1; p < n - 1; ++p) {
            const double s = (y[p] - y0) * (y[p] - yn);
            Poly q = (1.0 / (s * s)) * (linear(y0) * linear(y0) * linear(yn) * linear(yn));
            put(p, product_derivative(p, q, k));
        }
        for (int side = 0; side < 2; ++side) {
            const int p = side == 0 ? 0 : n - 1;
            const int o = side == 0 ? n - 1 : 0;
            const double d = y[p] - y[o];
            const double l1 = a(p, p);
            const double l2 = [&] {
                double s = 0.0;
                for (int j = 0; j < n; ++j) s += a(p, j) * a(j, p);
                return s;
            }();
            const Poly tp = linear(y[p]);
            const Poly to = linear(y[o]);

            std::vector<double> curv =
                product_derivative(p, (1.0 / (2.0 * d * d)) * (tp * tp * to * to), k);
            std::vector<double> slope =
                product_derivative(p, (1.0 / (d * d)) * (tp * to * to), k);
            const double cs = 2.0 * l1 + 4.0 / d;
            for (int i = 0; i < n; ++i) slope[i] -= cs * curv[i];
            std::vector<double> value = product_derivative(p, (1.0 / (d * d)) * (to * to), k);
            const double c1 = l1 + 2.0 / d;
            const double c2 = l2 + 4.0 * l1 / d + 2.0 / (d * d);
            for (int i = 0; i < n; ++i) value[i] -= c1 * slope[i] + c2 * curv[i];

            put(p, value);
            put(slope_col(n, side), slope);
            put(curvature_col(n, side), curv);
        }
        // the grid is mirror-symmetric, so average out round-off that breaks it
        const double parity = k % 2 ? -1.0 : 1.0;
        auto mirror = [n](int c) {
            if (c < n) return n - 1 - c;
            return c == slope_col(n, 0) ? slope_col(n, 1)
                   : c == slope_col(n, 1) ? slope_col(n, 0)
                   : c == curvature_col(n, 0) ? curvature_col(n, 1)
                                              : curvature_col(n, 0);
        };
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < n + 4; ++c) {
                const int mi = n - 1 - i, mc = mirror(c);
                if (mi < i || (mi == i && mc < c)) continue;
                const double s = (c == slope_col(n, 0) || c == slope_col(n, 1)) ? -parity : parity;
                const double avg = 0.5 * (g(i, c) + s * g(mi, mc));
                g(i, c) = avg;
                g(mi, mc) = s * avg;
            }
        h.gamma[static_cast<std::size_t>(k)] = std::move(g);
    }
    return h;
}

std::vector<double> extended_dofs(const std::vector<double>& values, double d1_first,
                                  double d1_last, double d2_first, double d2_last) {
    std::vector<double> v(values);
    v.push_back(d1_first);
    v.push_back(d1_last);
    v.push_back(d2_first);
    v.push_back(d2_last);
    return v;
}

void write_matrix_csv(std::ostream& os, const DenseMatrix& m) {
    char buf[40];
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.16e", m(i, j));
            if (j) os << ',';
            os << buf;
        }
        os << '\n';
    }
}

void write_matrix_csv(const std::string& path, const DenseMatrix& m) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    write_matrix_csv(f, m);
}

}  // namespace sgdqe
