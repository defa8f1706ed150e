#include "sgdqe/condense.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sgdqe/kernels.hpp"

namespace sgdqe {

namespace {

std::string label_of(const AssembledSystem& sys, std::size_t i) {
    if (i < sys.labels.size() && !sys.labels[i].empty()) return sys.labels[i];
    return "dof " + std::to_string(i);
}

template <class F>
auto with_context(const char* block, F&& fn) {
    try {
        return fn();
    } catch (const SingularMatrix& e) {
        throw SingularMatrix(std::string(block) + ": " + e.what());
    }
}

}  // namespace

void validate_partition(const AssembledSystem& sys) {
    const std::size_t n = sys.total_dofs();
    if (sys.k.rows() != n || sys.k.cols() != n)
        throw InconsistentBc("system matrix does not match the dof count");
    std::vector<int> seen(n, 0);
    for (auto* part : {&sys.boundary_dofs, &sys.domain_dofs, &sys.eliminated_dofs})
        for (std::size_t i : *part) {
            if (i >= n) throw InconsistentBc("dof index out of range");
            ++seen[i];
        }
    std::ostringstream bad;
    int nbad = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (seen[i] != 1) {
            bad << (nbad++ ? ", " : "") << label_of(sys, i)
                << (seen[i] == 0 ? " (unassigned)" : " (assigned twice)");
        }
    if (nbad) throw InconsistentBc("dof partition broken: " + bad.str());

    std::vector<std::size_t> keep(sys.boundary_dofs);
    keep.insert(keep.end(), sys.domain_dofs.begin(), sys.domain_dofs.end());
    for (std::size_t i : keep) {
        double m = 0.0;
        for (std::size_t j : keep) m = std::max(m, std::fabs(sys.k(i, j)));
        if (m == 0.0) {
            bad << (nbad++ ? ", " : "") << label_of(sys, i);
        }
    }
    if (nbad) throw InconsistentBc("retained dofs without an equation: " + bad.str());
}

SystemSolution condense_and_solve(const AssembledSystem& sys, SolveRoute route,
                                  bool estimate_condition) {
    validate_partition(sys);
    const auto& bd = sys.boundary_dofs;
    const auto& dd = sys.domain_dofs;

    std::vector<std::size_t> keep(bd);
    keep.insert(keep.end(), dd.begin(), dd.end());

    DenseMatrix kr = sys.k.select(keep, keep);
    std::vector<double> fr(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) fr[i] = sys.f[keep[i]];
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const double m = kernels::max_abs(kr.cols(), kr.row(i));
        kernels::scale(kr.cols(), 1.0 / m, kr.row(i));
        fr[i] /= m;
    }

    SystemSolution out;
    out.route = route;
    out.boundary_count = bd.size();
    out.domain_count = dd.size();
    out.dofs.assign(sys.total_dofs(), 0.0);
    std::vector<double> x(keep.size());

    const std::size_t nb = bd.size();
    const std::size_t nd = dd.size();
    if (route == SolveRoute::direct || nb == 0 || nd == 0) {
        LuFactorization lu = with_context("retained system", [&] { return LuFactorization(kr); });
        x = lu.solve(fr);
        if (estimate_condition) out.rcond = lu.rcond_estimate();
    } else {
        std::vector<std::size_t> ib(nb), id(nd);
        for (std::size_t i = 0; i < nb; ++i) ib[i] = i;
        for (std::size_t i = 0; i < nd; ++i) id[i] = nb + i;
        const DenseMatrix kbb = kr.select(ib, ib);
        const DenseMatrix kbd = kr.select(ib, id);
        const DenseMatrix kdb = kr.select(id, ib);
        DenseMatrix schur = kr.select(id, id);
        std::vector<double> fb(fr.begin(), fr.begin() + static_cast<long>(nb));
        std::vector<double> fd(fr.begin() + static_cast<long>(nb), fr.end());

        LuFactorization lbb = with_context("boundary block k_bb", [&] { return LuFactorization(kbb); });
        const DenseMatrix x_bd = lbb.solve(kbd);   // k_bb^-1 k_bd
        const std::vector<double> y_b = lbb.solve(fb);  // k_bb^-1 f_b
        const DenseMatrix corr = matmul(kdb, x_bd);
        for (std::size_t i = 0; i < nd; ++i)
            kernels::axpy(nd, -1.0, corr.row(i), schur.row(i));
        const std::vector<double> cf = matvec(kdb, y_b);
        for (std::size_t i = 0; i < nd; ++i) fd[i] -= cf[i];

        LuFactorization ls = with_context("condensed domain system", [&] { return LuFactorization(schur); });
        const std::vector<double> xd = ls.solve(fd);
        if (estimate_condition) out.rcond = ls.rcond_estimate();
        const std::vector<double> back = matvec(x_bd, xd);
        for (std::size_t i = 0; i < nb; ++i) x[i] = y_b[i] - back[i];
        for (std::size_t i = 0; i < nd; ++i) x[nb + i] = xd[i];
    }
    for (std::size_t i = 0; i < keep.size(); ++i) out.dofs[keep[i]] = x[i];
    return out;
}

}  // namespace sgdqe
