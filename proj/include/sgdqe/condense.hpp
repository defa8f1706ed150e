#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sgdqe/linalg.hpp"

namespace sgdqe {

class InconsistentBc : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Square system over the full extended dof vector. Row i is the equation
// paired with dof i. Eliminated dofs are fixed to zero and their rows ignored;
// the retained dofs split into boundary and domain parts for condensation.
struct AssembledSystem {
    DenseMatrix k;
    std::vector<double> f;
    std::vector<std::size_t> boundary_dofs;
    std::vector<std::size_t> domain_dofs;
    std::vector<std::size_t> eliminated_dofs;
    std::vector<std::string> labels;  // optional, one per dof, for diagnostics

    std::size_t total_dofs() const { return f.size(); }
    std::size_t retained_count() const { return boundary_dofs.size() + domain_dofs.size(); }
};

enum class SolveRoute { condensed, direct };

struct SystemSolution {
    std::vector<double> dofs;  // full vector, eliminated entries exactly zero
    std::size_t boundary_count = 0;
    std::size_t domain_count = 0;
    double rcond = 0.0;  // estimate for the factored operator, 0 unless requested
    SolveRoute route = SolveRoute::condensed;
};

// Checks the partition and that every retained dof has a nonzero equation.
void validate_partition(const AssembledSystem& sys);

// Condensed route: Schur complement on the domain block, then back
// substitution for the boundary block. Direct route: one LU of the whole
// retained system. Rows are equilibrated by their max-norm first.
SystemSolution condense_and_solve(const AssembledSystem& sys,
                                  SolveRoute route = SolveRoute::condensed,
                                  bool estimate_condition = false);

}  // namespace sgdqe
