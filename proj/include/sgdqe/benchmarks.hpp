#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgdqe/export.hpp"

namespace sgdqe {

// One tabulated benchmark value and how to recompute it.
struct ReferenceCell {
    std::string table;     // "table1" .. "table9"
    std::string id;
    std::string method;    // "dq" or "oracle"
    json config;           // beam or plate problem, as accepted by the *_from_json parsers
    std::string quantity;  // report field name
    double factor = 1.0;   // computed value is multiplied by this before comparison
    bool magnitude = false;
    double reference = 0.0;
    double abs_tol = 0.0;  // 0 means unused
    double rel_tol = 0.0;
    bool informational = false;
    std::string note;
};

struct CellResult {
    ReferenceCell cell;
    double computed = 0.0;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
    bool pass = false;
    std::string error;  // set when the solver threw
};

// SGDQE_REFERENCE_DATA overrides the built-in location.
std::string default_reference_path();
std::vector<ReferenceCell> load_reference_cells(const std::string& path);
std::vector<std::string> table_ids(const std::vector<ReferenceCell>& cells);

double compute_quantity(const ReferenceCell& cell);
bool within_tolerance(const ReferenceCell& cell, double computed);

// Cells run concurrently; results come back in file order.
std::vector<CellResult> reproduce_table(const std::vector<ReferenceCell>& all, const std::string& table);
void write_reproduce_csv(std::ostream& os, const std::vector<CellResult>& results);

// Error against the closed form (beam udl) or against the largest-N run.
struct ConvergencePoint {
    int n = 0;
    double value = 0.0;
    double error = 0.0;  // relative
};
struct ConvergenceSeries {
    std::string reference;  // "oracle" or "self"
    double reference_value = 0.0;
    std::vector<ConvergencePoint> points;
};
ConvergenceSeries beam_convergence(const BeamProblem& problem, const std::vector<int>& ns);
ConvergenceSeries plate_convergence(const PlateProblem& problem, const std::vector<int>& ns);
void write_convergence_csv(std::ostream& os, const ConvergenceSeries& series);

}  // namespace sgdqe
