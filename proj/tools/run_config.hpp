#pragma once

#include <iosfwd>
#include <string>

#include "sgdqe/export.hpp"

namespace sgdqe::cli {

enum class ProblemKind { beam, plate };
enum class OutputFormat { csv, json };

struct RunConfig {
    ProblemKind kind = ProblemKind::beam;
    BeamProblem beam;
    PlateProblem plate;
    OutputFormat format = OutputFormat::csv;
    std::string out;  // empty: standard output
    int verbosity = 0;

    // Problem ranges and supports; throws std::invalid_argument.
    void validate() const;
};

json to_json(const RunConfig& c);
// Keys "format", "out" and "verbosity" are run settings; everything else is
// handed to the beam or plate parser picked by "problem".
RunConfig run_config_from_json(const json& j);
bool equivalent(const RunConfig& a, const RunConfig& b);

// Exit codes.
constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_solver = 3;

int run(const RunConfig& c, std::ostream& out, std::ostream& err);

// Whole command line: subcommands beam, plate, reproduce, convergence.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgdqe::cli
