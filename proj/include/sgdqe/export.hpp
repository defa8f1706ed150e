#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include <json.hpp>

#include "sgdqe/beam.hpp"
#include "sgdqe/plate.hpp"

namespace sgdqe {

using json = nlohmann::json;

// Problem <-> JSON. Missing keys take the struct defaults; unknown values
// throw std::invalid_argument. The gradient length may be given as "g" or as
// "g_over_l" (relative to the beam length or to lx).
json to_json(const BeamProblem& p);
json to_json(const PlateProblem& p);
BeamProblem beam_problem_from_json(const json& j);
PlateProblem plate_problem_from_json(const json& j);

json to_json(const BeamReport& r);
json to_json(const PlateReport& r);

Support parse_support(const std::string& s);
// One support for both ends, or a two-letter code such as "cf" (left, right).
std::pair<Support, Support> parse_end_supports(const std::string& s);
NonClassical parse_nonclassical(const std::string& s);
PlateVariant parse_variant(const std::string& s);
LhEdgeLines parse_edge_lines(const std::string& s);
const char* to_string(PlateVariant v);
const char* to_string(LhEdgeLines l);

// CSV cells carry 6 significant digits.
std::string csv_number(double v);

// Field export. CSV: one '# ' line with the JSON header, then a header row
// and one row per grid point. JSON: the header plus full-precision fields.
void write_beam_csv(std::ostream& os, const BeamProblem& p, const BeamSolution& s);
json beam_solution_json(const BeamProblem& p, const BeamSolution& s);
void write_plate_csv(std::ostream& os, const PlateProblem& p, const PlateSolution& s);
json plate_solution_json(const PlateProblem& p, const PlateSolution& s);

}  // namespace sgdqe
