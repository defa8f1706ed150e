#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sgdqe/benchmarks.hpp"
#include "sgdqe/export.hpp"

using namespace sgdqe;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') quoted = !quoted;
        else if (c == ',' && !quoted) { out.push_back(cur); cur.clear(); }
        else cur += c;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

TEST(Export, CsvNumbers) {
    EXPECT_EQ(csv_number(0.0), "0");
    EXPECT_EQ(csv_number(-0.0), "0");
    EXPECT_EQ(csv_number(1.5), "1.5");
    EXPECT_EQ(csv_number(1.0 / 3.0), "0.333333");
    EXPECT_EQ(csv_number(1.23456789e-7), "1.23457e-07");
}

TEST(Export, BeamConfigRoundTrip) {
    BeamProblem p;
    p.length = 2.5;
    p.ei = 7.0;
    p.g = 0.3;
    p.left = Support::clamped;
    p.right = Support::free;
    p.nc_right = NonClassical::higher_moment_zero;
    p.n = 13;
    p.load = PointLoad{3.0, 2.5};
    const BeamProblem q = beam_problem_from_json(to_json(p));
    EXPECT_EQ(to_json(q), to_json(p));
    EXPECT_EQ(q.n, 13);
    EXPECT_EQ(std::get<PointLoad>(q.load).x, 2.5);
}

TEST(Export, BeamConfigDefaultsAndAliases) {
    const BeamProblem p = beam_problem_from_json(json{{"bc", "cf"}, {"g_over_l", 0.1}, {"length", 2.0}});
    EXPECT_EQ(p.left, Support::clamped);
    EXPECT_EQ(p.right, Support::free);
    EXPECT_EQ(p.nc_right, NonClassical::higher_moment_zero);
    EXPECT_DOUBLE_EQ(p.g, 0.2);
    EXPECT_EQ(parse_support("Simply-Supported"), Support::simply_supported);
    EXPECT_EQ(parse_support("fixed"), Support::clamped);
    EXPECT_THROW(parse_support("roller"), std::invalid_argument);
}

TEST(Export, PlateConfigRoundTrip) {
    PlateProblem p;
    p.lx = 1.0;
    p.ly = 2.0;
    p.nu = 0.25;
    p.g = 0.1;
    p.edges = parse_edges("CFFF");
    p.n = 17;
    p.variant = PlateVariant::lh;
    p.lh_edge_lines = LhEdgeLines::hermite;
    p.load = PlatePoint{2.0, 0.5, 1.0};
    const PlateProblem q = plate_problem_from_json(to_json(p));
    EXPECT_EQ(to_json(q), to_json(p));
    EXPECT_EQ(parse_edge_lines("corner"), LhEdgeLines::corner);
    EXPECT_EQ(parse_variant("LH"), PlateVariant::lh);
}

TEST(Export, RejectsBadConfigs) {
    EXPECT_THROW(beam_problem_from_json(json{{"lenght", 1.0}}), std::invalid_argument);
    EXPECT_THROW(beam_problem_from_json(json{{"g", 0.1}, {"g_over_l", 0.1}}), std::invalid_argument);
    EXPECT_THROW(beam_problem_from_json(json{{"n", "eleven"}}), std::invalid_argument);
    EXPECT_THROW(beam_problem_from_json(json{{"load", "moment"}}), std::invalid_argument);
    EXPECT_THROW(beam_problem_from_json(json::array()), std::invalid_argument);
    EXPECT_THROW(plate_problem_from_json(json{{"edges", "SSS"}}), std::invalid_argument);
    EXPECT_THROW(plate_problem_from_json(json{{"variant", "hh"}}), std::invalid_argument);
    EXPECT_THROW(plate_problem_from_json(json{{"thickness", 0.1}}), std::invalid_argument);
}

TEST(Export, BeamCsvLayout) {
    BeamProblem p;
    p.g = 0.1;
    p.n = 9;
    const BeamSolution s = solve_beam(p);
    std::ostringstream os;
    write_beam_csv(os, p, s);
    const auto lines = lines_of(os.str());
    ASSERT_EQ(lines.size(), 2u + 9u);
    ASSERT_EQ(lines[0].rfind("# ", 0), 0u);
    const json header = json::parse(lines[0].substr(2));
    EXPECT_EQ(header.at("config"), to_json(p));
    EXPECT_DOUBLE_EQ(header.at("report").at("w_mid").get<double>(), s.report.w_mid);
    EXPECT_EQ(lines[1], "x,w,slope,curvature");
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto f = split(lines[i]);
        ASSERT_EQ(f.size(), 4u);
        EXPECT_EQ(f[0], csv_number(s.grid.points[i - 2]));
        EXPECT_EQ(f[1], csv_number(s.w[i - 2]));
    }
    const json j = beam_solution_json(p, s);
    EXPECT_EQ(j.at("field").at("w").size(), 9u);
}

TEST(Export, PlateCsvLayout) {
    PlateProblem p;
    p.g = 0.1;
    p.n = 7;
    const PlateSolution s = solve_plate(p);
    std::ostringstream os;
    write_plate_csv(os, p, s);
    const auto lines = lines_of(os.str());
    ASSERT_EQ(lines.size(), 2u + 49u);
    EXPECT_EQ(lines[1], "x,y,w");
    EXPECT_EQ(split(lines[2 + 7 * 3 + 3])[2], csv_number(s.w[3][3]));
    const json j = plate_solution_json(p, s);
    EXPECT_EQ(j.at("field").at("w").size(), 7u);
    EXPECT_EQ(j.at("report").at("w_center").get<double>(), s.report.w_center);
}

TEST(Benchmarks, ReferenceDataLoads) {
    const auto cells = load_reference_cells(default_reference_path());
    const auto ids = table_ids(cells);
    ASSERT_EQ(ids.size(), 9u);
    for (int k = 1; k <= 9; ++k) EXPECT_EQ(ids[static_cast<std::size_t>(k - 1)], "table" + std::to_string(k));
    for (const auto& c : cells) {
        EXPECT_FALSE(c.quantity.empty()) << c.id;
        EXPECT_TRUE(c.method == "dq" || c.method == "oracle") << c.id;
        EXPECT_TRUE(c.informational || c.abs_tol > 0.0 || c.rel_tol > 0.0) << c.id;
    }
    EXPECT_THROW(load_reference_cells("/nonexistent/reference.json"), std::runtime_error);
}

TEST(Benchmarks, ToleranceCheck) {
    ReferenceCell c;
    c.reference = 2.0;
    c.abs_tol = 1e-3;
    EXPECT_TRUE(within_tolerance(c, 2.0009));
    EXPECT_FALSE(within_tolerance(c, 2.0011));
    EXPECT_FALSE(within_tolerance(c, std::nan("")));
    c.abs_tol = 0.0;
    c.rel_tol = 1e-2;
    EXPECT_TRUE(within_tolerance(c, 1.981));
    EXPECT_FALSE(within_tolerance(c, 1.979));
}

TEST(Benchmarks, ReproduceKeepsFileOrder) {
    const auto cells = load_reference_cells(default_reference_path());
    const auto results = reproduce_table(cells, "table1");
    std::vector<std::string> expected;
    for (const auto& c : cells)
        if (c.table == "table1") expected.push_back(c.id);
    ASSERT_EQ(results.size(), expected.size());
    for (std::size_t i = 0; i < results.size(); ++i) EXPECT_EQ(results[i].cell.id, expected[i]);

    std::ostringstream os;
    write_reproduce_csv(os, results);
    const auto lines = lines_of(os.str());
    ASSERT_EQ(lines.size(), results.size() + 1);
    EXPECT_EQ(lines[0], "table,cell,quantity,computed,reference,abs_dev,rel_dev,tolerance,flag");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i]);
        ASSERT_EQ(f.size(), 9u) << lines[i];
        EXPECT_EQ(f[1], results[i - 1].cell.id);
        const std::string flag = f[8];
        EXPECT_TRUE(flag == "pass" || flag == "fail" || flag == "informational");
    }
    EXPECT_THROW(reproduce_table(cells, "table42"), std::invalid_argument);
}

TEST(Benchmarks, OracleCellMatchesDirectEvaluation) {
    ReferenceCell c;
    c.method = "oracle";
    c.config = json{{"problem", "beam"}, {"bc", "ss"}, {"g_over_l", 1e-5}, {"n", 11}};
    c.quantity = "w_mid";
    // classical simply supported value 500/384
    EXPECT_NEAR(compute_quantity(c), 500.0 / 384.0, 1e-8);
    c.method = "dq";
    EXPECT_NEAR(compute_quantity(c), 500.0 / 384.0, 1e-6);
}

TEST(Benchmarks, ConvergenceSeries) {
    BeamProblem p;
    p.g = 0.1;
    const ConvergenceSeries s = beam_convergence(p, {7, 9, 11, 13});
    EXPECT_EQ(s.reference, "oracle");
    ASSERT_EQ(s.points.size(), 4u);
    for (std::size_t i = 1; i < s.points.size(); ++i) EXPECT_LT(s.points[i].error, s.points[i - 1].error);
    std::ostringstream os;
    write_convergence_csv(os, s);
    const auto lines = lines_of(os.str());
    ASSERT_EQ(lines.size(), 5u);
    EXPECT_EQ(lines[0], "n,value,error");
    EXPECT_EQ(split(lines[1])[0], "7");

    PlateProblem q;
    q.g = 0.1;
    const ConvergenceSeries t = plate_convergence(q, {9, 11, 13});
    EXPECT_EQ(t.reference, "self");
    EXPECT_EQ(t.points.back().error, 0.0);
    EXPECT_THROW(beam_convergence(p, {}), std::invalid_argument);
}
