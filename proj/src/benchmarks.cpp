#include "sgdqe/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <stdexcept>

#include "sgdqe/beam_oracle.hpp"

#ifndef SGDQE_DATA_DIR
#define SGDQE_DATA_DIR "data"
#endif

namespace sgdqe {

namespace {

double beam_field(const BeamReport& r, const std::string& q) {
    if (q == "w_mid") return r.w_mid;
    if (q == "w_tip") return r.w_tip;
    if (q == "w_load") return r.w_load;
    if (q == "w_mid_plain") return r.w_mid_plain;
    if (q == "slope_tip") return r.slope_tip;
    if (q == "curvature_mid") return r.curvature_mid;
    if (q == "curvature_tip") return r.curvature_tip;
    if (q == "bm_left") return r.bm_left;
    if (q == "bm_right") return r.bm_right;
    if (q == "hm_left") return r.hm_left;
    if (q == "hm_right") return r.hm_right;
    throw std::invalid_argument("unknown beam quantity '" + q + "'");
}

double plate_field(const PlateReport& r, const std::string& q) {
    if (q == "w_center") return r.w_center;
    if (q == "w_edge_mid") return r.w_edge_mid;
    if (q == "w_max") return r.w_max;
    if (q == "bm_edge") return r.bm_edge;
    if (q == "hm_edge") return r.hm_edge;
    if (q == "curvature_center") return r.curvature_center;
    throw std::invalid_argument("unknown plate quantity '" + q + "'");
}

// Closed-form counterparts of the beam report fields (udl only).
double oracle_field(const BeamProblem& pb, const std::string& q) {
    const AnalyticalBeamSolution sol(pb);
    const double L = pb.length;
    const double qv = std::get<UdlLoad>(pb.load).q;
    if (q == "w_mid") return 100.0 * pb.ei * sol.evaluate(0.5 * L).w / (qv * L * L * L * L);
    if (q == "bm_left") return sol.evaluate(0.0).moment / (qv * L * L);
    if (q == "hm_left") return sol.evaluate(0.0).higher_moment / (qv * L * L * L);
    if (q == "curvature_mid") return pb.ei * sol.evaluate(0.5 * L).curvature / (qv * L * L);
    throw std::invalid_argument("no closed-form value for '" + q + "'");
}

CellResult run_cell(const ReferenceCell& c) {
    CellResult r;
    r.cell = c;
    try {
        r.computed = compute_quantity(c);
        r.abs_dev = std::fabs(r.computed - c.reference);
        r.rel_dev = c.reference != 0.0 ? r.abs_dev / std::fabs(c.reference) : r.abs_dev;
        r.pass = within_tolerance(c, r.computed);
    } catch (const std::exception& e) {
        r.error = e.what();
        r.computed = std::nan("");
        r.abs_dev = r.rel_dev = std::nan("");
        r.pass = false;
    }
    return r;
}

std::string csv_text(std::string s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

}  // namespace

std::string default_reference_path() {
    if (const char* env = std::getenv("SGDQE_REFERENCE_DATA"); env && *env) return env;
    return std::string(SGDQE_DATA_DIR) + "/reference_values.json";
}

std::vector<ReferenceCell> load_reference_cells(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference data '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error("reference data '" + path + "' is not valid JSON: " + e.what());
    }
    std::vector<ReferenceCell> cells;
    for (const auto& t : doc.at("tables")) {
        const std::string table = t.at("id").get<std::string>();
        const json base = t.value("defaults", json::object());
        for (const auto& jc : t.at("cells")) {
            ReferenceCell c;
            c.table = table;
            c.id = jc.at("id").get<std::string>();
            c.method = jc.value("method", base.value("method", std::string("dq")));
            c.config = base.value("config", json::object());
            c.config.update(jc.value("config", json::object()));
            c.quantity = jc.value("quantity", base.value("quantity", std::string()));
            c.factor = jc.value("factor", base.value("factor", 1.0));
            c.magnitude = jc.value("magnitude", base.value("magnitude", false));
            c.reference = jc.at("reference").get<double>();
            const json tol = jc.value("tolerance", base.value("tolerance", json::object()));
            c.abs_tol = tol.value("abs", 0.0);
            c.rel_tol = tol.value("rel", 0.0);
            c.informational = jc.value("status", base.value("status", std::string("check"))) == "informational";
            c.note = jc.value("note", std::string());
            cells.push_back(std::move(c));
        }
    }
    return cells;
}

std::vector<std::string> table_ids(const std::vector<ReferenceCell>& cells) {
    std::vector<std::string> ids;
    for (const auto& c : cells)
        if (std::find(ids.begin(), ids.end(), c.table) == ids.end()) ids.push_back(c.table);
    return ids;
}

double compute_quantity(const ReferenceCell& c) {
    double v;
    const std::string kind = c.config.value("problem", std::string("beam"));
    if (kind == "beam") {
        const BeamProblem pb = beam_problem_from_json(c.config);
        if (c.method == "oracle") {
            v = oracle_field(pb, c.quantity);
        } else {
            v = beam_field(solve_beam(pb).report, c.quantity);
        }
    } else if (kind == "plate") {
        if (c.method != "dq") throw std::invalid_argument("plates have no closed-form method");
        v = plate_field(solve_plate(plate_problem_from_json(c.config)).report, c.quantity);
    } else {
        throw std::invalid_argument("unknown problem kind '" + kind + "'");
    }
    v *= c.factor;
    return c.magnitude ? std::fabs(v) : v;
}

bool within_tolerance(const ReferenceCell& c, double computed) {
    if (!std::isfinite(computed)) return false;
    const double dev = std::fabs(computed - c.reference);
    bool ok = true;
    if (c.abs_tol > 0.0) ok = ok && dev <= c.abs_tol;
    if (c.rel_tol > 0.0) ok = ok && dev <= c.rel_tol * std::fabs(c.reference);
    return ok;
}

std::vector<CellResult> reproduce_table(const std::vector<ReferenceCell>& all, const std::string& table) {
    std::vector<std::future<CellResult>> jobs;
    for (const auto& c : all)
        if (c.table == table) jobs.push_back(std::async(std::launch::async, run_cell, c));
    if (jobs.empty()) throw std::invalid_argument("unknown table '" + table + "'");
    std::vector<CellResult> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

void write_reproduce_csv(std::ostream& os, const std::vector<CellResult>& results) {
    os << "table,cell,quantity,computed,reference,abs_dev,rel_dev,tolerance,flag\n";
    for (const auto& r : results) {
        std::string tol;
        if (r.cell.abs_tol > 0.0) tol += "abs " + csv_number(r.cell.abs_tol);
        if (r.cell.rel_tol > 0.0) tol += (tol.empty() ? "" : " ") + std::string("rel ") + csv_number(r.cell.rel_tol);
        const char* flag = r.cell.informational ? "informational" : r.pass ? "pass" : "fail";
        os << r.cell.table << ',' << csv_text(r.cell.id) << ',' << r.cell.quantity << ','
           << csv_number(r.computed) << ',' << csv_number(r.cell.reference) << ','
           << csv_number(r.abs_dev) << ',' << csv_number(r.rel_dev) << ',' << tol << ',' << flag
           << '\n';
    }
}

ConvergenceSeries beam_convergence(const BeamProblem& pb, const std::vector<int>& ns) {
    if (ns.empty()) throw std::invalid_argument("empty N list");
    std::vector<std::future<double>> jobs;
    for (int n : ns) {
        BeamProblem p = pb;
        p.n = n;
        jobs.push_back(std::async(std::launch::async, [p] {
            const BeamReport r = solve_beam(p).report;
            return p.is_udl() ? r.w_mid : r.w_load;
        }));
    }
    ConvergenceSeries s;
    for (std::size_t k = 0; k < ns.size(); ++k) s.points.push_back({ns[k], jobs[k].get(), 0.0});
    if (pb.is_udl()) {
        s.reference = "oracle";
        s.reference_value = oracle_field(pb, "w_mid");
    } else {
        s.reference = "self";
        s.reference_value = std::max_element(s.points.begin(), s.points.end(),
                                             [](auto& a, auto& b) { return a.n < b.n; })->value;
    }
    for (auto& p : s.points) p.error = std::fabs(p.value - s.reference_value) / std::fabs(s.reference_value);
    return s;
}

ConvergenceSeries plate_convergence(const PlateProblem& pb, const std::vector<int>& ns) {
    if (ns.empty()) throw std::invalid_argument("empty N list");
    std::vector<std::future<double>> jobs;
    for (int n : ns) {
        PlateProblem p = pb;
        p.n = n;
        jobs.push_back(std::async(std::launch::async, [p] { return solve_plate(p).report.w_max; }));
    }
    ConvergenceSeries s;
    s.reference = "self";
    for (std::size_t k = 0; k < ns.size(); ++k) s.points.push_back({ns[k], jobs[k].get(), 0.0});
    s.reference_value = std::max_element(s.points.begin(), s.points.end(),
                                         [](auto& a, auto& b) { return a.n < b.n; })->value;
    for (auto& p : s.points) p.error = std::fabs(p.value - s.reference_value) / std::fabs(s.reference_value);
    return s;
}

void write_convergence_csv(std::ostream& os, const ConvergenceSeries& s) {
    os << "n,value,error\n";
    for (const auto& p : s.points)
        os << p.n << ',' << csv_number(p.value) << ',' << csv_number(p.error) << '\n';
}

}  // namespace sgdqe
