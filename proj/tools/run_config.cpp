#include "run_config.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sgdqe/benchmarks.hpp"
#include "sgdqe/linalg.hpp"

namespace sgdqe::cli {

namespace {

const char* format_name(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + s + "'");
}

// Config errors map to exit 2, anything the solver raises to exit 3.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
    }
}

// Open the output target, or fall back to the given stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw ConfigError("cannot write '" + path + "'");
            os_ = &file_;
        }
    }
    std::ostream& operator*() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

// Flag values; a flag only lands in the config when it was given.
struct ProblemFlags {
    std::string config_path;
    std::string bc, bc_left, bc_right, nc_left, nc_right;
    std::string edges, variant, edge_lines;
    std::string load;
    double g_over_l = 0.0, g = 0.0;
    double length = 1.0, ei = 1.0, q = 1.0, p = 1.0, load_x = 0.5, load_y = 0.5;
    double lx = 1.0, ly = 1.0, h = 0.01, e = 3e6, nu = 0.3;
    int n = 0;
    std::string format = "csv";
    std::string out;
    bool dump = false;
    int verbose = 0;
    bool quiet = false;
    std::vector<std::pair<CLI::Option*, std::string>> given;
};

template <class T>
void flag(CLI::App* app, ProblemFlags& f, const std::string& name, T& target, const std::string& key,
          const std::string& help) {
    CLI::Option* o = app->add_option(name, target, help);
    f.given.emplace_back(o, key);
}

void add_common(CLI::App* app, ProblemFlags& f) {
    app->add_option("--config", f.config_path, "JSON run configuration; flags override it");
    flag(app, f, "--out,-o", f.out, "out", "output file (default: standard output)");
    flag(app, f, "--format", f.format, "format", "csv or json");
    app->add_flag("--dump-config", f.dump, "print the effective configuration as JSON and exit");
    app->add_flag("-v,--verbose", f.verbose, "diagnostics on standard error (repeatable)");
    app->add_flag("--quiet", f.quiet, "no report line when writing to a file");
    flag(app, f, "--load", f.load, "load", "udl or point");
    flag(app, f, "--g-over-l", f.g_over_l, "g_over_l", "gradient length over the span (lx for plates)");
    flag(app, f, "--g", f.g, "g", "gradient length, absolute");
    flag(app, f, "--n", f.n, "n", "grid points per direction");
    flag(app, f, "--q", f.q, "q", "distributed load intensity");
    flag(app, f, "--p", f.p, "p", "point load magnitude");
    flag(app, f, "--load-x", f.load_x, "load_x", "point load position along x (absolute)");
}

void add_beam(CLI::App* app, ProblemFlags& f) {
    add_common(app, f);
    app->add_option("--bc", f.bc, "both ends (simply_supported|clamped|free) or a code such as ss, cc, cf");
    app->add_option("--bc-left", f.bc_left, "support at x = 0");
    app->add_option("--bc-right", f.bc_right, "support at x = L");
    flag(app, f, "--nc-left", f.nc_left, "nc_left", "curvature_zero or higher_moment_zero at x = 0");
    flag(app, f, "--nc-right", f.nc_right, "nc_right", "curvature_zero or higher_moment_zero at x = L");
    flag(app, f, "--length", f.length, "length", "span L");
    flag(app, f, "--ei", f.ei, "ei", "bending stiffness EI");
}

void add_plate(CLI::App* app, ProblemFlags& f) {
    add_common(app, f);
    flag(app, f, "--edges", f.edges, "edges", "edge letters S/C/F/G for x=0, y=0, x=lx, y=ly");
    flag(app, f, "--variant", f.variant, "variant", "ll or lh");
    flag(app, f, "--lh-edge-lines", f.edge_lines, "lh_edge_lines", "corner, hermite or lagrange (lh only)");
    flag(app, f, "--lx", f.lx, "lx", "side along x");
    flag(app, f, "--ly", f.ly, "ly", "side along y");
    flag(app, f, "--thickness", f.h, "h", "thickness");
    flag(app, f, "--e", f.e, "e", "Young's modulus");
    flag(app, f, "--nu", f.nu, "nu", "Poisson ratio");
    flag(app, f, "--load-y", f.load_y, "load_y", "point load position along y (absolute)");
}

RunConfig build_config(const ProblemFlags& f, ProblemKind kind) {
    json j = f.config_path.empty() ? json::object() : read_json_file(f.config_path);
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    const std::string kname = kind == ProblemKind::beam ? "beam" : "plate";
    if (j.contains("problem") && j["problem"] != kname)
        throw ConfigError("config describes a " + j["problem"].dump() + " problem, not a " + kname);
    j["problem"] = kname;
    // g and g_over_l exclude each other; the flag wins over the file
    for (const auto& [opt, key] : f.given) {
        if (!opt->count()) continue;
        if (key == "g") j.erase("g_over_l");
        if (key == "g_over_l") j.erase("g");
        const std::string raw = opt->as<std::string>();
        if (key == "n") {
            j[key] = opt->as<int>();
        } else if (key == "load" || key == "edges" || key == "variant" || key == "lh_edge_lines" ||
                   key == "nc_left" || key == "nc_right" || key == "format" || key == "out") {
            j[key] = raw;
        } else {
            j[key] = opt->as<double>();
        }
    }
    if (kind == ProblemKind::beam) {
        if (!f.bc.empty()) {
            j.erase("bc");
            const auto [left, right] = parse_end_supports(f.bc);
            j["bc_left"] = to_string(left);
            j["bc_right"] = to_string(right);
        }
        if (!f.bc_left.empty()) j["bc_left"] = f.bc_left;
        if (!f.bc_right.empty()) j["bc_right"] = f.bc_right;
    }
    if (f.verbose) j["verbosity"] = f.quiet ? -1 : f.verbose;
    else if (f.quiet) j["verbosity"] = -1;
    try {
        return run_config_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

void report_line(std::ostream& os, const json& report) { os << report.dump() << '\n'; }

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "sgdqe: config error: " << e.what() << '\n';
        return exit_config;
    } catch (const InconsistentBc& e) {
        err << "sgdqe: config error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::invalid_argument& e) {
        // range and support checks
        err << "sgdqe: config error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        err << "sgdqe: solver error: " << e.what() << '\n';
        return exit_solver;
    }
}

std::vector<int> parse_n_list(const std::string& s) {
    std::vector<int> ns;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto dots = tok.find("..");
        try {
            if (dots != std::string::npos) {
                const int a = std::stoi(tok.substr(0, dots));
                const int b = std::stoi(tok.substr(dots + 2));
                for (int n = a; n <= b; ++n) ns.push_back(n);
            } else {
                ns.push_back(std::stoi(tok));
            }
        } catch (const std::logic_error&) {
            throw ConfigError("bad N list '" + s + "'");
        }
    }
    if (ns.empty()) throw ConfigError("empty N list");
    return ns;
}

}  // namespace

void RunConfig::validate() const {
    if (kind == ProblemKind::beam) beam.validate();
    else plate.validate();
}

json to_json(const RunConfig& c) {
    json j = c.kind == ProblemKind::beam ? sgdqe::to_json(c.beam) : sgdqe::to_json(c.plate);
    j["format"] = format_name(c.format);
    if (!c.out.empty()) j["out"] = c.out;
    j["verbosity"] = c.verbosity;
    return j;
}

RunConfig run_config_from_json(const json& in) {
    if (!in.is_object()) throw std::invalid_argument("config must be a JSON object");
    json j = in;
    RunConfig c;
    const std::string kind = j.value("problem", std::string("beam"));
    if (kind == "beam") c.kind = ProblemKind::beam;
    else if (kind == "plate") c.kind = ProblemKind::plate;
    else throw std::invalid_argument("unknown problem kind '" + kind + "'");
    try {
        if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
        if (j.contains("out")) c.out = j.at("out").get<std::string>();
        if (j.contains("verbosity")) c.verbosity = j.at("verbosity").get<int>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad run setting: ") + e.what());
    }
    j.erase("format");
    j.erase("out");
    j.erase("verbosity");
    if (c.kind == ProblemKind::beam) c.beam = beam_problem_from_json(j);
    else c.plate = plate_problem_from_json(j);
    return c;
}

bool equivalent(const RunConfig& a, const RunConfig& b) { return to_json(a) == to_json(b); }

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        try {
            c.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        const bool diag = c.verbosity > 0;
        Sink sink(c.out, out);
        json report;
        if (c.kind == ProblemKind::beam) {
            const BeamSolution s = solve_beam(c.beam, SolveRoute::condensed, diag);
            if (diag)
                err << "beam: " << s.dofs.size() << " dofs, " << s.boundary_count
                    << " boundary, rcond " << s.rcond << '\n';
            if (c.format == OutputFormat::csv) write_beam_csv(*sink, c.beam, s);
            else *sink << beam_solution_json(c.beam, s).dump(1) << '\n';
            report = sgdqe::to_json(s.report);
        } else {
            const PlateSolution s = solve_plate(c.plate, SolveRoute::condensed, diag);
            if (diag)
                err << "plate: " << s.dofs.size() << " dofs, " << s.boundary_count
                    << " boundary, rcond " << s.rcond << '\n';
            if (c.format == OutputFormat::csv) write_plate_csv(*sink, c.plate, s);
            else *sink << plate_solution_json(c.plate, s).dump(1) << '\n';
            report = sgdqe::to_json(s.report);
        }
        if (!c.out.empty() && c.verbosity >= 0) report_line(out, report);
        return exit_ok;
    });
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    // SGDQE_SEED is reserved; the solver draws no random numbers.
    CLI::App app{"Strain-gradient beam and plate solver (differential quadrature elements)"};
    app.require_subcommand(1);

    ProblemFlags beam_f, plate_f, conv_beam_f, conv_plate_f;
    CLI::App* beam = app.add_subcommand("beam", "solve a gradient beam");
    add_beam(beam, beam_f);
    CLI::App* plate = app.add_subcommand("plate", "solve a gradient plate");
    add_plate(plate, plate_f);

    CLI::App* repro = app.add_subcommand("reproduce", "recompute a benchmark table");
    std::string table, data_path, repro_out;
    repro->add_option("table", table, "table1 .. table9, or all")->required();
    repro->add_option("--data", data_path, "reference data file");
    repro->add_option("--out,-o", repro_out, "output file (default: standard output)");

    CLI::App* conv = app.add_subcommand("convergence", "deflection error against N");
    conv->require_subcommand(1);
    std::string n_list;
    CLI::App* conv_beam = conv->add_subcommand("beam", "beam series, error against the closed form");
    add_beam(conv_beam, conv_beam_f);
    CLI::App* conv_plate = conv->add_subcommand("plate", "plate series, error against the largest N");
    add_plate(conv_plate, conv_plate_f);
    for (CLI::App* sc : {conv_beam, conv_plate})
        sc->add_option("--n-list", n_list, "grid sizes, e.g. 7,9,11 or 7..15")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return exit_ok;
        }
        err << "sgdqe: config error: " << e.what() << " (see --help)\n";
        return exit_config;
    }

    auto single = [&](const ProblemFlags& f, ProblemKind kind) {
        return guarded(err, [&] {
            const RunConfig c = build_config(f, kind);
            if (f.dump) {
                out << to_json(c).dump(1) << '\n';
                return exit_ok;
            }
            return run(c, out, err);
        });
    };
    if (*beam) return single(beam_f, ProblemKind::beam);
    if (*plate) return single(plate_f, ProblemKind::plate);

    if (*repro) {
        return guarded(err, [&] {
            std::vector<ReferenceCell> cells;
            try {
                cells = load_reference_cells(data_path.empty() ? default_reference_path() : data_path);
            } catch (const std::exception& e) {
                throw ConfigError(e.what());
            }
            const auto ids = table_ids(cells);
            std::vector<std::string> wanted;
            if (table == "all") wanted = ids;
            else if (std::find(ids.begin(), ids.end(), table) != ids.end()) wanted = {table};
            else throw ConfigError("unknown table '" + table + "'");
            std::vector<CellResult> all;
            for (const auto& t : wanted) {
                auto r = reproduce_table(cells, t);
                all.insert(all.end(), r.begin(), r.end());
            }
            Sink sink(repro_out, out);
            write_reproduce_csv(*sink, all);
            return exit_ok;
        });
    }

    const bool is_beam = static_cast<bool>(*conv_beam);
    const ProblemFlags& f = is_beam ? conv_beam_f : conv_plate_f;
    return guarded(err, [&] {
        const std::vector<int> ns = parse_n_list(n_list);
        const RunConfig c = build_config(f, is_beam ? ProblemKind::beam : ProblemKind::plate);
        if (f.dump) {
            out << to_json(c).dump(1) << '\n';
            return exit_ok;
        }
        try {
            for (int n : ns) {
                RunConfig probe = c;
                probe.beam.n = probe.plate.n = n;
                probe.validate();
            }
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        const ConvergenceSeries s = is_beam ? beam_convergence(c.beam, ns) : plate_convergence(c.plate, ns);
        Sink sink(c.out, out);
        if (c.format == OutputFormat::json) {
            json j{{"config", to_json(c)}, {"reference", s.reference}, {"reference_value", s.reference_value}};
            for (const auto& p : s.points) j["points"].push_back({{"n", p.n}, {"value", p.value}, {"error", p.error}});
            *sink << j.dump(1) << '\n';
        } else {
            write_convergence_csv(*sink, s);
        }
        return exit_ok;
    });
}

}  // namespace sgdqe::cli
