#include "sgdqe/export.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace sgdqe {

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::replace(s.begin(), s.end(), '-', '_');
    return s;
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return fallback;
    return it->get<T>();
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known, const char* what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw std::invalid_argument(std::string("unknown ") + what + " key '" + it.key() + "'");
    }
}

}  // namespace

Support parse_support(const std::string& s) {
    const std::string v = lower(s);
    if (v == "s" || v == "ss" || v == "simply_supported" || v == "simply" || v == "pinned")
        return Support::simply_supported;
    if (v == "c" || v == "clamped" || v == "fixed") return Support::clamped;
    if (v == "f" || v == "free") return Support::free;
    throw std::invalid_argument("unknown support '" + s + "'");
}

std::pair<Support, Support> parse_end_supports(const std::string& s) {
    const std::string v = lower(s);
    if (v.size() == 2 && v.find_first_not_of("scf") == std::string::npos && v != "ss")
        return {parse_support(v.substr(0, 1)), parse_support(v.substr(1, 1))};
    const Support both = parse_support(v);
    return {both, both};
}

NonClassical parse_nonclassical(const std::string& s) {
    const std::string v = lower(s);
    if (v == "curvature_zero" || v == "curvature") return NonClassical::curvature_zero;
    if (v == "higher_moment_zero" || v == "higher_moment") return NonClassical::higher_moment_zero;
    throw std::invalid_argument("unknown non-classical condition '" + s + "'");
}

PlateVariant parse_variant(const std::string& s) {
    const std::string v = lower(s);
    if (v == "ll") return PlateVariant::ll;
    if (v == "lh") return PlateVariant::lh;
    throw std::invalid_argument("unknown plate variant '" + s + "'");
}

LhEdgeLines parse_edge_lines(const std::string& s) {
    const std::string v = lower(s);
    if (v == "corner") return LhEdgeLines::corner;
    if (v == "hermite") return LhEdgeLines::hermite;
    if (v == "lagrange") return LhEdgeLines::lagrange;
    throw std::invalid_argument("unknown edge-line basis '" + s + "'");
}

const char* to_string(PlateVariant v) { return v == PlateVariant::ll ? "ll" : "lh"; }
const char* to_string(LhEdgeLines l) {
    return l == LhEdgeLines::corner ? "corner" : l == LhEdgeLines::hermite ? "hermite" : "lagrange";
}

std::string csv_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
    return buf;
}

json to_json(const BeamProblem& p) {
    json j;
    j["problem"] = "beam";
    j["length"] = p.length;
    j["ei"] = p.ei;
    j["g"] = p.g;
    j["bc_left"] = to_string(p.left);
    j["bc_right"] = to_string(p.right);
    j["nc_left"] = to_string(p.nc_left);
    j["nc_right"] = to_string(p.nc_right);
    j["n"] = p.n;
    if (const auto* u = std::get_if<UdlLoad>(&p.load)) {
        j["load"] = "udl";
        j["q"] = u->q;
    } else {
        const auto& pt = std::get<PointLoad>(p.load);
        j["load"] = "point";
        j["p"] = pt.p;
        j["load_x"] = pt.x;
    }
    return j;
}

BeamProblem beam_problem_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("beam config must be a JSON object");
    reject_unknown_keys(j, {"problem", "length", "ei", "g", "g_over_l", "bc", "bc_left", "bc_right",
                            "nc_left", "nc_right", "n", "load", "q", "p", "load_x"},
                        "beam");
    BeamProblem p;
    try {
        p.length = get_or(j, "length", p.length);
        p.ei = get_or(j, "ei", p.ei);
        if (j.contains("g") && j.contains("g_over_l"))
            throw std::invalid_argument("give either g or g_over_l, not both");
        p.g = j.contains("g_over_l") ? j.at("g_over_l").get<double>() * p.length
                                     : get_or(j, "g", p.g);
        if (j.contains("bc")) std::tie(p.left, p.right) = parse_end_supports(j.at("bc").get<std::string>());
        if (j.contains("bc_left")) p.left = parse_support(j.at("bc_left").get<std::string>());
        if (j.contains("bc_right")) p.right = parse_support(j.at("bc_right").get<std::string>());
        // a free end carries the higher-moment condition unless told otherwise
        p.nc_left = j.contains("nc_left") ? parse_nonclassical(j.at("nc_left").get<std::string>())
                    : p.left == Support::free ? NonClassical::higher_moment_zero
                                              : NonClassical::curvature_zero;
        p.nc_right = j.contains("nc_right") ? parse_nonclassical(j.at("nc_right").get<std::string>())
                     : p.right == Support::free ? NonClassical::higher_moment_zero
                                                : NonClassical::curvature_zero;
        p.n = get_or(j, "n", p.n);
        const std::string load = lower(get_or<std::string>(j, "load", "udl"));
        if (load == "udl") {
            p.load = UdlLoad{get_or(j, "q", 1.0)};
        } else if (load == "point") {
            p.load = PointLoad{get_or(j, "p", 1.0), get_or(j, "load_x", 0.5 * p.length)};
        } else {
            throw std::invalid_argument("unknown load '" + load + "'");
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad beam config value: ") + e.what());
    }
    return p;
}

json to_json(const PlateProblem& p) {
    json j;
    j["problem"] = "plate";
    j["lx"] = p.lx;
    j["ly"] = p.ly;
    j["h"] = p.h;
    j["e"] = p.e;
    j["nu"] = p.nu;
    j["g"] = p.g;
    j["edges"] = edges_to_string(p.edges);
    j["n"] = p.n;
    j["variant"] = to_string(p.variant);
    j["lh_edge_lines"] = to_string(p.lh_edge_lines);
    if (const auto* u = std::get_if<PlateUdl>(&p.load)) {
        j["load"] = "udl";
        j["q"] = u->q;
    } else {
        const auto& pt = std::get<PlatePoint>(p.load);
        j["load"] = "point";
        j["p"] = pt.p;
        j["load_x"] = pt.x;
        j["load_y"] = pt.y;
    }
    return j;
}

PlateProblem plate_problem_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("plate config must be a JSON object");
    reject_unknown_keys(j, {"problem", "lx", "ly", "h", "e", "nu", "g", "g_over_l", "edges", "n",
                            "variant", "lh_edge_lines", "load", "q", "p", "load_x", "load_y"},
                        "plate");
    PlateProblem p;
    try {
        p.lx = get_or(j, "lx", p.lx);
        p.ly = get_or(j, "ly", p.ly);
        p.h = get_or(j, "h", p.h);
        p.e = get_or(j, "e", p.e);
        p.nu = get_or(j, "nu", p.nu);
        if (j.contains("g") && j.contains("g_over_l"))
            throw std::invalid_argument("give either g or g_over_l, not both");
        p.g = j.contains("g_over_l") ? j.at("g_over_l").get<double>() * p.lx : get_or(j, "g", p.g);
        if (j.contains("edges")) p.edges = parse_edges(j.at("edges").get<std::string>());
        p.n = get_or(j, "n", p.n);
        if (j.contains("variant")) p.variant = parse_variant(j.at("variant").get<std::string>());
        if (j.contains("lh_edge_lines"))
            p.lh_edge_lines = parse_edge_lines(j.at("lh_edge_lines").get<std::string>());
        const std::string load = lower(get_or<std::string>(j, "load", "udl"));
        if (load == "udl") {
            p.load = PlateUdl{get_or(j, "q", 1.0)};
        } else if (load == "point") {
            p.load = PlatePoint{get_or(j, "p", 1.0), get_or(j, "load_x", 0.5 * p.lx),
                                get_or(j, "load_y", 0.5 * p.ly)};
        } else {
            throw std::invalid_argument("unknown load '" + load + "'");
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad plate config value: ") + e.what());
    }
    return p;
}

json to_json(const BeamReport& r) {
    return json{{"point_load", r.point_load},   {"w_mid", r.w_mid},
                {"w_tip", r.w_tip},             {"w_load", r.w_load},
                {"w_mid_plain", r.w_mid_plain}, {"slope_tip", r.slope_tip},
                {"curvature_mid", r.curvature_mid}, {"curvature_tip", r.curvature_tip},
                {"bm_left", r.bm_left},         {"bm_right", r.bm_right},
                {"hm_left", r.hm_left},         {"hm_right", r.hm_right}};
}

json to_json(const PlateReport& r) {
    return json{{"point_load", r.point_load}, {"w_center", r.w_center},
                {"w_edge_mid", r.w_edge_mid}, {"w_max", r.w_max},
                {"bm_edge", r.bm_edge},       {"hm_edge", r.hm_edge},
                {"curvature_center", r.curvature_center}};
}

void write_beam_csv(std::ostream& os, const BeamProblem& p, const BeamSolution& s) {
    const json header{{"config", to_json(p)}, {"report", to_json(s.report)}};
    os << "# " << header.dump() << '\n';
    os << "x,w,slope,curvature\n";
    for (std::size_t i = 0; i < s.w.size(); ++i)
        os << csv_number(s.grid.points[i]) << ',' << csv_number(s.w[i]) << ','
           << csv_number(s.slope[i]) << ',' << csv_number(s.curvature[i]) << '\n';
}

json beam_solution_json(const BeamProblem& p, const BeamSolution& s) {
    return json{{"config", to_json(p)},
                {"report", to_json(s.report)},
                {"field", {{"x", s.grid.points}, {"w", s.w}, {"slope", s.slope}, {"curvature", s.curvature}}}};
}

void write_plate_csv(std::ostream& os, const PlateProblem& p, const PlateSolution& s) {
    const json header{{"config", to_json(p)}, {"report", to_json(s.report)}};
    os << "# " << header.dump() << '\n';
    os << "x,y,w\n";
    const auto& xs = s.ops->x_grid().points;
    const auto& ys = s.ops->y_grid().points;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j)
            os << csv_number(xs[i]) << ',' << csv_number(ys[j]) << ',' << csv_number(s.w[i][j]) << '\n';
}

json plate_solution_json(const PlateProblem& p, const PlateSolution& s) {
    return json{{"config", to_json(p)},
                {"report", to_json(s.report)},
                {"field", {{"x", s.ops->x_grid().points}, {"y", s.ops->y_grid().points}, {"w", s.w}}}};
}

}  // namespace sgdqe
