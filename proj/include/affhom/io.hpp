#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "closure.hpp"
#include "parse.hpp"
#include "profile.hpp"
#include "verify.hpp"

namespace affhom {

using json = nlohmann::json;

inline constexpr const char* kReportFormat = "affhom-report/1";

/// A parsed input document: the group and the points to study.
struct InputDoc {
    GroupSpec spec;
    std::vector<Point> points;
};

namespace detail {

inline Scalar scalar_from_json(const json& j, const std::string& where)
{
    if (j.is_string()) {
        try {
            return parse_scalar(j.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_number_float()) {
        // same reading as the decimal text syntax
        std::ostringstream os;
        os.precision(17);
        os << j.get<double>();
        return parse_scalar(os.str());
    }
    throw InputError(where + ": expected a scalar (string or number)");
}

inline Point point_from_json(const json& j, std::size_t n, const std::string& where)
{
    if (!j.is_array()) throw InputError(where + ": expected an array of " + std::to_string(n) + " scalars");
    if (j.size() != n) throw InputError(where + ": expected " + std::to_string(n) + " coordinates, got " + std::to_string(j.size()));
    Point p;
    for (std::size_t k = 0; k < n; ++k) p.push_back(scalar_from_json(j[k], where + "[" + std::to_string(k) + "]"));
    return p;
}

inline void read_options(const json& j, std::size_t n, Options& o)
{
    if (!j.is_object()) throw InputError("options: expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const json& v = it.value();
        if (key == "word_cap") {
            o.word_cap = v.get<int>();
            if (o.word_cap < 0) throw InputError("options.word_cap must be nonnegative");
        } else if (key == "harvest_cap") {
            o.harvest_cap = v.get<int>();
        } else if (key == "eps") {
            o.eps = v.get<double>();
        } else if (key == "dedup") {
            o.dedup = v.get<double>();
        } else if (key == "grid") {
            o.grid = v.get<int>();
        } else if (key == "budget") {
            o.budget = v.get<std::size_t>();
        } else if (key == "require_exact") {
            o.require_exact = v.get<bool>();
        } else if (key == "window") {
            if (!v.is_object()) throw InputError("options.window: expected an object");
            if (v.contains("half")) o.window_half = v.at("half").get<double>();
            if (v.contains("center")) {
                o.window_center.clear();
                for (const auto& s : point_from_json(v.at("center"), n, "options.window.center")) {
                    o.window_center.push_back(s.to_complex());
                }
            }
        } else {
            throw InputError("options: unknown key '" + key + "'");
        }
    }
}

inline Homothety generator_from_json(const json& j, std::size_t n, const std::string& where)
{
    if (!j.is_object()) throw InputError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "ratio" && it.key() != "center" && it.key() != "shift" && it.key() != "translation") {
            throw InputError(where + ": unknown key '" + it.key() + "'");
        }
    }
    const int forms = static_cast<int>(j.contains("center")) + static_cast<int>(j.contains("shift")) +
                      static_cast<int>(j.contains("translation"));
    if (forms != 1) throw InputError(where + ": give exactly one of center, shift, translation");
    if (j.contains("translation")) {
        if (j.contains("ratio") && equals(scalar_from_json(j.at("ratio"), where + ".ratio"), Scalar(1)) != Tri::Yes) {
            throw InputError(where + ": a translation has ratio 1");
        }
        return Homothety::translation(point_from_json(j.at("translation"), n, where + ".translation"));
    }
    if (!j.contains("ratio")) throw InputError(where + ": missing ratio");
    const Scalar ratio = scalar_from_json(j.at("ratio"), where + ".ratio");
    if (ratio.is_zero() == Tri::Yes) throw InputError(where + ": ratio must be nonzero");
    if (j.contains("shift")) return Homothety(ratio, point_from_json(j.at("shift"), n, where + ".shift"));
    if (equals(ratio, Scalar(1)) == Tri::Yes) throw InputError(where + ": ratio 1 has no center; use translation");
    return Homothety::from_center(ratio, point_from_json(j.at("center"), n, where + ".center"));
}

} // namespace detail

/// Reads `{ "dim": n, "generators": [...], "points": [...], "options": {...} }`.
///
/// A generator is `{"ratio": r, "center": c}`, `{"ratio": r, "shift": b}`
/// (the map z -> r z + b) or `{"translation": v}`. Scalars are strings in
/// the text syntax or plain JSON numbers.
inline InputDoc parse_input(const json& j)
{
    if (!j.is_object()) throw InputError("input: expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "dim" && it.key() != "generators" && it.key() != "points" && it.key() != "options") {
            throw InputError("input: unknown key '" + it.key() + "'");
        }
    }
    if (!j.contains("dim") || !j.at("dim").is_number_integer()) throw InputError("input: missing integer dim");
    const long dim = j.at("dim").get<long>();
    if (dim <= 0) throw InputError("dimension must be positive");
    const auto n = static_cast<std::size_t>(dim);
    if (!j.contains("generators") || !j.at("generators").is_array()) throw InputError("input: missing generators array");

    InputDoc doc;
    Options opts;
    if (j.contains("options")) detail::read_options(j.at("options"), n, opts);
    std::vector<Homothety> gens;
    const json& g = j.at("generators");
    for (std::size_t k = 0; k < g.size(); ++k) {
        gens.push_back(detail::generator_from_json(g[k], n, "generators[" + std::to_string(k) + "]"));
    }
    doc.spec = GroupSpec(n, std::move(gens), std::move(opts));
    if (j.contains("points")) {
        const json& p = j.at("points");
        if (!p.is_array()) throw InputError("points: expected an array");
        for (std::size_t k = 0; k < p.size(); ++k) {
            doc.points.push_back(detail::point_from_json(p[k], n, "points[" + std::to_string(k) + "]"));
        }
    }
    return doc;
}

inline InputDoc parse_input_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    try {
        return parse_input(j);
    } catch (const json::exception& e) {
        throw InputError(std::string("bad input value: ") + e.what());
    }
}

inline InputDoc read_input_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_input_text(ss.str());
}

/// A point given on the command line as comma-separated coordinates.
inline Point parse_point_arg(const std::string& text, std::size_t n)
{
    Point p;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        p.push_back(parse_scalar(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (p.size() != n) {
        throw InputError("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(n));
    }
    return p;
}

// ---- serialization ------------------------------------------------------

inline json to_json_value(double x)
{
    if (!std::isfinite(x)) return nullptr;
    return x;
}

inline json to_json(const Scalar& s) { return s.to_string(); }

inline json to_json(const Point& p)
{
    json a = json::array();
    for (const auto& s : p) a.push_back(to_json(s));
    return a;
}

inline json to_json(const std::vector<Point>& ps)
{
    json a = json::array();
    for (const auto& p : ps) a.push_back(to_json(p));
    return a;
}

inline json to_json(const Homothety& g)
{
    json j;
    j["ratio"] = to_json(g.ratio());
    j["shift"] = to_json(g.shift());
    const Tri t = g.is_translation();
    j["translation"] = std::string(to_string(t));
    j["center"] = t == Tri::No ? to_json(g.center()) : json(nullptr);
    return j;
}

inline json to_json(const AffineSubspace& a)
{
    json j;
    j["dim"] = a.dim();
    j["ambient_dim"] = a.ambient_dim();
    j["exact"] = a.exact();
    j["base"] = to_json(a.base());
    j["basis"] = to_json(a.basis());
    return j;
}

inline json to_json(const ClosedSubgroupDesc& d)
{
    json j;
    j["shape"] = to_string(d.shape);
    j["exact"] = d.exact;
    json basis = json::array();
    if (d.exact) {
        for (const auto& v : d.basis) basis.push_back(json::array({v.x.to_string(), v.y.to_string()}));
    } else {
        for (const auto& v : d.numeric) basis.push_back(json::array({v.real(), v.imag()}));
    }
    j["basis"] = basis;
    return j;
}

inline json to_json(const MultClosureDesc& m)
{
    json j;
    j["shape"] = to_string(m.shape);
    j["exact"] = m.exact;
    j["includes_zero"] = m.includes_zero;
    if (m.exact) {
        j["order"] = m.order;
        j["generator"] = m.generator ? json(m.generator->to_string()) : json(nullptr);
        j["modulus_sq_base"] = m.modulus_sq_base.get_str();
        j["twist"] = m.twist;
    } else {
        j["fill_fraction"] = m.fill_fraction;
        json g = json::array();
        for (double x : m.gap_history) g.push_back(to_json_value(x));
        j["gap_history"] = g;
    }
    return j;
}

inline json to_json(const G1Bounds& b)
{
    json j;
    j["center"] = to_json(b.center);
    json rot = json::array();
    for (const auto& r : b.rotations) rot.push_back(to_json(r));
    j["rotations"] = rot;
    j["inner"] = to_json(b.inner);
    j["outer"] = to_json(b.outer);
    j["outer_available"] = b.outer_available;
    j["outer_discrete"] = b.outer_discrete();
    j["outer_real_rank"] = b.outer_real_rank;
    j["harvested"] = b.sampled.size();
    j["harvest_truncated"] = b.harvest_truncated;
    j["pinned"] = b.pinned;
    j["exact"] = b.exact;
    j["inner_closure"] = b.inner_closure ? to_json(*b.inner_closure) : json(nullptr);
    j["outer_closure"] = b.outer_closure ? to_json(*b.outer_closure) : json(nullptr);
    return j;
}

inline json to_json(const GroupProfile& p)
{
    json j;
    j["exact"] = p.exact;
    j["nonabelian"] = std::string(to_string(is_nonabelian(p.spec)));
    j["ratio_flags"] = {
        {"has_nonreal_ratio", p.flags.has_nonreal_ratio},
        {"has_modulus_ne1", p.flags.has_modulus_ne1},
        {"rotation_class", to_string(p.flags.sr)},
        {"outside_SR", p.flags.outside_SR},
    };
    j["invariant_subspace"] = to_json(p.EG());
    j["invariant_subspace_seeds"] = to_json(p.eg.seeds);
    j["ratio_closure"] = to_json(p.lambda_closure);
    j["translation_closure"] = p.g1 ? to_json(*p.g1) : json(nullptr);
    j["notes"] = p.notes;
    return j;
}

inline json to_json(const ClosureDesc& c)
{
    json j;
    j["kind"] = to_string(c.kind);
    j["provenance"] = c.provenance;
    j["reason"] = c.reason;
    j["exact"] = c.exact;
    j["z"] = to_json(c.z);
    switch (c.kind) {
    case ClosureKind::WholeSpace:
    case ClosureKind::Affine: j["subspace"] = to_json(c.space); break;
    case ClosureKind::LambdaCone:
        // { e + alpha (z - apex) : e in E_G, alpha in the ratio closure }
        j["subspace"] = to_json(c.space);
        j["apex"] = to_json(c.apex);
        j["direction"] = to_json(c.z - c.apex);
        j["ratio_closure"] = to_json(c.lambda);
        break;
    case ClosureKind::RotationCoset: {
        json rot = json::array();
        for (const auto& r : c.rotations) rot.push_back(to_json(r));
        j["pinned"] = c.pinned;
        // apex + rho (z - apex) + cl(G1(0))
        j["centered"] = {{"apex", to_json(c.apex)}, {"offset", to_json(c.z - c.apex)}, {"rotations", rot}};
        // the same set after moving apex to the origin
        j["origin_form"] = {{"z", to_json(c.z - c.apex)}, {"rotations", rot}};
        j["translations"] = c.g1 ? to_json(*c.g1) : json(nullptr);
        break;
    }
    default: break;
    }
    return j;
}

inline json to_json(const Verdicts& v)
{
    json j;
    j["supported"] = v.supported;
    j["provenance"] = v.provenance;
    j["has_dense_orbit"] = std::string(to_string(v.has_dense_orbit));
    j["every_orbit_dense"] = std::string(to_string(v.every_orbit_dense));
    j["all_orbits_in_U_dense"] = std::string(to_string(v.all_orbits_in_U_dense));
    j["no_discrete_orbit"] = std::string(to_string(v.no_discrete_orbit));
    j["all_orbits_closed_discrete"] = std::string(to_string(v.all_orbits_closed_discrete));
    j["U_empty"] = v.U_empty;
    j["orbits_in_U_minimal"] = v.orbits_in_U_minimal;
    j["orbits_in_U_homeomorphic"] = v.orbits_in_U_homeomorphic;
    j["EG_in_every_closure"] = v.EG_in_every_closure;
    j["notes"] = v.notes;
    return j;
}

inline json to_json(const EvidenceReport& r)
{
    json j;
    j["sample_size"] = r.sample_size;
    j["sample_truncated"] = r.sample_truncated;
    j["points_in_window"] = r.points_in_window;
    j["chart_dim"] = r.chart_dim;
    j["grid_used"] = r.grid_used;
    j["cells_total"] = r.cells_total;
    j["cells_hit"] = r.cells_hit;
    j["fill_fraction"] = r.fill_fraction;
    j["min_gap"] = to_json_value(r.min_gap);
    json g = json::array();
    for (double x : r.gap_history) g.push_back(to_json_value(x));
    j["gap_history"] = g;
    j["max_violation"] = to_json_value(r.max_violation);
    j["exact_soundness"] = r.exact_soundness;
    j["undecided"] = r.undecided;
    j["soundness_pass"] = r.soundness_pass;
    j["expected"] = to_string(r.expected);
    j["evidence_pass"] = r.evidence_pass;
    j["notes"] = r.notes;
    return j;
}

inline json to_json(const Options& o)
{
    json c = json::array();
    for (const auto& x : o.window_center) c.push_back(json::array({x.real(), x.imag()}));
    return {
        {"word_cap", o.word_cap},       {"harvest_cap", o.harvest_cap},
        {"eps", o.eps},                 {"dedup", o.dedup},
        {"grid", o.grid},               {"budget", o.budget},
        {"require_exact", o.require_exact},
        {"window", {{"center", c}, {"half", o.window_half}}},
    };
}

inline json to_json(const GroupSpec& s)
{
    json g = json::array();
    for (const auto& h : s.generators) g.push_back(to_json(h));
    return {{"dim", s.dim}, {"exact", s.exact()}, {"generators", g}, {"options", to_json(s.options)}};
}

/// Canonical text of a report: sorted keys, two-space indent, trailing newline.
inline std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

/// One CSV row per orbit point: re(z1),im(z1),...,re(zn),im(zn),generation.
inline void write_csv(std::ostream& os, const OrbitSample& s)
{
    for (std::size_t k = 0; k < s.dim; ++k) os << (k ? "," : "") << "re(z" << k + 1 << "),im(z" << k + 1 << ")";
    os << ",generation\n";
    char buf[64];
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (const auto& c : s.points[i]) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,", c.real(), c.imag());
            os << buf;
        }
        os << s.generation[i] << "\n";
    }
}

} // namespace affhom
