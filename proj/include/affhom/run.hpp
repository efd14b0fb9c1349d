#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "closure.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "profile.hpp"
#include "verify.hpp"

namespace affhom {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,
    kExitUnsupported = 2,
    kExitUndecidable = 3,
    kExitMismatch = 4,
};

inline std::string status_name(int code)
{
    switch (code) {
    case kExitOk: return "ok";
    case kExitInput: return "input-error";
    case kExitUnsupported: return "unsupported";
    case kExitUndecidable: return "undecidable";
    default: return "verification-mismatch";
    }
}

struct RunResult {
    json report;
    int exit_code = kExitOk;
};

namespace detail {

inline json report_header(const std::string& command, const InputDoc& doc)
{
    json r;
    r["format"] = kReportFormat;
    r["command"] = command;
    r["input"] = to_json(doc.spec);
    r["profile"] = nullptr;
    r["verdicts"] = nullptr;
    r["points"] = json::array();
    r["message"] = "";
    return r;
}

inline RunResult finish(json report, int code, const std::string& message = "")
{
    report["exit_code"] = code;
    report["status"] = status_name(code);
    if (!message.empty()) report["message"] = message;
    return {std::move(report), code};
}

} // namespace detail

/// Profile, per-point closure descriptions and orbit-wide verdicts.
///
/// With `evidence` set, every point is also enumerated to word length
/// `word_cap` and checked against its closure.
inline RunResult analyse(const InputDoc& doc, bool evidence, int word_cap = -1)
{
    json r = detail::report_header(evidence ? "verify" : "classify", doc);
    const GroupSpec& spec = doc.spec;
    if (spec.options.require_exact) {
        bool exact = spec.exact();
        for (const auto& p : doc.points) exact = exact && is_exact(p);
        if (!exact) return detail::finish(std::move(r), kExitUndecidable, "exact arithmetic required but the input is approximate");
    }
    if (evidence && doc.points.empty()) throw InputError("verify needs at least one point");
    const int L = word_cap >= 0 ? word_cap : spec.options.effective_word_cap(spec.dim);
    try {
        const GroupProfile p = build_profile(spec);
        r["profile"] = to_json(p);
        const Verdicts v = global_verdicts(p);
        r["verdicts"] = to_json(v);
        bool unsupported = !v.supported;
        bool mismatch = false;
        for (const auto& z : doc.points) {
            const ClosureDesc c = orbit_closure(p, z);
            json entry;
            entry["closure"] = to_json(c);
            if (c.kind == ClosureKind::Unsupported) unsupported = true;
            if (evidence && c.kind != ClosureKind::Unsupported) {
                const OrbitSample s = enumerate(spec, z, L);
                const EvidenceReport e = verify(c, s, window_from(spec.options, spec.dim));
                entry["evidence"] = to_json(e);
                entry["word_cap"] = L;
                if (!e.soundness_pass || !e.evidence_pass) mismatch = true;
            }
            r["points"].push_back(std::move(entry));
        }
        if (unsupported) return detail::finish(std::move(r), kExitUnsupported, "all ratios are real; no closure description");
        if (mismatch) return detail::finish(std::move(r), kExitMismatch, "orbit sample disagrees with the closure description");
        return detail::finish(std::move(r), kExitOk);
    } catch (const UndecidableAtPrecision& e) {
        return detail::finish(std::move(r), kExitUndecidable, e.what());
    } catch (const UncertainZero& e) {
        return detail::finish(std::move(r), kExitUndecidable, e.what());
    }
}

/// One worked example run end to end: verdict check plus oracle evidence.
struct ExampleOutcome {
    std::string name;
    std::string expected;       // the stated outcome
    std::string observed;
    bool verdict_ok = false;
    double max_violation = 0.0;
    bool soundness_ok = false;
    double fill_fraction = 0.0;
    double min_gap = 0.0;
    bool evidence_ok = false;   // informational
    double seconds = 0.0;

    bool pass() const { return verdict_ok && soundness_ok; }
};

namespace detail {

inline Point basis_vector(std::size_t n, std::size_t k)
{
    Point e(n, Scalar(0));
    e[k] = Scalar(1);
    return e;
}

inline ExampleOutcome run_example(std::string name, std::string expected, const GroupSpec& spec, const Point& z, int L,
                                  bool want_dense)
{
    const auto t0 = std::chrono::steady_clock::now();
    ExampleOutcome o;
    o.name = std::move(name);
    o.expected = std::move(expected);
    const GroupProfile p = build_profile(spec);
    const Verdicts v = global_verdicts(p);
    if (want_dense) {
        o.verdict_ok = v.every_orbit_dense == Tri::Yes;
        o.observed = "every_orbit_dense=" + std::string(to_string(v.every_orbit_dense));
    } else {
        o.verdict_ok = v.all_orbits_closed_discrete == Tri::Yes;
        o.observed = "all_orbits_closed_discrete=" + std::string(to_string(v.all_orbits_closed_discrete));
    }
    const ClosureDesc c = orbit_closure(p, z);
    o.observed += ", closure=" + to_string(c.kind);
    const OrbitSample s = enumerate(spec, z, L);
    const EvidenceReport e = verify(c, s, window_from(spec.options, spec.dim));
    o.max_violation = e.max_violation;
    o.soundness_ok = e.soundness_pass;
    o.fill_fraction = e.fill_fraction;
    o.min_gap = e.min_gap;
    o.evidence_ok = e.evidence_pass;
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

} // namespace detail

/// The classical examples: a translation with a rotation about 0 in C
/// (crystallographic and irrational angle), three spirals in C^2 with
/// irrational centers, and n independent translations with a spiral.
inline std::vector<ExampleOutcome> run_worked_examples()
{
    std::vector<ExampleOutcome> out;
    const Point z1 = {parse_scalar("1/3+1/7i")};
    {
        const GroupSpec s(1, {Homothety::translation({Scalar(1)}), Homothety::from_center(parse_scalar("i"), {Scalar(0)})});
        out.push_back(detail::run_example("translation + quarter turn", "every orbit closed and discrete", s, z1, 10, false));
    }
    {
        const GroupSpec s(1, {Homothety::translation({Scalar(1)}),
                              Homothety::from_center(parse_scalar("exp(i*1.0)"), {Scalar(0)})});
        out.push_back(detail::run_example("translation + rotation by 1 rad", "every orbit dense in C", s, z1, 14, true));
    }
    {
        const GroupSpec s(2,
                          {Homothety::from_center(parse_scalar("2i"), {parse_scalar("sqrt(2)"), Scalar(0)}),
                           Homothety::from_center(parse_scalar("1+i"), {Scalar(0), Scalar(1)}),
                           Homothety::from_center(parse_scalar("-1+2i"), {parse_scalar("-sqrt(3)"), parse_scalar("-sqrt(2)")})});
        out.push_back(detail::run_example("three spirals in C^2, irrational centers", "every orbit dense in C^2", s,
                                          {parse_scalar("1/3"), parse_scalar("1/7i")}, 9, true));
    }
    for (std::size_t n : {2u, 3u}) {
        std::vector<Homothety> gens;
        for (std::size_t k = 0; k < n; ++k) gens.push_back(Homothety::translation(detail::basis_vector(n, k)));
        gens.push_back(Homothety::from_center(parse_scalar("2i"), Point(n, Scalar(0))));
        Point z(n, Scalar(0));
        z[0] = parse_scalar("1/3+1/7i");
        out.push_back(detail::run_example("translation basis + 2i spiral, n=" + std::to_string(n),
                                          "every orbit dense in C^" + std::to_string(n), GroupSpec(n, gens), z,
                                          n == 2 ? 9 : 7, true));
    }
    return out;
}

} // namespace affhom
