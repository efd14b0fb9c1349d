// Command-line front end: classify, orbit, verify, paper-examples.
//
// Exit codes: 0 ok, 1 malformed input, 2 unsupported case (real ratios),
// 3 undecidable at the working precision, 4 verification mismatch.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "affhom/io.hpp"
#include "affhom/oracle.hpp"
#include "affhom/run.hpp"

namespace fs = std::filesystem;
using namespace affhom;

namespace {

struct RunConfig {
    std::string input;
    std::vector<std::string> points;
    std::optional<int> word_cap;
    std::optional<double> eps;
    std::optional<std::string> window;
    std::optional<int> grid;
    std::string out;
    bool exact = false;
};

void add_common(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--input", cfg.input, "input document (JSON)")->required()->check(CLI::ExistingFile);
    cmd->add_option("--point", cfg.points, "point as comma-separated coordinates; replaces the input points");
    cmd->add_option("--word-cap", cfg.word_cap, "word length for orbit enumeration")->check(CLI::NonNegativeNumber);
    cmd->add_option("--eps", cfg.eps, "tolerance for approximate decisions");
    cmd->add_option("--window", cfg.window, "window as HALF or C1,...,CN:HALF");
    cmd->add_option("--grid", cfg.grid, "cells per real axis of the window");
    cmd->add_option("--out", cfg.out, "output directory (default: standard output)");
    cmd->add_flag("--exact", cfg.exact, "fail unless all arithmetic is exact");
}

InputDoc load(const RunConfig& cfg)
{
    InputDoc doc = read_input_file(cfg.input);
    Options& o = doc.spec.options;
    const std::size_t n = doc.spec.dim;
    if (cfg.word_cap) o.word_cap = *cfg.word_cap;
    if (cfg.eps) o.eps = *cfg.eps;
    if (cfg.grid) o.grid = *cfg.grid;
    if (cfg.exact) o.require_exact = true;
    if (cfg.window) {
        const std::string& w = *cfg.window;
        const auto colon = w.rfind(':');
        const std::string half = colon == std::string::npos ? w : w.substr(colon + 1);
        try {
            o.window_half = std::stod(half);
        } catch (const std::exception&) {
            throw InputError("bad window half-width '" + half + "'");
        }
        if (colon != std::string::npos) {
            o.window_center.clear();
            for (const auto& s : parse_point_arg(w.substr(0, colon), n)) o.window_center.push_back(s.to_complex());
        }
    }
    if (!cfg.points.empty()) {
        doc.points.clear();
        for (const auto& p : cfg.points) doc.points.push_back(parse_point_arg(p, n));
    }
    doc.spec.validate();
    return doc;
}

void emit(const RunConfig& cfg, const std::string& file, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    fs::create_directories(cfg.out);
    const fs::path path = fs::path(cfg.out) / file;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InputError("cannot write '" + path.string() + "'");
    os << text;
    std::cerr << "wrote " << path.string() << "\n";
}

int cmd_report(const RunConfig& cfg, bool evidence)
{
    const InputDoc doc = load(cfg);
    const RunResult r = analyse(doc, evidence, cfg.word_cap.value_or(-1));
    emit(cfg, "report.json", dump_report(r.report));
    if (r.exit_code != kExitOk) std::cerr << "affhom: " << r.report["status"].get<std::string>() << ": " << r.report["message"].get<std::string>() << "\n";
    return r.exit_code;
}

int cmd_orbit(const RunConfig& cfg)
{
    const InputDoc doc = load(cfg);
    if (doc.points.size() != 1) throw InputError("orbit takes exactly one point; use --point");
    if (doc.spec.options.require_exact && !(doc.spec.exact() && is_exact(doc.points[0]))) {
        std::cerr << "affhom: exact arithmetic required but the input is approximate\n";
        return kExitUndecidable;
    }
    const int L = cfg.word_cap.value_or(doc.spec.options.effective_word_cap(doc.spec.dim));
    const OrbitSample s = enumerate(doc.spec, doc.points[0], L);
    std::ostringstream os;
    write_csv(os, s);
    emit(cfg, "orbit.csv", os.str());
    if (s.truncated) std::cerr << "affhom: point budget reached; generation " << s.complete_generations + 1 << " is partial\n";
    return kExitOk;
}

int cmd_paper_examples()
{
    int k = 0;
    int passed = 0;
    for (const auto& o : run_worked_examples()) {
        ++k;
        passed += o.pass() ? 1 : 0;
        std::printf("[%s] example %d: %s\n", o.pass() ? "PASS" : "FAIL", k, o.name.c_str());
        std::printf("       expected: %s; observed: %s\n", o.expected.c_str(), o.observed.c_str());
        std::printf("       oracle: max_violation=%.3g fill=%.4f min_gap=%.6g evidence=%s (%.2fs)\n", o.max_violation,
                    o.fill_fraction, o.min_gap, o.evidence_ok ? "pass" : "weak", o.seconds);
    }
    std::printf("%d/%d examples pass\n", passed, k);
    return passed == k ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Orbit closures of groups of complex homotheties"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto* classify = app.add_subcommand("classify", "profile, orbit closures and verdicts as a JSON report");
    auto* orbit = app.add_subcommand("orbit", "enumerate an orbit to CSV");
    auto* verify = app.add_subcommand("verify", "classify and check the closures against enumerated orbits");
    auto* examples = app.add_subcommand("paper-examples", "run the worked examples and print pass/fail");
    add_common(classify, cfg);
    add_common(orbit, cfg);
    add_common(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }
    try {
        if (classify->parsed()) return cmd_report(cfg, false);
        if (verify->parsed()) return cmd_report(cfg, true);
        if (orbit->parsed()) return cmd_orbit(cfg);
        if (examples->parsed()) return cmd_paper_examples();
    } catch (const UndecidableAtPrecision& e) {
        std::cerr << "affhom: " << e.what() << "\n";
        return kExitUndecidable;
    } catch (const InputError& e) {
        std::cerr << "affhom: " << e.what() << "\n";
        return kExitInput;
    } catch (const AbelianGroup& e) {
        std::cerr << "affhom: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "affhom: error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
