// Acceptance run: one PASS/FAIL line per criterion, exit 0 only if all pass.
//
// usage: acceptance <path to test_properties>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "affhom/closure.hpp"
#include "affhom/oracle.hpp"
#include "affhom/parse.hpp"
#include "affhom/profile.hpp"
#include "affhom/run.hpp"
#include "affhom/verify.hpp"

using namespace affhom;

namespace {

// pinned tolerances and budgets
constexpr double kGapTol = 1e-12;
constexpr double kDenseFill = 0.9;
constexpr double kRotationPairFill = 0.95;
constexpr double kConeViolation = 1e-9;
constexpr double kConeApproach = 1e-2;
constexpr double kSparseFill = 0.2;
constexpr double kCaseSeconds = 60.0;
constexpr double kPropertySeconds = 300.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
    bool ok = true;
    std::ostringstream log;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            log << "    failed: " << what << "\n";
        }
    }
};

Scalar S(const std::string& s) { return parse_scalar(s); }

// Im(conj(x) y), the oriented area spanned by x and y
QSqrt3 cross(const CycloScalar& x, const CycloScalar& y) { return (x.conj() * y).imag_part(); }

// w in Z u + Z v, by Cramer's rule
bool in_lattice(const CycloScalar& w, const CycloScalar& u, const CycloScalar& v)
{
    const QSqrt3 det = cross(u, v);
    return (cross(w, v) / det).is_integer() && (cross(u, w) / det).is_integer();
}

// shortest nonzero vector of Z u + Z v by exhaustion over small coefficients
double shortest_vector(std::complex<double> u, std::complex<double> v)
{
    double best = std::numeric_limits<double>::infinity();
    for (int a = -6; a <= 6; ++a) {
        for (int b = -6; b <= 6; ++b) {
            if (a != 0 || b != 0) best = std::min(best, std::abs(static_cast<double>(a) * u + static_cast<double>(b) * v));
        }
    }
    return best;
}

// rotation of ratio r about 0 and of ratio s about 1
GroupSpec rotation_pair(const Scalar& r, const Scalar& s)
{
    return GroupSpec(1, {Homothety::from_center(r, {Scalar(0)}), Homothety::from_center(s, {Scalar(1)})});
}

struct Crystal {
    const char* label;
    const char* ratio;
    double gap;  // expected shortest translation
};

const Crystal kCrystals[] = {{"pi/2", "i", std::sqrt(2.0)}, {"pi/3", "zeta12^2", 1.0}, {"2pi/3", "zeta12^4", std::sqrt(3.0)}};

void criterion_dichotomy(Check& c)
{
    for (const auto& k : kCrystals) {
        const auto t0 = Clock::now();
        const GroupSpec spec = rotation_pair(S(k.ratio), S(k.ratio));
        const GroupProfile p = build_profile(spec);
        const Verdicts v = global_verdicts(p);
        c.require(v.all_orbits_closed_discrete == Tri::Yes, std::string(k.label) + ": all_orbits_closed_discrete");
        const CycloScalar r = S(k.ratio).exact();
        const CycloScalar u = CycloScalar(1) - r.conj(), w = CycloScalar(1) - r;
        const Point zero = {Scalar(0)};
        const OrbitSample s = enumerate(spec, zero, 10);
        bool inside = s.exact;
        for (const auto& q : s.exact_points) inside = inside && in_lattice(q[0], u, w);
        c.require(inside, std::string(k.label) + ": orbit of 0 in the lattice");
        const EvidenceReport e = verify(orbit_closure(p, zero), s, window_from(spec.options, 1));
        const double oracle = shortest_vector(u.to_complex(), w.to_complex());
        c.require(std::abs(oracle - k.gap) <= kGapTol, std::string(k.label) + ": short-vector oracle");
        c.require(e.max_violation == 0.0 && e.exact_soundness, std::string(k.label) + ": exact soundness");
        bool steady = e.gap_history.size() > 6;
        for (std::size_t g = 6; steady && g < e.gap_history.size(); ++g) steady = std::abs(e.gap_history[g] - oracle) <= kGapTol;
        c.require(steady, std::string(k.label) + ": gap history settles at the shortest vector");
        const double secs = since(t0);
        c.require(secs <= kCaseSeconds, std::string(k.label) + ": time");
        c.log << "    theta=" << k.label << " discrete: points=" << s.size() << " min_gap=" << e.min_gap
              << " oracle=" << oracle << " (" << secs << "s)\n";
    }
    const Point z = {S("1/3+1/7i")};
    for (const char* ratio : {"exp(i*pi/4)", "exp(i*pi/5)", "exp(i*1.0)"}) {
        const auto t0 = Clock::now();
        const GroupSpec spec = rotation_pair(S(ratio), S(ratio));
        const GroupProfile p = build_profile(spec);
        c.require(global_verdicts(p).every_orbit_dense == Tri::Yes, std::string(ratio) + ": every_orbit_dense");
        const Window win = window_from(spec.options, 1);
        const EvidenceReport e = verify(orbit_closure(p, z), enumerate(spec, z, 14), win);
        const double zero_fill = window_fill(enumerate(spec, {Scalar(0)}, 14, true), win).fill_fraction;
        c.require(e.soundness_pass, std::string(ratio) + ": soundness");
        c.require(e.fill_fraction >= kDenseFill, std::string(ratio) + ": fill");
        const double secs = since(t0);
        c.require(secs <= kCaseSeconds, std::string(ratio) + ": time");
        c.log << "    " << ratio << " dense: fill=" << e.fill_fraction << " orbit-of-0 fill=" << zero_fill << " (" << secs
              << "s)\n";
    }
}

void criterion_sandwich(Check& c)
{
    for (const auto& k : kCrystals) {
        const GroupSpec spec = rotation_pair(S(k.ratio), S(k.ratio));
        const GroupProfile p = build_profile(spec);
        const CycloScalar r = S(k.ratio).exact();
        const CycloScalar u = CycloScalar(1) - r.conj(), w = CycloScalar(1) - r;
        const HarvestResult h = harvest_translations(spec, 10);
        c.require(h.exact && !h.truncated, std::string(k.label) + ": exact, complete harvest");
        c.require(p.g1 && p.g1->outer_closure, std::string(k.label) + ": outer bound available");
        bool member = true;
        bool has_u = false, has_w = false;
        for (const auto& t : h.translations) {
            const CycloScalar x = t[0].exact();
            member = member && in_lattice(x, u, w) && p.g1->outer_closure->contains(x) == Tri::Yes;
            has_u = has_u || x == u * u;
            has_w = has_w || x == w * w;
        }
        c.require(member, std::string(k.label) + ": harvested translations in the outer lattice");
        c.require(has_u && has_w, std::string(k.label) + ": inner generators harvested");
        c.log << "    theta=" << k.label << ": translations=" << h.translations.size() << " maps=" << h.maps_visited << "\n";
    }
}

void criterion_rotation_pairs(Check& c)
{
    {
        const auto t0 = Clock::now();
        const RotationPairResult r = rotation_pair_classify(S("i"), S("zeta12^2"), Scalar(0), Scalar(1));
        c.require(r.kind == RotationPairKind::AllDense, "(i, e^{i pi/3}): AllDense");
        const GroupSpec spec = rotation_pair(S("i"), S("zeta12^2"));
        const Point z = {S("1/3+1/7i")};
        const double fill = window_fill(enumerate(spec, z, 18, true), window_from(spec.options, 1)).fill_fraction;
        c.require(fill >= kRotationPairFill, "(i, e^{i pi/3}): fill");
        const double secs = since(t0);
        c.require(secs <= kCaseSeconds, "(i, e^{i pi/3}): time");
        c.log << "    (i, e^{i pi/3}) " << to_string(r.kind) << ": fill=" << fill << " (" << secs << "s)\n";
    }
    {
        const auto t0 = Clock::now();
        const RotationPairResult r = rotation_pair_classify(S("i"), S("i"), Scalar(0), Scalar(1));
        c.require(r.kind == RotationPairKind::AllClosedDiscrete && r.lattice, "(i, i): AllClosedDiscrete");
        const CycloScalar u = S("1+i").exact(), w = S("1-i").exact();
        const GroupSpec spec = rotation_pair(S("i"), S("i"));
        const Point zero = {Scalar(0)};
        const OrbitSample s = enumerate(spec, zero, 10);
        bool inside = s.exact;
        for (const auto& q : s.exact_points) {
            inside = inside && in_lattice(q[0], u, w) && r.lattice && r.lattice->contains(q[0]) == Tri::Yes;
        }
        c.require(inside, "(i, i): orbit of 0 in the lattice");
        const EvidenceReport e = verify(orbit_closure(build_profile(spec), zero), s, window_from(spec.options, 1));
        const double oracle = shortest_vector(u.to_complex(), w.to_complex());
        c.require(std::abs(e.min_gap - oracle) <= kGapTol, "(i, i): min gap");
        const double secs = since(t0);
        c.require(secs <= kCaseSeconds, "(i, i): time");
        c.log << "    (i, i) " << to_string(r.kind) << ": min_gap=" << e.min_gap << " oracle=" << oracle << " (" << secs
              << "s)\n";
    }
}

void criterion_cone(Check& c)
{
    const GroupSpec spec(2, {Homothety::from_center(S("2i"), {Scalar(0), Scalar(0)}),
                             Homothety::from_center(S("2i"), {Scalar(1), Scalar(0)})});
    const GroupProfile p = build_profile(spec);
    const AffineSubspace& eg = p.EG();
    c.require(eg.dim() == 1 && eg.contains({Scalar(0), Scalar(0)}) == Tri::Yes && eg.contains({S("i"), Scalar(0)}) == Tri::Yes &&
                  eg.contains({Scalar(0), Scalar(1)}) == Tri::No,
              "E_G is C x {0}");
    const Point z = {Scalar(0), Scalar(1)};
    const ClosureDesc cl = orbit_closure(p, z);
    c.require(cl.kind == ClosureKind::LambdaCone, "closure is a cone");
    const OrbitSample s = enumerate(spec, z, 10);
    double violation = 0.0;
    for (const auto& q : s.points) violation = std::max(violation, cl.distance(q));
    for (const auto& q : s.exact_points) {
        if (cl.contains(to_scalar(q)) != Tri::Yes) violation = std::max(violation, 1.0);
    }
    c.require(violation <= kConeViolation, "orbit points in the cone");
    c.log << "    orbit points=" << s.size() << " max violation=" << violation << "\n";

    std::vector<NumPoint> targets;
    for (const auto& e : cl.base_points(200, 7)) {
        const NumPoint q = to_numeric(e);
        if (std::abs(q[0].real()) <= 2 && std::abs(q[0].imag()) <= 2) targets.push_back(q);
        if (targets.size() == 20) break;
    }
    c.require(targets.size() == 20, "enough base points in the window");
    double previous = std::numeric_limits<double>::infinity();
    double last = previous;
    for (int L : {12, 16, 20, 24}) {
        const auto t0 = Clock::now();
        const ApproachResult a = orbit_approach(spec, z, targets, L);
        double worst = 0.0;
        for (double d : a.distance) worst = std::max(worst, d);
        c.require(!a.truncated, "L=" + std::to_string(L) + ": complete enumeration");
        c.require(worst <= previous, "L=" + std::to_string(L) + ": distance does not grow");
        c.log << "    L=" << L << ": worst distance from E_G points=" << worst << " (" << since(t0) << "s)\n";
        previous = last = worst;
    }
    c.require(last <= kConeApproach, "E_G approached");
}

void criterion_examples(Check& c)
{
    for (const auto& o : run_worked_examples()) {
        c.require(o.pass(), o.name);
        c.log << "    " << (o.pass() ? "pass" : "FAIL") << " " << o.name << ": " << o.observed << " violation=" << o.max_violation
              << " (" << o.seconds << "s)\n";
    }
}

void criterion_sparse(Check& c)
{
    static const char* menu[] = {"i", "2i", "1+i", "-1+2i", "zeta12", "3*zeta12^2", "1/2+i"};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, 6), coord(-3, 3);
        auto gaussian = [&] { return S(std::to_string(coord(rng)) + "/2+" + std::to_string(coord(rng)) + "/3i"); };
        auto draw = [&] {
            std::vector<Homothety> gens;
            for (int k = 0; k < 2; ++k) {
                Point center;
                for (int j = 0; j < 4; ++j) center.push_back(gaussian());
                gens.push_back(Homothety::from_center(S(menu[pick(rng)]), center));
            }
            return GroupSpec(4, gens);
        };
        GroupSpec spec = draw();
        while (is_nonabelian(spec) != Tri::Yes) spec = draw();
        const Verdicts v = global_verdicts(build_profile(spec));
        Point z;
        for (int j = 0; j < 4; ++j) z.push_back(gaussian());
        const EvidenceReport e = window_fill(enumerate(spec, z, 8, true), window_from(spec.options, 4));
        c.require(v.has_dense_orbit == Tri::No, "seed " + std::to_string(seed) + ": has_dense_orbit");
        c.require(e.fill_fraction < kSparseFill, "seed " + std::to_string(seed) + ": fill");
        c.log << "    seed " << seed << ": has_dense_orbit=" << to_string(v.has_dense_orbit) << " fill=" << e.fill_fraction
              << " (grid " << e.grid_used << ", points " << e.sample_size << ")\n";
    }
}

void criterion_properties(Check& c, const std::string& binary)
{
    const auto t0 = Clock::now();
    const int status = std::system((binary + " --gtest_brief=1 > /dev/null").c_str());
    const double secs = since(t0);
    c.require(status == 0, "property suite exit status " + std::to_string(status));
    c.require(secs <= kPropertySeconds, "property suite time");
    c.log << "    " << binary << ": status=" << status << " (" << secs << "s)\n";
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <test_properties binary>\n");
        return 2;
    }
    const std::string properties = argv[1];
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"crystallographic rotation pairs are discrete, others dense", criterion_dichotomy},
        {"harvested translations lie between the lattice bounds", criterion_sandwich},
        {"rotation pairs (i, e^{i pi/3}) dense and (i, i) discrete", criterion_rotation_pairs},
        {"spiral pair in C^2 has a cone closure reaching E_G", criterion_cone},
        {"worked examples", criterion_examples},
        {"two generators in C^4 have no dense orbit", criterion_sparse},
        {"randomized property suite", [&](Check& c) { criterion_properties(c, properties); }},
    };
    int failed = 0;
    int k = 0;
    for (const auto& [name, run] : criteria) {
        ++k;
        Check c;
        const auto t0 = Clock::now();
        try {
            run(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        std::printf("[%s] criterion %d: %s (%.1fs)\n", c.ok ? "PASS" : "FAIL", k, name.c_str(), since(t0));
        std::fputs(c.log.str().c_str(), stdout);
        std::fflush(stdout);
        failed += c.ok ? 0 : 1;
    }
    std::printf("%d/%d criteria pass\n", k - failed, k);
    return failed == 0 ? 0 : 1;
}
