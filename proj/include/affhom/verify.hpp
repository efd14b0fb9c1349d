#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_set>
#include <vector>

#include "closure.hpp"
#include "oracle.hpp"

namespace affhom {

/// Window of C^n: the cube of half-width `half` around `center` in the
/// real coordinates, cut into `grid` cells per real axis.
struct Window {
    NumPoint center;
    double half = 2.0;
    int grid = 40;
    // Upper bound on the number of cells; the per-axis resolution is
    // lowered in high chart dimension to stay below it.
    std::size_t max_cells = 40000;
};

inline Window window_from(const Options& o, std::size_t n)
{
    Window w;
    w.center = o.window_center.empty() ? NumPoint(n, 0.0) : o.window_center;
    if (w.center.size() != n) throw DimensionMismatch();
    w.half = o.window_half;
    w.grid = o.grid;
    return w;
}

enum class EvidenceClass { Dense, Discrete, None };

inline std::string to_string(EvidenceClass e)
{
    switch (e) {
    case EvidenceClass::Dense: return "dense";
    case EvidenceClass::Discrete: return "discrete";
    default: return "none";
    }
}

struct EvidenceReport {
    std::size_t sample_size = 0;
    bool sample_truncated = false;
    std::size_t points_in_window = 0;
    int chart_dim = 0;        // real dimension of the chart the fill is measured in
    int grid_used = 0;        // cells per real axis actually used
    std::size_t cells_total = 0;
    std::size_t cells_hit = 0;
    double fill_fraction = 0.0;
    double min_gap = std::numeric_limits<double>::infinity();
    std::vector<double> gap_history;  // min gap of points with generation <= k
    double max_violation = 0.0;
    bool exact_soundness = false;     // every point decided by exact membership
    std::size_t undecided = 0;        // points whose membership stayed unknown
    bool soundness_pass = false;
    EvidenceClass expected = EvidenceClass::None;
    bool evidence_pass = true;
    std::vector<std::string> notes;
};

struct VerifyThresholds {
    double violation = 1e-9;
    double fill = 0.9;
    int stable_generations = 3;
};

namespace detail {

// Smallest pairwise distance by a sweep along the first real coordinate.
inline double min_pairwise(std::vector<NumPoint> pts)
{
    if (pts.size() < 2) return std::numeric_limits<double>::infinity();
    std::sort(pts.begin(), pts.end(), [](const NumPoint& a, const NumPoint& b) { return a[0].real() < b[0].real(); });
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[j][0].real() - pts[i][0].real() >= best) break;
            const double d = distance(pts[i], pts[j]);
            if (d > 0.0) best = std::min(best, d);
        }
    }
    return best;
}

inline bool in_window(const NumPoint& p, const Window& w)
{
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (std::abs(p[k].real() - w.center[k].real()) > w.half) return false;
        if (std::abs(p[k].imag() - w.center[k].imag()) > w.half) return false;
    }
    return true;
}

} // namespace detail

/// What the oracle should see for a closure: dense when the closure is an
/// affine subspace (or the plane-filling coset in C), discrete when the
/// closure is a finite union of lattice cosets, nothing otherwise.
inline EvidenceClass expected_evidence(const ClosureDesc& c)
{
    switch (c.kind) {
    case ClosureKind::WholeSpace:
    case ClosureKind::Affine: return c.space.dim() > 0 ? EvidenceClass::Dense : EvidenceClass::Discrete;
    case ClosureKind::RotationCoset: {
        if (!c.g1) return EvidenceClass::None;
        const G1Bounds& b = *c.g1;
        if (b.outer_available && b.outer_discrete()) return EvidenceClass::Discrete;
        if (c.dim == 1 && b.outer_closure && b.outer_closure->is_discrete()) return EvidenceClass::Discrete;
        if (c.dim == 1 && b.inner_closure && b.inner_closure->shape == SubgroupShape::Plane) return EvidenceClass::Dense;
        return EvidenceClass::None;
    }
    default: return EvidenceClass::None;
    }
}

/// Compares an orbit sample with a closure description.
///
/// Soundness uses exact membership when both are exact (violation 0 or the
/// numeric distance of a rejected point) and the numeric distance otherwise.
/// Fill is measured in the orthonormal chart of the closure's subspace,
/// centred at the projection of the window centre; for a coset in C it is
/// measured in the window itself. The gap history is taken over the points
/// inside the window.
inline EvidenceReport verify(const ClosureDesc& c, const OrbitSample& s, const Window& w,
                             const VerifyThresholds& th = {})
{
    if (s.size() == 0) throw InputError("empty orbit sample");
    if (w.center.size() != c.dim) throw DimensionMismatch();
    EvidenceReport r;
    r.sample_size = s.size();
    r.sample_truncated = s.truncated;
    r.expected = expected_evidence(c);

    // soundness
    r.exact_soundness = s.exact && c.exact;
    for (std::size_t k = 0; k < s.size(); ++k) {
        double v = 0.0;
        if (r.exact_soundness) {
            const Tri t = c.contains(to_scalar(s.exact_points[k]));
            if (t == Tri::Yes) continue;
            if (t == Tri::Unknown) ++r.undecided;
            v = c.distance(s.points[k]);
            if (t == Tri::No && !(v > 0.0)) v = std::numeric_limits<double>::min();
        } else {
            v = c.distance(s.points[k]);
        }
        if (std::isnan(v)) {
            ++r.undecided;
            continue;
        }
        r.max_violation = std::max(r.max_violation, v);
    }
    if (r.exact_soundness && r.undecided > 0) {
        r.exact_soundness = false;
        r.notes.push_back("some memberships undecided; numeric distance used");
    }
    r.soundness_pass = r.exact_soundness ? r.max_violation == 0.0 : r.max_violation <= th.violation;
    if (c.kind == ClosureKind::Unsupported) {
        r.soundness_pass = false;
        r.notes.push_back("no closure description to verify against");
    }

    // window points and the gap history
    std::vector<NumPoint> inside;
    std::vector<int> gens;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (detail::in_window(s.points[k], w)) {
            inside.push_back(s.points[k]);
            gens.push_back(s.generation[k]);
        }
    }
    r.points_in_window = inside.size();
    const int last = s.complete_generations + (s.truncated ? 1 : 0);
    for (int g = 0; g <= last; ++g) {
        std::vector<NumPoint> upto;
        for (std::size_t k = 0; k < inside.size(); ++k) {
            if (gens[k] <= g) upto.push_back(inside[k]);
        }
        r.gap_history.push_back(detail::min_pairwise(std::move(upto)));
    }
    r.min_gap = r.gap_history.empty() ? std::numeric_limits<double>::infinity() : r.gap_history.back();

    // fill in the chart of the closure trace
    std::vector<std::vector<double>> chart;
    const double half = w.half;
    if (c.kind == ClosureKind::WholeSpace || c.kind == ClosureKind::Affine) {
        const AffineSubspace& e = c.space;
        // chart origin: projection of the window centre onto the subspace
        const auto centre = e.chart(w.center);
        for (const auto& p : inside) {
            const auto q = e.chart(p);
            std::vector<double> x;
            for (std::size_t k = 0; k < q.size(); ++k) {
                x.push_back(q[k].real() - centre[k].real());
                x.push_back(q[k].imag() - centre[k].imag());
            }
            chart.push_back(std::move(x));
        }
        r.chart_dim = static_cast<int>(2 * e.dim());
    } else if (c.kind == ClosureKind::RotationCoset && c.dim == 1) {
        for (const auto& p : inside) chart.push_back({p[0].real() - w.center[0].real(), p[0].imag() - w.center[0].imag()});
        r.chart_dim = 2;
    }
    if (r.chart_dim > 0) {
        int g = w.grid;
        while (g > 2 && std::pow(static_cast<double>(g), r.chart_dim) > static_cast<double>(w.max_cells)) --g;
        r.grid_used = g;
        r.cells_total = 1;
        for (int k = 0; k < r.chart_dim; ++k) r.cells_total *= static_cast<std::size_t>(g);
        std::unordered_set<std::uint64_t> hit;
        const double cell = 2.0 * half / g;
        for (const auto& x : chart) {
            std::uint64_t key = 0;
            bool ok = true;
            for (double t : x) {
                const long idx = static_cast<long>(std::floor((t + half) / cell));
                if (idx < 0 || idx >= g) {
                    ok = false;
                    break;
                }
                key = key * static_cast<std::uint64_t>(g) + static_cast<std::uint64_t>(idx);
            }
            if (ok) hit.insert(key);
        }
        r.cells_hit = hit.size();
        r.fill_fraction = static_cast<double>(r.cells_hit) / static_cast<double>(r.cells_total);
        if (g < w.grid) r.notes.push_back("grid coarsened to " + std::to_string(g) + " cells per axis");
    }

    switch (r.expected) {
    case EvidenceClass::Dense: r.evidence_pass = r.fill_fraction >= th.fill; break;
    case EvidenceClass::Discrete: {
        const int h = static_cast<int>(r.gap_history.size());
        r.evidence_pass = h >= th.stable_generations && std::isfinite(r.gap_history.back());
        for (int k = h - th.stable_generations; r.evidence_pass && k < h; ++k) {
            if (r.gap_history[k] != r.gap_history.back()) r.evidence_pass = false;
        }
        break;
    }
    default: r.evidence_pass = true; break;
    }
    return r;
}

/// Fill fraction of the full-dimensional window by the sample, regardless
/// of any closure description.
inline EvidenceReport window_fill(const OrbitSample& s, const Window& w)
{
    EvidenceReport r;
    r.sample_size = s.size();
    r.chart_dim = static_cast<int>(2 * s.dim);
    int g = w.grid;
    while (g > 2 && std::pow(static_cast<double>(g), r.chart_dim) > static_cast<double>(w.max_cells)) --g;
    r.grid_used = g;
    r.cells_total = 1;
    for (int k = 0; k < r.chart_dim; ++k) r.cells_total *= static_cast<std::size_t>(g);
    std::unordered_set<std::uint64_t> hit;
    const double cell = 2.0 * w.half / g;
    for (const auto& p : s.points) {
        if (!detail::in_window(p, w)) continue;
        ++r.points_in_window;
        std::uint64_t key = 0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            for (double t : {p[k].real() - w.center[k].real(), p[k].imag() - w.center[k].imag()}) {
                const long idx = std::clamp(static_cast<long>(std::floor((t + w.half) / cell)), 0L, static_cast<long>(g - 1));
                key = key * static_cast<std::uint64_t>(g) + static_cast<std::uint64_t>(idx);
            }
        }
        hit.insert(key);
    }
    r.cells_hit = hit.size();
    r.fill_fraction = static_cast<double>(r.cells_hit) / static_cast<double>(r.cells_total);
    return r;
}

} // namespace affhom
