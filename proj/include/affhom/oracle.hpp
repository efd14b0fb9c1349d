#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

#include "homothety.hpp"
#include "rational.hpp"
#include "spec.hpp"

namespace affhom {

/// Orbit points reached by words of length <= word_cap, in breadth-first
/// order (generation, then parent order, then generator order with each
/// generator followed by its inverse).
struct OrbitSample {
    std::size_t dim = 0;
    bool exact = false;
    bool truncated = false;
    int word_cap = 0;
    int complete_generations = 0;
    std::vector<ExactPoint> exact_points;
    std::vector<NumPoint> points;
    std::vector<int> generation;

    std::size_t size() const { return points.size(); }
};

namespace detail {

struct ExactPointHash {
    std::size_t operator()(const ExactPoint& p) const
    {
        std::size_t h = p.size();
        for (const auto& x : p) h = hash_combine(h, x.hash());
        return h;
    }
};

struct ExactMapHash {
    std::size_t operator()(const ExactHomothety& f) const
    {
        return hash_combine(f.ratio().hash(), ExactPointHash{}(f.shift()));
    }
};

struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& k) const
    {
        std::size_t h = k.size();
        for (auto x : k) h = hash_combine(h, std::hash<std::int64_t>{}(x));
        return h;
    }
};

inline void grid_key(std::vector<std::int64_t>& key, const NumPoint& p, double cell)
{
    for (const auto& x : p) {
        key.push_back(static_cast<std::int64_t>(std::llround(x.real() / cell)));
        key.push_back(static_cast<std::int64_t>(std::llround(x.imag() / cell)));
    }
}

template <class H>
std::vector<H> alphabet(const std::vector<H>& gens)
{
    std::vector<H> out;
    for (const auto& g : gens) {
        out.push_back(g);
        out.push_back(g.inverse());
    }
    return out;
}

} // namespace detail

/// Breadth-first orbit of z up to word length L.
///
/// Deduplication is exact when generators and z are exact (and `numeric`
/// is false); otherwise points are identified on a grid of cell
/// options.dedup. Stops with `truncated` once options.budget points exist.
inline OrbitSample enumerate(const GroupSpec& spec, const Point& z, int L, bool numeric = false)
{
    if (L < 0) throw InputError("word cap must be nonnegative");
    if (z.size() != spec.dim) throw DimensionMismatch();
    OrbitSample s;
    s.dim = spec.dim;
    s.word_cap = L;
    s.exact = !numeric && spec.exact() && is_exact(z);
    const std::size_t budget = spec.options.budget;

    if (s.exact) {
        std::vector<ExactHomothety> gens;
        for (const auto& g : spec.generators) gens.push_back(to_exact(g));
        const auto letters = detail::alphabet(gens);
        std::unordered_set<ExactPoint, detail::ExactPointHash> seen;
        const ExactPoint z0 = to_exact(z);
        seen.insert(z0);
        s.exact_points.push_back(z0);
        s.points.push_back(to_numeric(z0));
        s.generation.push_back(0);
        std::size_t begin = 0;
        for (int gen = 1; gen <= L; ++gen) {
            const std::size_t end = s.exact_points.size();
            for (std::size_t i = begin; i < end && !s.truncated; ++i) {
                for (const auto& f : letters) {
                    ExactPoint q = f.apply(s.exact_points[i]);
                    if (seen.insert(q).second) {
                        s.points.push_back(to_numeric(q));
                        s.exact_points.push_back(std::move(q));
                        s.generation.push_back(gen);
                        if (s.points.size() >= budget) {
                            s.truncated = true;
                            break;
                        }
                    }
                }
            }
            if (s.truncated) break;
            s.complete_generations = gen;
            begin = end;
        }
        return s;
    }

    std::vector<NumHomothety> gens;
    for (const auto& g : spec.generators) gens.push_back(to_numeric(g));
    const auto letters = detail::alphabet(gens);
    std::unordered_set<std::vector<std::int64_t>, detail::KeyHash> seen;
    const double cell = spec.options.dedup;
    std::vector<std::int64_t> key;
    const NumPoint z0 = to_numeric(z);
    detail::grid_key(key, z0, cell);
    seen.insert(key);
    s.points.push_back(z0);
    s.generation.push_back(0);
    std::size_t begin = 0;
    for (int gen = 1; gen <= L; ++gen) {
        const std::size_t end = s.points.size();
        for (std::size_t i = begin; i < end && !s.truncated; ++i) {
            for (const auto& f : letters) {
                NumPoint q = f.apply(s.points[i]);
                key.clear();
                detail::grid_key(key, q, cell);
                if (seen.insert(key).second) {
                    s.points.push_back(std::move(q));
                    s.generation.push_back(gen);
                    if (s.points.size() >= budget) {
                        s.truncated = true;
                        break;
                    }
                }
            }
        }
        if (s.truncated) break;
        s.complete_generations = gen;
        begin = end;
    }
    return s;
}

struct HarvestResult {
    std::vector<Point> translations;
    bool exact = true;
    bool truncated = false;
    std::size_t maps_visited = 0;
};

/// Translation vectors of all words of length <= L.
///
/// Enumerates maps rather than points. In exact mode a word is a
/// translation when its ratio equals 1; in approximate mode when the
/// exponent vector of the generator ratios it uses is zero, which makes
/// the test exact as well. The zero vector (empty word) is included.
inline HarvestResult harvest_translations(const GroupSpec& spec, int L)
{
    HarvestResult out;
    const std::size_t budget = spec.options.budget;
    const std::size_t n = spec.dim;
    if (spec.exact()) {
        std::vector<ExactHomothety> gens;
        for (const auto& g : spec.generators) gens.push_back(to_exact(g));
        const auto letters = detail::alphabet(gens);
        std::unordered_set<ExactHomothety, detail::ExactMapHash> seen;
        std::unordered_set<ExactPoint, detail::ExactPointHash> found;
        std::vector<ExactHomothety> frontier{ExactHomothety::identity(n)};
        seen.insert(frontier[0]);
        found.insert(frontier[0].shift());
        out.translations.push_back(to_scalar(frontier[0].shift()));
        for (int len = 1; len <= L && !out.truncated; ++len) {
            std::vector<ExactHomothety> next;
            for (const auto& w : frontier) {
                for (const auto& f : letters) {
                    ExactHomothety m = f * w;
                    if (!seen.insert(m).second) continue;
                    if (m.ratio().is_one() && found.insert(m.shift()).second) out.translations.push_back(to_scalar(m.shift()));
                    next.push_back(std::move(m));
                    if (seen.size() >= budget) {
                        out.truncated = true;
                        break;
                    }
                }
                if (out.truncated) break;
            }
            frontier = std::move(next);
        }
        out.maps_visited = seen.size();
        return out;
    }

    out.exact = false;
    struct Word {
        NumHomothety map;
        std::vector<int> exps;
    };
    std::vector<NumHomothety> gens;
    std::vector<int> counted;
    for (const auto& g : spec.generators) {
        gens.push_back(to_numeric(g));
        const bool unit = g.ratio().is_exact() && g.ratio().exact().is_one();
        counted.push_back(unit ? 0 : 1);
    }
    const std::size_t k = gens.size();
    std::vector<std::pair<NumHomothety, std::vector<int>>> letters;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<int> e(k, 0), ei(k, 0);
        e[j] = counted[j];
        ei[j] = -counted[j];
        letters.emplace_back(gens[j], e);
        letters.emplace_back(gens[j].inverse(), ei);
    }
    const double cell = spec.options.dedup;
    auto key_of = [&](const Word& w) {
        std::vector<std::int64_t> key(w.exps.begin(), w.exps.end());
        detail::grid_key(key, w.map.shift(), cell);
        return key;
    };
    std::unordered_set<std::vector<std::int64_t>, detail::KeyHash> seen;
    std::unordered_set<std::vector<std::int64_t>, detail::KeyHash> found;
    std::vector<Word> frontier{Word{NumHomothety::identity(n), std::vector<int>(k, 0)}};
    seen.insert(key_of(frontier[0]));
    {
        std::vector<std::int64_t> tk;
        detail::grid_key(tk, frontier[0].map.shift(), cell);
        found.insert(tk);
        out.translations.push_back(Point(n, Scalar(0)));
    }
    for (int len = 1; len <= L && !out.truncated; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            for (const auto& [f, e] : letters) {
                Word m{f * w.map, w.exps};
                for (std::size_t j = 0; j < k; ++j) m.exps[j] += e[j];
                if (!seen.insert(key_of(m)).second) continue;
                const bool zero = std::all_of(m.exps.begin(), m.exps.end(), [](int x) { return x == 0; });
                if (zero) {
                    std::vector<std::int64_t> tk;
                    detail::grid_key(tk, m.map.shift(), cell);
                    if (found.insert(tk).second) {
                        Point v;
                        for (const auto& x : m.map.shift()) v.push_back(Scalar::approx(x, cell));
                        out.translations.push_back(std::move(v));
                    }
                }
                next.push_back(std::move(m));
                if (seen.size() >= budget) {
                    out.truncated = true;
                    break;
                }
            }
            if (out.truncated) break;
        }
        frontier = std::move(next);
    }
    out.maps_visited = seen.size();
    return out;
}

/// Distinct maps of the words of length <= L in floating point, identified
/// on a grid of cell options.dedup over ratio and shift.
inline std::vector<NumHomothety> enumerate_maps(const GroupSpec& spec, int L, bool* truncated = nullptr)
{
    if (L < 0) throw InputError("word cap must be nonnegative");
    std::vector<NumHomothety> gens;
    for (const auto& g : spec.generators) gens.push_back(to_numeric(g));
    const auto letters = detail::alphabet(gens);
    const double cell = spec.options.dedup;
    auto key_of = [cell](const NumHomothety& f) {
        std::vector<std::int64_t> key;
        detail::grid_key(key, NumPoint{f.ratio()}, cell);
        detail::grid_key(key, f.shift(), cell);
        return key;
    };
    std::vector<NumHomothety> out{NumHomothety::identity(spec.dim)};
    std::unordered_set<std::vector<std::int64_t>, detail::KeyHash> seen{key_of(out[0])};
    bool cut = false;
    std::size_t begin = 0;
    for (int len = 1; len <= L && !cut; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end && !cut; ++i) {
            for (const auto& f : letters) {
                NumHomothety m = f * out[i];
                if (!seen.insert(key_of(m)).second) continue;
                out.push_back(std::move(m));
                if (out.size() >= spec.options.budget) {
                    cut = true;
                    break;
                }
            }
        }
        begin = end;
    }
    if (truncated) *truncated = cut;
    return out;
}

namespace detail {

// Static k-d tree over points of R^d for nearest-neighbour queries.
class KdTree {
public:
    KdTree(std::vector<std::vector<double>> pts) : pts_(std::move(pts)), idx_(pts_.size())
    {
        dim_ = pts_.empty() ? 0 : pts_[0].size();
        for (std::size_t i = 0; i < idx_.size(); ++i) idx_[i] = i;
        build(0, idx_.size(), 0);
    }

    // Distance to the nearest point, or `bound` if none is closer.
    double nearest(const std::vector<double>& q, double bound) const
    {
        double best = bound * bound;
        search(0, idx_.size(), 0, q, best);
        return std::sqrt(best);
    }

private:
    void build(std::size_t lo, std::size_t hi, std::size_t depth)
    {
        if (hi - lo <= 1) return;
        const std::size_t axis = depth % dim_;
        const std::size_t mid = (lo + hi) / 2;
        std::nth_element(idx_.begin() + lo, idx_.begin() + mid, idx_.begin() + hi,
                         [&](std::size_t a, std::size_t b) { return pts_[a][axis] < pts_[b][axis]; });
        build(lo, mid, depth + 1);
        build(mid + 1, hi, depth + 1);
    }

    void search(std::size_t lo, std::size_t hi, std::size_t depth, const std::vector<double>& q, double& best) const
    {
        if (lo >= hi) return;
        const std::size_t mid = (lo + hi) / 2;
        const auto& p = pts_[idx_[mid]];
        double d2 = 0.0;
        for (std::size_t k = 0; k < dim_; ++k) d2 += (p[k] - q[k]) * (p[k] - q[k]);
        best = std::min(best, d2);
        const std::size_t axis = depth % dim_;
        const double diff = q[axis] - p[axis];
        const bool left_first = diff < 0;
        if (left_first) {
            search(lo, mid, depth + 1, q, best);
            if (diff * diff < best) search(mid + 1, hi, depth + 1, q, best);
        } else {
            search(mid + 1, hi, depth + 1, q, best);
            if (diff * diff < best) search(lo, mid, depth + 1, q, best);
        }
    }

    std::vector<std::vector<double>> pts_;
    std::vector<std::size_t> idx_;
    std::size_t dim_ = 0;
};

inline std::vector<double> real_coords(const NumPoint& p)
{
    std::vector<double> x;
    for (const auto& c : p) {
        x.push_back(c.real());
        x.push_back(c.imag());
    }
    return x;
}

} // namespace detail

struct ApproachResult {
    std::vector<double> distance;  // per target
    int word_cap = 0;
    std::size_t left_maps = 0;
    std::size_t right_points = 0;
    bool truncated = false;
};

/// For each target t, the smallest |w(z) - t| over all words w of length
/// <= L, in floating point.
///
/// Every such word splits as u v with |u| <= L - L/2 and |v| <= L/2, and
/// |u(v(z)) - t| = |ratio(u)| |v(z) - u^{-1}(t)|, so the minimum is taken
/// over the maps u against a nearest-neighbour index of the short orbit.
inline ApproachResult orbit_approach(const GroupSpec& spec, const Point& z, const std::vector<NumPoint>& targets, int L)
{
    if (L < 0) throw InputError("word cap must be nonnegative");
    ApproachResult r;
    r.word_cap = L;
    const int right = L / 2;
    bool cut = false;
    const std::vector<NumHomothety> maps = enumerate_maps(spec, L - right, &cut);
    const OrbitSample near = enumerate(spec, z, right, true);
    r.truncated = cut || near.truncated;
    r.left_maps = maps.size();
    r.right_points = near.size();
    std::vector<std::vector<double>> pts;
    for (const auto& p : near.points) pts.push_back(detail::real_coords(p));
    const detail::KdTree tree(std::move(pts));
    for (const auto& t : targets) {
        if (t.size() != spec.dim) throw DimensionMismatch();
        double best = std::numeric_limits<double>::infinity();
        for (const auto& u : maps) {
            const double scale = std::abs(u.ratio());
            const double d = tree.nearest(detail::real_coords(u.inverse().apply(t)), best / scale);
            best = std::min(best, scale * d);
        }
        r.distance.push_back(best);
    }
    return r;
}

} // namespace affhom
