#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "additive_closure.hpp"
#include "affine_subspace.hpp"
#include "errors.hpp"
#include "homothety.hpp"
#include "linalg.hpp"
#include "mult_closure.hpp"
#include "profile.hpp"
#include "tri.hpp"

namespace affhom {

enum class ClosureKind { WholeSpace, Affine, LambdaCone, RotationCoset, Unsupported };

inline std::string to_string(ClosureKind k)
{
    switch (k) {
    case ClosureKind::WholeSpace: return "WholeSpace";
    case ClosureKind::Affine: return "Affine";
    case ClosureKind::LambdaCone: return "LambdaCone";
    case ClosureKind::RotationCoset: return "RotationCoset";
    default: return "Unsupported";
    }
}

/// Symbolic closure of one orbit G(z).
///
///   WholeSpace, Affine    the subspace `space`
///   LambdaCone            apex + cl(Lambda) (z - apex) + dir(space)
///   RotationCoset         union over rho in `rotations` of
///                         apex + rho (z - apex) + cl(G1(0))
///
/// For RotationCoset cl(G1(0)) is only known between the inner and outer
/// bounds of `g1`; `pinned` says whether they agree.
struct ClosureDesc {
    ClosureKind kind = ClosureKind::Unsupported;
    std::string provenance;
    std::string reason;
    bool exact = true;
    std::size_t dim = 0;
    Point z;
    Point apex;
    AffineSubspace space;
    MultClosureDesc lambda;
    std::vector<Scalar> ratios;
    std::vector<Scalar> rotations;
    std::optional<G1Bounds> g1;
    bool pinned = true;
    double eps = 1e-9;

    /// Membership of w in the closure.
    Tri contains(const Point& w) const
    {
        if (w.size() != dim) throw DimensionMismatch();
        switch (kind) {
        case ClosureKind::WholeSpace: return Tri::Yes;
        case ClosureKind::Affine: return space.contains(w);
        case ClosureKind::LambdaCone: return cone_contains(w);
        case ClosureKind::RotationCoset: return coset_contains(w);
        default: return Tri::Unknown;
        }
    }

    /// Distance from w to the closure. For RotationCoset in dimension >= 2
    /// this is the distance to the real span of the outer bound, a lower
    /// bound that is exact whenever the outer bound spans its real span densely.
    double distance(const NumPoint& w) const
    {
        switch (kind) {
        case ClosureKind::WholeSpace: return 0.0;
        case ClosureKind::Affine: return space.distance(w);
        case ClosureKind::LambdaCone: return cone_distance(w);
        case ClosureKind::RotationCoset: return coset_distance(w);
        default: return std::numeric_limits<double>::quiet_NaN();
        }
    }

    /// Points of the closure: exact whenever the description is exact.
    /// LambdaCone samples include points of the base subspace when 0 lies
    /// in the ratio closure.
    std::vector<Point> sample(std::size_t count, std::uint64_t seed = 1) const
    {
        std::mt19937_64 rng(seed);
        std::vector<Point> out;
        if (kind == ClosureKind::Unsupported) return {z};
        for (std::size_t s = 0; s < count; ++s) {
            switch (kind) {
            case ClosureKind::WholeSpace:
            case ClosureKind::Affine: out.push_back(space_point(rng)); break;
            case ClosureKind::LambdaCone: {
                const Point e = space_point(rng);
                std::uniform_int_distribution<int> coin(0, 3);
                if (lambda.includes_zero && coin(rng) == 0) {
                    out.push_back(e);
                } else {
                    out.push_back(e + scale(ratio_word(rng), z - apex));
                }
                break;
            }
            case ClosureKind::RotationCoset: {
                std::uniform_int_distribution<std::size_t> pick(0, rotations.size() - 1);
                const Scalar& rho = rotations[pick(rng)];
                out.push_back(apex + scale(rho, z - apex) + translation_word(rng));
                break;
            }
            default: break;
            }
        }
        return out;
    }

    /// Points of the base subspace (the part every orbit closure contains
    /// when some ratio has modulus other than 1).
    std::vector<Point> base_points(std::size_t count, std::uint64_t seed = 1) const
    {
        std::mt19937_64 rng(seed);
        std::vector<Point> out;
        for (std::size_t s = 0; s < count; ++s) out.push_back(space_point(rng));
        return out;
    }

private:
    static Scalar small_coefficient(std::mt19937_64& rng, bool exact_mode)
    {
        std::uniform_int_distribution<int> num(-8, 8);
        std::uniform_int_distribution<int> den(1, 4);
        if (exact_mode) {
            const Rational re = make_rational(num(rng), den(rng));
            const Rational im = make_rational(num(rng), den(rng));
            return Scalar(CycloScalar::gaussian(re, im));
        }
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        return Scalar::approx({u(rng), u(rng)});
    }

    Point space_point(std::mt19937_64& rng) const
    {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k < space.dim(); ++k) c.push_back(small_coefficient(rng, space.exact()));
        return space.point_at(c);
    }

    Scalar ratio_word(std::mt19937_64& rng) const
    {
        std::uniform_int_distribution<int> e(-2, 2);
        Scalar a(1);
        for (const auto& r : ratios) a = a * r.pow(e(rng));
        return a;
    }

    Point translation_word(std::mt19937_64& rng) const
    {
        Point t(dim, Scalar(0));
        if (!g1) return t;
        std::uniform_int_distribution<int> e(-2, 2);
        for (const auto& v : g1->inner) t = t + scale(Scalar(e(rng)), v);
        return t;
    }

    // Coordinates (alpha, c) with w - apex = alpha (z - apex) + sum c_k e_k.
    std::optional<Scalar> cone_coordinate_exact(const Point& w) const
    {
        const ExactPoint u = to_exact(z - apex);
        const ExactPoint r = to_exact(w - apex);
        Matrix<CycloScalar> a(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            a[i].push_back(u[i]);
            for (const auto& b : space.basis()) a[i].push_back(b[i].exact());
        }
        const auto x = solve(a, r, 1 + space.dim());
        if (!x) return std::nullopt;
        return Scalar((*x)[0]);
    }

    // Numeric split of w - apex into the transverse coefficient alpha and the
    // part off the plane C(z - apex) + dir(space).
    std::pair<std::complex<double>, double> cone_coordinate_numeric(const NumPoint& w) const
    {
        const NumPoint ru = space.residual(to_numeric(z) - to_numeric(apex));
        const NumPoint rw = space.residual(w - to_numeric(apex));
        std::complex<double> num = 0.0;
        double den = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            num += std::conj(ru[k]) * rw[k];
            den += std::norm(ru[k]);
        }
        const std::complex<double> alpha = num / den;
        NumPoint off = rw;
        for (std::size_t k = 0; k < dim; ++k) off[k] -= alpha * ru[k];
        return {alpha, norm(off)};
    }

    Tri cone_contains(const Point& w) const
    {
        if (exact && is_exact(w)) {
            const auto alpha = cone_coordinate_exact(w);
            if (!alpha) return Tri::No;
            return lambda.contains(*alpha);
        }
        const double d = cone_distance(to_numeric(w));
        const double tol = eps * std::max(1.0, norm(to_numeric(w)));
        if (d > tol) return Tri::No;
        return lambda.exact ? Tri::Yes : Tri::Unknown;
    }

    double cone_distance(const NumPoint& w) const
    {
        const auto [alpha, off] = cone_coordinate_numeric(w);
        const double ru = norm(space.residual(to_numeric(z) - to_numeric(apex)));
        const double along = lambda.distance(alpha) * ru;
        return std::hypot(off, along);
    }

    Tri coset_contains(const Point& w) const
    {
        if (!g1) return Tri::Unknown;
        bool all_outside = true;
        for (const auto& rho : rotations) {
            const Point v = w - apex - scale(rho, z - apex);
            const Tri in = translation_contains(v, false);
            if (in == Tri::Yes) return Tri::Yes;
            const Tri out = translation_contains(v, true);
            if (out != Tri::No) all_outside = false;
        }
        return all_outside ? Tri::No : Tri::Unknown;
    }

    // Membership of a vector in the inner bound (Yes means certainly in the
    // closure) or in the outer bound (No means certainly outside).
    Tri translation_contains(const Point& v, bool outer) const
    {
        const G1Bounds& b = *g1;
        if (outer && !b.outer_available) return Tri::Unknown;
        if (dim == 1) {
            const auto& c = outer ? b.outer_closure : b.inner_closure;
            if (!c) return Tri::Unknown;
            if (c->exact && is_exact(v)) return c->contains(v[0].exact());
            const double d = c->distance(v[0].to_complex());
            return d <= eps * std::max(1.0, std::abs(v[0].to_complex())) ? Tri::Yes : Tri::No;
        }
        if (!b.exact || !is_exact(v)) return Tri::Unknown;
        const auto& m = outer ? b.outer_module : b.inner_module;
        if (!m) return Tri::Unknown;
        const bool in = m->contains(lattice_coords(v));
        if (outer) return in ? Tri::Unknown : (b.outer_discrete() ? Tri::No : Tri::Unknown);
        return in ? Tri::Yes : Tri::Unknown;
    }

    double coset_distance(const NumPoint& w) const
    {
        if (!g1) return std::numeric_limits<double>::quiet_NaN();
        const G1Bounds& b = *g1;
        const NumPoint a = to_numeric(apex);
        const NumPoint u = to_numeric(z) - a;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& rho : rotations) {
            const std::complex<double> r = rho.to_complex();
            NumPoint v = w - a;
            for (std::size_t k = 0; k < dim; ++k) v[k] -= r * u[k];
            double d;
            if (dim == 1) {
                const auto& c = b.outer_closure ? b.outer_closure : b.inner_closure;
                d = c ? c->distance(v[0]) : norm(v);
            } else {
                d = real_span_residual(v, b.outer_available ? b.outer : b.inner);
            }
            best = std::min(best, d);
        }
        return best;
    }

    static double real_span_residual(const NumPoint& v, const std::vector<Point>& gens)
    {
        // Gram-Schmidt in R^{2n}
        std::vector<std::vector<double>> q;
        auto flat = [](const NumPoint& p) {
            std::vector<double> x;
            for (const auto& c : p) {
                x.push_back(c.real());
                x.push_back(c.imag());
            }
            return x;
        };
        auto reduce = [&](std::vector<double>& x) {
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& e : q) {
                    double d = 0.0;
                    for (std::size_t k = 0; k < x.size(); ++k) d += e[k] * x[k];
                    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= d * e[k];
                }
            }
        };
        for (const auto& g : gens) {
            auto x = flat(to_numeric(g));
            reduce(x);
            double nx = 0.0;
            for (double t : x) nx += t * t;
            nx = std::sqrt(nx);
            if (nx < 1e-9) continue;
            for (auto& t : x) t /= nx;
            q.push_back(std::move(x));
        }
        auto x = flat(v);
        reduce(x);
        double s = 0.0;
        for (double t : x) s += t * t;
        return std::sqrt(s);
    }
};

/// Orbit closure of z under the group of the profile.
inline ClosureDesc orbit_closure(const GroupProfile& p, const Point& z)
{
    if (z.size() != p.dim()) throw DimensionMismatch();
    ClosureDesc c;
    c.dim = p.dim();
    c.z = z;
    c.eps = p.spec.options.eps;
    c.ratios = p.spec.ratios();
    c.lambda = p.lambda_closure;
    c.space = p.EG();
    c.apex = p.EG().base();
    if (!p.flags.has_nonreal_ratio) {
        c.kind = ClosureKind::Unsupported;
        c.provenance = "real-ratio-unsupported";
        c.reason = "all ratios are real; this case is not covered";
        c.exact = p.spec.exact();
        return c;
    }
    if (p.flags.outside_SR) {
        const Tri in = p.EG().contains(z);
        if (in == Tri::Unknown) throw UndecidableAtPrecision("cannot tell whether the point lies in E_G");
        if (in == Tri::Yes) {
            c.kind = p.EG().dim() == p.dim() ? ClosureKind::WholeSpace : ClosureKind::Affine;
            c.provenance = "outside-SR/in-invariant-subspace";
            c.exact = p.EG().exact() && is_exact(z);
            return c;
        }
        c.kind = ClosureKind::LambdaCone;
        c.provenance = "outside-SR/cone";
        c.exact = p.EG().exact() && is_exact(z) && p.lambda_closure.exact;
        return c;
    }
    c.kind = ClosureKind::RotationCoset;
    c.provenance = "rotation-coset";
    c.g1 = p.g1;
    c.rotations = p.g1 ? p.g1->rotations : std::vector<Scalar>{Scalar(1)};
    c.apex = p.g1 ? p.g1->center : p.EG().base();
    c.pinned = p.g1 && p.g1->pinned;
    c.exact = p.exact && is_exact(z) && c.pinned;
    if (!c.pinned) c.reason = "translation closure not pinned (G1Unstable): inner and outer bounds attached";
    return c;
}

/// Orbit-wide statements about the group. U is the complement of E_G.
struct Verdicts {
    bool supported = true;
    std::string provenance;
    Tri has_dense_orbit = Tri::Unknown;
    Tri every_orbit_dense = Tri::Unknown;
    Tri all_orbits_in_U_dense = Tri::Unknown;
    Tri no_discrete_orbit = Tri::Unknown;
    Tri all_orbits_closed_discrete = Tri::Unknown;
    bool U_empty = false;
    bool orbits_in_U_minimal = false;
    bool orbits_in_U_homeomorphic = false;
    bool EG_in_every_closure = false;
    std::vector<std::string> notes;
};

inline Verdicts global_verdicts(const GroupProfile& p)
{
    Verdicts v;
    const std::size_t n = p.dim();
    const std::size_t e = p.EG().dim();
    v.U_empty = e == n;
    if (!p.flags.has_nonreal_ratio) {
        v.supported = false;
        v.provenance = "real-ratio-unsupported";
        v.notes.push_back("all ratios are real; this case is not covered");
        return v;
    }
    if (p.flags.outside_SR) {
        v.provenance = "outside-SR";
        if (e == n) {
            v.has_dense_orbit = Tri::Yes;
            v.every_orbit_dense = Tri::Yes;
            v.all_orbits_in_U_dense = Tri::Yes;
            v.notes.push_back("E_G is the whole space");
        } else if (e + 1 == n) {
            const MultShape s = p.lambda_closure.shape;
            Tri plane = Tri::No;
            if (s == MultShape::PlaneDense) {
                plane = Tri::Yes;
            } else if (!p.lambda_closure.exact) {
                plane = Tri::Unknown;
                v.notes.push_back("ratio closure is heuristic; density of orbits off E_G undecided");
            }
            v.has_dense_orbit = plane;
            v.all_orbits_in_U_dense = plane;
            v.every_orbit_dense = Tri::No;
        } else {
            v.has_dense_orbit = Tri::No;
            v.every_orbit_dense = Tri::No;
            v.all_orbits_in_U_dense = Tri::No;
            v.notes.push_back("E_G has codimension at least 2");
        }
        v.no_discrete_orbit = Tri::Yes;
        v.all_orbits_closed_discrete = Tri::No;
        v.orbits_in_U_minimal = !v.U_empty;
        v.orbits_in_U_homeomorphic = !v.U_empty;
        v.EG_in_every_closure = p.flags.has_modulus_ne1;
    } else {
        v.provenance = "rotation-coset";
        const G1Bounds* b = p.g1 ? &*p.g1 : nullptr;
        Tri dense = Tri::Unknown;
        Tri discrete = Tri::Unknown;
        if (b && b->outer_available && b->outer_discrete()) {
            discrete = Tri::Yes;
            dense = Tri::No;
        } else if (e < n) {
            dense = Tri::No;
        }
        if (n == 1 && b) {
            if (b->inner_closure && b->inner_closure->shape == SubgroupShape::Plane) dense = Tri::Yes;
            if (b->outer_closure && b->outer_closure->shape != SubgroupShape::Plane) dense = Tri::No;
            if (b->inner_closure && !b->inner_closure->is_discrete()) discrete = Tri::No;
            if (b->outer_closure && b->outer_closure->is_discrete()) discrete = Tri::Yes;
        }
        if (b && !b->pinned) v.notes.push_back("translation closure not pinned by the inner and outer bounds");
        v.has_dense_orbit = dense;
        v.every_orbit_dense = dense;
        v.all_orbits_in_U_dense = v.U_empty ? Tri::Yes : dense;
        v.all_orbits_closed_discrete = discrete;
        v.no_discrete_orbit = tri_not(discrete);
    }
    if (p.spec.generators.size() + 2 <= n) {
        if (v.has_dense_orbit == Tri::Yes) throw Error("dense orbit found with at most n - 2 generators");
        v.has_dense_orbit = Tri::No;
        v.every_orbit_dense = Tri::No;
        if (!v.U_empty) v.all_orbits_in_U_dense = Tri::No;
        v.notes.push_back("at most n - 2 generators: no dense orbit");
    }
    return v;
}

enum class RotationPairKind { AllDense, AllClosedDiscrete, Unknown };

inline std::string to_string(RotationPairKind k)
{
    switch (k) {
    case RotationPairKind::AllDense: return "AllDense";
    case RotationPairKind::AllClosedDiscrete: return "AllClosedDiscrete";
    default: return "Unknown";
    }
}

struct RotationPairResult {
    RotationPairKind kind = RotationPairKind::Unknown;
    std::optional<ClosedSubgroupDesc> lattice;
    std::string reason;
};

/// Orbits of the group generated by the rotations of ratio r1 about c1 and
/// r2 about c2 (unit ratios other than 1, distinct centers).
///
/// Dense when some angle fails the crystallographic test or when the
/// product r1 r2 lies outside F2 and F3 (angles from different classes);
/// otherwise the group preserves a lattice, returned as the closure of
/// the translation vectors.
inline RotationPairResult rotation_pair_classify(const Scalar& r1, const Scalar& r2, const Scalar& c1, const Scalar& c2,
                                                 const Options& opts = {})
{
    if (equals(c1, c2) != Tri::No) throw InputError("rotation centers must be distinct");
    for (const auto& r : {r1, r2}) {
        if (modulus_is_one(r) == Tri::No) throw InputError("rotation ratios must have modulus 1");
        if (equals(r, Scalar(1)) != Tri::No) throw InputError("rotation ratio must differ from 1");
    }
    RotationPairResult out;
    const CrystalClass k1 = crystallographic_test(r1);
    const CrystalClass k2 = crystallographic_test(r2);
    if (k1 == CrystalClass::ForcesDense || k2 == CrystalClass::ForcesDense) {
        out.kind = RotationPairKind::AllDense;
        out.reason = "an angle is outside H2 and H3";
        return out;
    }
    const Scalar prod = r1 * r2;
    const Tri f2 = in_F2(prod);
    const Tri f3 = in_F3(prod);
    if (f2 == Tri::No && f3 == Tri::No) {
        out.kind = RotationPairKind::AllDense;
        out.reason = "angles from different classes H2, H3";
        return out;
    }
    const GroupSpec spec(1, {Homothety::from_center(r1, {c1}), Homothety::from_center(r2, {c2})}, opts);
    const RatioFlags flags = ratio_flags(spec);
    if (flags.sr == SRClass::None) {
        out.kind = RotationPairKind::AllDense;
        out.reason = "ratio group outside F2 and F3";
        return out;
    }
    const MultClosureDesc lambda = classify_multiplicative_closure(spec.ratios());
    const G1Bounds b = g1_lattice_bounds(spec, lambda);
    if (b.outer_closure && b.outer_closure->is_discrete()) {
        out.kind = RotationPairKind::AllClosedDiscrete;
        out.lattice = b.pinned ? b.outer_closure : b.inner_closure;
        out.reason = b.pinned ? "translation closure is a lattice" : "translation closure inside a lattice";
        return out;
    }
    out.reason = "translation closure not decided";
    return out;
}

} // namespace affhom
