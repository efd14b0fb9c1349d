#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "additive_closure.hpp"
#include "affine_subspace.hpp"
#include "errors.hpp"
#include "homothety.hpp"
#include "mult_closure.hpp"
#include "oracle.hpp"
#include "planar.hpp"
#include "spec.hpp"
#include "zmodule.hpp"

namespace affhom {

enum class SRClass { None, S2, S3 };

inline std::string to_string(SRClass s)
{
    switch (s) {
    case SRClass::S2: return "S2";
    case SRClass::S3: return "S3";
    default: return "None";
    }
}

struct RatioFlags {
    bool has_nonreal_ratio = false;
    bool has_modulus_ne1 = false;
    SRClass sr = SRClass::None;
    bool outside_SR = true;
};

/// Ratio-level facts, decided from the generators alone: realness and
/// modulus are multiplicative, and F2, F3 are groups.
inline RatioFlags ratio_flags(const GroupSpec& spec)
{
    Tri nonreal = Tri::No;
    Tri mod_ne1 = Tri::No;
    Tri all_f2 = Tri::Yes;
    Tri all_f3 = Tri::Yes;
    for (const auto& g : spec.generators) {
        const Scalar& r = g.ratio();
        nonreal = tri_or(nonreal, tri_not(is_real(r)));
        mod_ne1 = tri_or(mod_ne1, tri_not(modulus_is_one(r)));
        all_f2 = tri_and(all_f2, in_F2(r));
        all_f3 = tri_and(all_f3, in_F3(r));
    }
    if (nonreal == Tri::Unknown) throw UndecidableAtPrecision("cannot tell whether a ratio is real");
    if (mod_ne1 == Tri::Unknown) throw UndecidableAtPrecision("cannot tell whether a ratio has modulus 1");
    RatioFlags f;
    f.has_nonreal_ratio = nonreal == Tri::Yes;
    f.has_modulus_ne1 = mod_ne1 == Tri::Yes;
    if (all_f2 == Tri::Yes) {
        f.sr = SRClass::S2;
    } else if (all_f3 == Tri::Yes) {
        f.sr = SRClass::S3;
    } else if (all_f2 == Tri::No && all_f3 == Tri::No) {
        f.sr = SRClass::None;
    } else {
        throw UndecidableAtPrecision("cannot tell whether the ratios are 4th or 6th roots of unity");
    }
    f.outside_SR = f.sr == SRClass::None;
    return f;
}

enum class CrystalClass { CompatibleDiscrete, ForcesDense, NotRotation };

inline std::string to_string(CrystalClass c)
{
    switch (c) {
    case CrystalClass::CompatibleDiscrete: return "CompatibleDiscrete";
    case CrystalClass::ForcesDense: return "ForcesDense";
    default: return "NotRotation";
    }
}

/// A rotation e^{i theta} can preserve a lattice only if 2 cos(theta) is an
/// integer, i.e. lies in {-2, -1, 0, 1, 2}.
inline CrystalClass crystallographic_test(const Scalar& ratio)
{
    const Tri unit = modulus_is_one(ratio);
    if (unit == Tri::No) return CrystalClass::NotRotation;
    if (unit == Tri::Unknown) throw UndecidableAtPrecision("cannot tell whether the ratio has modulus 1");
    if (ratio.is_exact()) {
        const QSqrt3 tc = ratio.exact().real_part() * QSqrt3(2);
        const bool integral = tc.is_integer();
        return integral ? CrystalClass::CompatibleDiscrete : CrystalClass::ForcesDense;
    }
    const double tc = 2.0 * ratio.to_complex().real();
    const double err = 2.0 * ratio.error();
    for (int t = -2; t <= 2; ++t) {
        if (std::abs(tc - t) <= err) throw UndecidableAtPrecision("2 cos(theta) is within error of an integer");
    }
    return CrystalClass::ForcesDense;
}

/// Tri-valued non-commutativity of the generator set.
inline Tri is_nonabelian(const GroupSpec& spec)
{
    Tri any = Tri::No;
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.generators.size(); ++j) {
            any = tri_or(any, tri_not(commutes(spec.generators[i], spec.generators[j])));
        }
    }
    return any;
}

/// Index of the first generator that is certainly not a translation.
inline std::optional<std::size_t> first_homothety(const GroupSpec& spec)
{
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        if (spec.generators[i].is_translation() == Tri::No) return i;
    }
    return std::nullopt;
}

struct EGResult {
    AffineSubspace space;
    std::vector<Point> seeds;
    int rounds = 0;
};

/// Invariant affine subspace spanned by centers of G.
///
/// Seeds are the centers of non-translation generators and p0 + v for each
/// translation generator vector and pairwise commutator vector v, where p0
/// is the first center (p0 + v is the center of a conjugate). The hull is
/// then closed under the generators; g(A) = A as soon as g(base) lies in A
/// because homotheties preserve directions.
inline EGResult compute_EG(const GroupSpec& spec)
{
    const Tri nonab = is_nonabelian(spec);
    if (nonab == Tri::No) throw AbelianGroup();
    if (nonab == Tri::Unknown) throw UndecidableAtPrecision("cannot tell whether the generators commute");
    const auto first = first_homothety(spec);
    if (!first) throw AbelianGroup();
    EGResult out;
    const Point p0 = spec.generators[*first].center();
    out.seeds.push_back(p0);
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        const auto& g = spec.generators[i];
        const Tri tr = g.is_translation();
        if (tr == Tri::Unknown) throw UndecidableAtPrecision("cannot tell whether a generator is a translation");
        if (tr == Tri::Yes) {
            out.seeds.push_back(p0 + g.shift());
        } else if (i != *first) {
            out.seeds.push_back(g.center());
        }
    }
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.generators.size(); ++j) {
            const Point v = commutator(spec.generators[i], spec.generators[j]);
            if (is_zero_vector(v) != Tri::Yes) out.seeds.push_back(p0 + v);
        }
    }
    AffineSubspace a = AffineSubspace::hull(spec.dim, out.seeds, {}, spec.options.eps);
    for (;;) {
        ++out.rounds;
        bool grown = false;
        for (const auto& g : spec.generators) {
            const Point q = g.apply(a.base());
            if (a.contains(q) != Tri::Yes) {
                a = a.with_points({q});
                grown = true;
            }
        }
        if (!grown || a.dim() == spec.dim) break;
    }
    out.space = a;
    return out;
}

/// Abstract coordinates of an exact point of C^n over the Q-basis
/// {1, sqrt3} of each real coordinate (length 4n).
inline RatVec lattice_coords(const Point& p)
{
    RatVec out;
    for (const auto& x : p) {
        const RatVec c = PlanarVector::from_complex(x.exact()).coords();
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

/// Dimension of the real span of exact vectors of C^n = R^{2n}.
inline std::size_t real_span_dim(const std::vector<Point>& vs, std::size_t n)
{
    Matrix<QSqrt3> m;
    for (const auto& v : vs) {
        std::vector<QSqrt3> row;
        for (const auto& x : v) {
            row.push_back(x.exact().real_part());
            row.push_back(x.exact().imag_part());
        }
        m.push_back(std::move(row));
    }
    return rank(m, 2 * n);
}

/// Inner and outer bounds for the translation vectors G1(0).
///
/// With the first center c0 moved to the origin, every orbit point of c0 is
/// a Z[Lambda]-combination of the shifts (1 - l_j)(a_j - c0) and the
/// translation vectors: that span is the outer bound (available when
/// Lambda is finite). Commutators of generators and their inverses, the
/// translation vectors, and their images under Lambda lie in G1(0)
/// because conjugating T_v by g gives T_{l_g v}: that is the inner bound.
/// Harvested translations of words of length <= L are added to the inner
/// side and must lie in the outer one.
struct G1Bounds {
    Point center;
    std::vector<Scalar> rotations;
    std::vector<Point> inner;
    std::vector<Point> outer;
    std::vector<Point> sampled;
    bool exact = true;
    bool outer_available = false;
    bool harvest_truncated = false;
    std::optional<ClosedSubgroupDesc> inner_closure;
    std::optional<ClosedSubgroupDesc> outer_closure;
    std::optional<ZModule> inner_module;
    std::optional<ZModule> outer_module;
    std::size_t outer_real_rank = 0;
    bool pinned = false;

    bool outer_discrete() const { return outer_module && outer_module->rank() == outer_real_rank; }
};

inline G1Bounds g1_lattice_bounds(const GroupSpec& spec, const MultClosureDesc& lambda)
{
    G1Bounds b;
    const auto first = first_homothety(spec);
    if (!first) throw AbelianGroup();
    b.center = spec.generators[*first].center();
    b.exact = spec.exact();
    if (lambda.shape == MultShape::FiniteCyclic && lambda.exact && lambda.generator) {
        for (int k = 0; k < lambda.order; ++k) b.rotations.push_back(Scalar(lambda.generator->pow(k)));
        b.outer_available = true;
    } else {
        b.rotations = {Scalar(1)};
    }

    std::vector<Point> base_inner;
    std::vector<Homothety> letters;
    for (const auto& g : spec.generators) {
        letters.push_back(g);
        letters.push_back(g.inverse());
        if (g.is_translation() == Tri::Yes) base_inner.push_back(g.shift());
    }
    for (std::size_t i = 0; i < letters.size(); ++i) {
        for (std::size_t j = i + 1; j < letters.size(); ++j) {
            const Point v = commutator(letters[i], letters[j]);
            if (is_zero_vector(v) != Tri::Yes) base_inner.push_back(v);
        }
    }
    for (const auto& rho : b.rotations) {
        for (const auto& v : base_inner) b.inner.push_back(scale(rho, v));
    }
    if (b.outer_available) {
        for (const auto& g : spec.generators) {
            // shift of g after moving c0 to the origin
            const Point s = g.shift() - scale(Scalar(1) - g.ratio(), b.center);
            if (is_zero_vector(s) == Tri::Yes) continue;
            for (const auto& rho : b.rotations) b.outer.push_back(scale(rho, s));
        }
    }
    const HarvestResult h = harvest_translations(spec, spec.options.harvest_cap);
    b.sampled = h.translations;
    b.harvest_truncated = h.truncated;

    const std::size_t n = spec.dim;
    if (b.exact) {
        std::vector<RatVec> in_rows, out_rows;
        for (const auto& v : b.inner) in_rows.push_back(lattice_coords(v));
        for (const auto& v : b.sampled) in_rows.push_back(lattice_coords(v));
        b.inner_module = ZModule(4 * n, in_rows);
        if (b.outer_available) {
            for (const auto& v : b.outer) out_rows.push_back(lattice_coords(v));
            b.outer_module = ZModule(4 * n, out_rows);
            b.outer_real_rank = real_span_dim(b.outer, n);
            for (const auto& v : b.sampled) {
                if (!b.outer_module->contains(lattice_coords(v))) {
                    throw WordCapExceeded("harvested translation outside the outer lattice");
                }
            }
        }
        if (n == 1) {
            std::vector<PlanarVector> in_v, out_v;
            for (const auto& v : b.inner) in_v.push_back(PlanarVector::from_complex(v[0].exact()));
            for (const auto& v : b.sampled) in_v.push_back(PlanarVector::from_complex(v[0].exact()));
            b.inner_closure = classify_additive_closure(in_v);
            if (b.outer_available) {
                for (const auto& v : b.outer) out_v.push_back(PlanarVector::from_complex(v[0].exact()));
                b.outer_closure = classify_additive_closure(out_v);
                b.pinned = *b.inner_closure == *b.outer_closure;
            }
        } else if (b.outer_available) {
            b.pinned = *b.inner_module == *b.outer_module;
        }
    } else if (n == 1) {
        std::vector<std::complex<double>> in_v, out_v;
        for (const auto& v : b.inner) in_v.push_back(v[0].to_complex());
        for (const auto& v : b.sampled) in_v.push_back(v[0].to_complex());
        b.inner_closure = classify_additive_closure_numeric(in_v, spec.options.eps);
        if (b.outer_available) {
            for (const auto& v : b.outer) out_v.push_back(v[0].to_complex());
            b.outer_closure = classify_additive_closure_numeric(out_v, spec.options.eps);
            b.pinned = b.inner_closure->shape == b.outer_closure->shape;
        }
    }
    return b;
}

/// Structural data of G derived from its generators.
struct GroupProfile {
    GroupSpec spec;
    RatioFlags flags;
    EGResult eg;
    MultClosureDesc lambda_closure;
    std::optional<G1Bounds> g1;
    bool exact = true;
    std::vector<std::string> notes;

    const AffineSubspace& EG() const { return eg.space; }
    std::size_t dim() const { return spec.dim; }
};

inline GroupProfile build_profile(const GroupSpec& spec)
{
    spec.validate();
    GroupProfile p;
    p.spec = spec;
    p.flags = ratio_flags(spec);
    p.eg = compute_EG(spec);
    p.lambda_closure = classify_multiplicative_closure(spec.ratios());
    p.exact = spec.exact() && p.eg.space.exact() && p.lambda_closure.exact;
    if (!p.lambda_closure.exact) p.notes.push_back("ratio group closure is heuristic");
    if (!p.eg.space.exact()) p.notes.push_back("invariant subspace computed in floating point");
    if (p.flags.sr != SRClass::None) {
        p.g1 = g1_lattice_bounds(spec, p.lambda_closure);
        if (!p.g1->pinned) p.notes.push_back("translation closure not pinned by the inner and outer bounds");
        if (!p.g1->exact) p.exact = false;
    }
    return p;
}

} // namespace affhom
