#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "planar.hpp"
#include "tri.hpp"
#include "zmodule.hpp"

namespace affhom {

enum class SubgroupShape { Zero, Lattice1, Lattice2, LineDense, LineLattice, Plane };

inline std::string to_string(SubgroupShape s)
{
    switch (s) {
    case SubgroupShape::Zero: return "Zero";
    case SubgroupShape::Lattice1: return "Lattice1";
    case SubgroupShape::Lattice2: return "Lattice2";
    case SubgroupShape::LineDense: return "LineDense";
    case SubgroupShape::LineLattice: return "LineLattice";
    default: return "Plane";
    }
}

/// Closure of a finitely generated subgroup H of C = R^2.
///
/// `basis` holds {a} for Lattice1, the HNF basis {a, b} for Lattice2, the
/// direction {u} for LineDense and {u, b} for LineLattice (closure R u + Z b).
/// For LineLattice `dual` is the generator phi of the dual group, and
/// membership reads phi . x in Z. `numeric` mirrors `basis` in floating point
/// and is the only data of a heuristic (non-exact) description.
struct ClosedSubgroupDesc {
    SubgroupShape shape = SubgroupShape::Zero;
    bool exact = true;
    std::vector<PlanarVector> basis;
    std::optional<PlanarVector> dual;
    ZModule module{4};
    std::vector<std::complex<double>> numeric;
    std::complex<double> numeric_dual{0.0, 0.0};

    static constexpr double kHeuristicTol = 1e-9;

    bool is_discrete() const
    {
        return shape == SubgroupShape::Zero || shape == SubgroupShape::Lattice1 || shape == SubgroupShape::Lattice2;
    }

    /// Exact membership for exact descriptions and exact x.
    Tri contains(const PlanarVector& v) const
    {
        if (!exact) return distance(v.to_complex()) <= kHeuristicTol ? Tri::Yes : Tri::No;
        switch (shape) {
        case SubgroupShape::Zero: return from_bool(v.is_zero());
        case SubgroupShape::Lattice1:
        case SubgroupShape::Lattice2: return from_bool(module.contains(v.coords()));
        case SubgroupShape::LineDense: return from_bool(cross(basis[0], v).is_zero());
        case SubgroupShape::LineLattice: return from_bool(dot(*dual, v).is_integer());
        default: return Tri::Yes;
        }
    }

    Tri contains(const CycloScalar& z) const { return contains(PlanarVector::from_complex(z)); }

    /// Euclidean distance from w to the closure.
    double distance(std::complex<double> w) const
    {
        switch (shape) {
        case SubgroupShape::Zero: return std::abs(w);
        case SubgroupShape::Lattice1: {
            const std::complex<double> a = numeric[0];
            const double t = std::real(w * std::conj(a)) / std::norm(a);
            const double k = std::round(t);
            return std::min({std::abs(w - k * a), std::abs(w - (k - 1) * a), std::abs(w - (k + 1) * a)});
        }
        case SubgroupShape::Lattice2: return lattice_distance(w);
        case SubgroupShape::LineDense: {
            const std::complex<double> u = numeric[0] / std::abs(numeric[0]);
            return std::abs(std::imag(w * std::conj(u)));
        }
        case SubgroupShape::LineLattice: {
            const std::complex<double> phi = numeric_dual;
            const double s = std::real(w * std::conj(phi));
            return std::abs(s - std::round(s)) / std::abs(phi);
        }
        default: return 0.0;
        }
    }

    /// Real dimension of the identity component of the closure.
    int continuous_dim() const
    {
        switch (shape) {
        case SubgroupShape::LineDense:
        case SubgroupShape::LineLattice: return 1;
        case SubgroupShape::Plane: return 2;
        default: return 0;
        }
    }

    friend bool operator==(const ClosedSubgroupDesc& a, const ClosedSubgroupDesc& b)
    {
        if (a.shape != b.shape || a.exact != b.exact) return false;
        if (!a.exact) return a.numeric == b.numeric;
        switch (a.shape) {
        case SubgroupShape::Lattice1:
        case SubgroupShape::Lattice2: return a.module == b.module;
        case SubgroupShape::LineDense: return cross(a.basis[0], b.basis[0]).is_zero();
        case SubgroupShape::LineLattice: return *a.dual == *b.dual || *a.dual == QSqrt3(-1) * *b.dual;
        default: return true;
        }
    }

private:
    double lattice_distance(std::complex<double> w) const
    {
        // Lagrange-Gauss reduction, then a small search around the rounded coordinates.
        std::complex<double> a = numeric[0];
        std::complex<double> b = numeric[1];
        if (std::norm(a) > std::norm(b)) std::swap(a, b);
        for (int it = 0; it < 64; ++it) {
            const double mu = std::round(std::real(b * std::conj(a)) / std::norm(a));
            if (mu == 0.0) break;
            b -= mu * a;
            if (std::norm(b) < std::norm(a)) std::swap(a, b);
        }
        const double det = std::imag(std::conj(a) * b);
        const double s = std::imag(std::conj(w) * b) / -det;
        const double t = std::imag(std::conj(a) * w) / det;
        double best = std::abs(w);
        for (int i = -2; i <= 2; ++i) {
            for (int j = -2; j <= 2; ++j) {
                const std::complex<double> p = (std::round(s) + i) * a + (std::round(t) + j) * b;
                best = std::min(best, std::abs(w - p));
            }
        }
        return best;
    }
};

namespace detail {

inline std::complex<double> to_c(const PlanarVector& v) { return v.to_complex(); }

inline ClosedSubgroupDesc finish(ClosedSubgroupDesc d)
{
    d.numeric.clear();
    for (const auto& b : d.basis) d.numeric.push_back(b.to_complex());
    if (d.dual) d.numeric_dual = d.dual->to_complex();
    return d;
}

inline Integer lcm_denominators(const RatVec& v)
{
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

/// Scales a nonzero rational vector to a primitive integer vector.
inline RatVec primitive(const RatVec& v)
{
    const Integer l = lcm_denominators(v);
    RatVec out;
    Integer g = 0;
    for (const auto& q : v) {
        Rational s = q * Rational(l);
        out.push_back(s);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
    }
    for (auto& q : out) q /= Rational(g);
    for (const auto& q : out) {
        if (sgn(q) != 0) {
            if (sgn(q) < 0) {
                for (auto& r : out) r = -r;
            }
            break;
        }
    }
    return out;
}

} // namespace detail

/// Exact real rank of a family of planar vectors.
inline std::size_t real_rank(const std::vector<PlanarVector>& vs)
{
    Matrix<QSqrt3> m;
    for (const auto& v : vs) m.push_back({v.x, v.y});
    return rank(m, 2);
}

/// Closure of the subgroup generated by exact planar vectors.
///
/// The abstract group sits in Q^4 through the {1, sqrt3} coordinates of
/// each axis; its Hermite basis has m elements spanning a real space of
/// dimension d. When m > d = 2 the dual group {phi : phi . H in Z} is
/// computed from the real relations among the basis vectors, and its rank
/// r picks Plane (r = 0) or LineLattice (r = 1).
inline ClosedSubgroupDesc classify_additive_closure(const std::vector<PlanarVector>& gens)
{
    std::vector<RatVec> rows;
    for (const auto& g : gens) rows.push_back(g.coords());
    ClosedSubgroupDesc out;
    out.module = ZModule(4, rows);
    std::vector<PlanarVector> hb;
    for (const auto& r : out.module.basis()) hb.push_back(PlanarVector::from_coords(r));
    const std::size_t m = hb.size();
    const std::size_t d = real_rank(hb);

    if (d == 0) {
        out.shape = SubgroupShape::Zero;
        return detail::finish(out);
    }
    if (m == d) {
        out.shape = d == 1 ? SubgroupShape::Lattice1 : SubgroupShape::Lattice2;
        out.basis = hb;
        return detail::finish(out);
    }
    if (d == 1) {
        out.shape = SubgroupShape::LineDense;
        out.basis = {hb[0]};
        return detail::finish(out);
    }

    // Real relations c with sum c_j v_j = 0, split into rational parts.
    Matrix<QSqrt3> mt(2, std::vector<QSqrt3>(m));
    for (std::size_t j = 0; j < m; ++j) {
        mt[0][j] = hb[j].x;
        mt[1][j] = hb[j].y;
    }
    const Matrix<QSqrt3> rel = nullspace(mt, m);
    Matrix<Rational> constraints;
    for (const auto& c : rel) {
        RatVec c1(m), c2(m);
        for (std::size_t j = 0; j < m; ++j) {
            c1[j] = c[j].rational_part();
            c2[j] = c[j].sqrt3_part();
        }
        constraints.push_back(c1);
        constraints.push_back(c2);
    }
    const Matrix<Rational> w = nullspace(constraints, m);
    if (w.empty()) {
        out.shape = SubgroupShape::Plane;
        return detail::finish(out);
    }
    if (w.size() > 1) throw Error("dual group of a non-discrete subgroup has rank 2");

    const RatVec n0 = detail::primitive(w[0]);
    Matrix<QSqrt3> sys;
    std::vector<QSqrt3> rhs;
    for (std::size_t j = 0; j < m; ++j) {
        sys.push_back({hb[j].x, hb[j].y});
        rhs.emplace_back(n0[j]);
    }
    const auto phi = solve(sys, rhs, 2);
    if (!phi) throw Error("dual functional not solvable");
    const PlanarVector phi0{(*phi)[0], (*phi)[1]};
    out.shape = SubgroupShape::LineLattice;
    out.dual = phi0;
    out.basis = {perp(phi0), dot(phi0, phi0).inverse() * phi0};
    return detail::finish(out);
}

/// Generators of the discrete dual group {phi : phi . H in Z} for Lattice2
/// and LineLattice closures; empty for other shapes.
inline std::vector<PlanarVector> dual_generators(const ClosedSubgroupDesc& d)
{
    if (!d.exact) throw Error("dual of a heuristic description");
    if (d.shape == SubgroupShape::LineLattice) return {*d.dual};
    if (d.shape != SubgroupShape::Lattice2) return {};
    const PlanarVector& a = d.basis[0];
    const PlanarVector& b = d.basis[1];
    const QSqrt3 inv = cross(a, b).inverse();
    // columns of [[a.x, a.y], [b.x, b.y]]^-1
    return {inv * PlanarVector{b.y, -b.x}, inv * PlanarVector{-a.y, a.x}};
}

/// Heuristic closure of a subgroup given by floating-point generators.
///
/// Enumerates integer combinations with growing coefficient bound and
/// watches the shortest nonzero vectors. Short vectors in two independent
/// directions mean Plane; in one direction mean a line component; none
/// mean a lattice. The result is flagged non-exact.
inline ClosedSubgroupDesc classify_additive_closure_numeric(const std::vector<std::complex<double>>& gens,
                                                           double tol = 1e-9)
{
    ClosedSubgroupDesc out;
    out.exact = false;
    double scale = 0.0;
    for (const auto& g : gens) scale = std::max(scale, std::abs(g));
    std::vector<std::complex<double>> gs;
    for (const auto& g : gens) {
        if (std::abs(g) > tol * std::max(1.0, scale)) gs.push_back(g);
    }
    if (gs.empty()) {
        out.shape = SubgroupShape::Zero;
        return out;
    }
    Matrix<std::complex<double>> m;
    for (const auto& g : gs) m.push_back({g.real(), g.imag()});
    const std::size_t d = rank(m, 2, tol * scale);

    const std::size_t k = gs.size();
    int bound = 1;
    while (std::pow(2.0 * (bound + 1) + 1.0, static_cast<double>(k)) <= 2e5) ++bound;
    std::vector<std::complex<double>> combos;
    std::vector<int> coef(k, -bound);
    for (;;) {
        std::complex<double> s = 0.0;
        bool nonzero = false;
        for (std::size_t j = 0; j < k; ++j) {
            s += static_cast<double>(coef[j]) * gs[j];
            nonzero = nonzero || coef[j] != 0;
        }
        if (nonzero && std::abs(s) > tol * scale) combos.push_back(s);
        std::size_t j = 0;
        while (j < k && coef[j] == bound) coef[j++] = -bound;
        if (j == k) break;
        ++coef[j];
    }
    std::sort(combos.begin(), combos.end(),
              [](const auto& a, const auto& b) { return std::abs(a) < std::abs(b); });
    const double shortest_gen = std::abs(*std::min_element(
        gs.begin(), gs.end(), [](const auto& a, const auto& b) { return std::abs(a) < std::abs(b); }));
    const double small = 1e-2 * shortest_gen;
    std::vector<std::complex<double>> tiny;
    for (const auto& c : combos) {
        if (std::abs(c) < small) tiny.push_back(c);
    }
    std::size_t dirs = 0;
    std::complex<double> dir0;
    for (const auto& t : tiny) {
        if (dirs == 0) {
            dir0 = t / std::abs(t);
            dirs = 1;
        } else if (std::abs(std::imag(t * std::conj(dir0))) > 0.2 * std::abs(t)) {
            dirs = 2;
            break;
        }
    }
    if (d == 1) {
        out.shape = dirs == 0 ? SubgroupShape::Lattice1 : SubgroupShape::LineDense;
        out.numeric = {combos.front()};
        return out;
    }
    if (dirs == 2) {
        out.shape = SubgroupShape::Plane;
        return out;
    }
    if (dirs == 1) {
        out.shape = SubgroupShape::LineLattice;
        std::complex<double> b = 0.0;
        double best = -1.0;
        for (const auto& c : combos) {
            const double h = std::abs(std::imag(c * std::conj(dir0)));
            if (h > 10 * small && (best < 0 || h < best)) {
                best = h;
                b = c;
            }
        }
        if (best < 0) throw UndecidableAtPrecision("no transversal found for line component");
        // phi is normal to the line with phi . b = 1
        const std::complex<double> nrm = dir0 * std::complex<double>(0.0, 1.0);
        out.numeric = {dir0, b};
        out.numeric_dual = nrm / std::real(b * std::conj(nrm));
        return out;
    }
    out.shape = SubgroupShape::Lattice2;
    const std::complex<double> a = combos.front();
    for (const auto& c : combos) {
        if (std::abs(std::imag(c * std::conj(a))) > 1e-6 * std::abs(c) * std::abs(a)) {
            out.numeric = {a, c};
            return out;
        }
    }
    throw UndecidableAtPrecision("lattice basis not found");
}

} // namespace affhom
