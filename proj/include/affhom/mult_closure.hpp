#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "cyclo.hpp"
#include "rational.hpp"
#include "scalar.hpp"
#include "tri.hpp"
#include "zmodule.hpp"

namespace affhom {

/// Pairwise coprime integers > 1 such that every registered integer is a
/// product of their powers. Replaces prime factorisation for exponent
/// bookkeeping; the elements are multiplicatively independent.
class CoprimeBase {
public:
    void add(Integer x)
    {
        x = abs(x);
        std::vector<Integer> stack{x};
        while (!stack.empty()) {
            Integer y = stack.back();
            stack.pop_back();
            if (y <= 1) continue;
            bool split = false;
            for (std::size_t i = 0; i < base_.size(); ++i) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), y.get_mpz_t(), base_[i].get_mpz_t());
                if (g > 1) {
                    const Integer b = base_[i];
                    base_.erase(base_.begin() + static_cast<std::ptrdiff_t>(i));
                    stack.push_back(g);
                    stack.push_back(y / g);
                    stack.push_back(b / g);
                    split = true;
                    break;
                }
            }
            if (!split) base_.push_back(y);
        }
        std::sort(base_.begin(), base_.end());
    }

    void add(const Rational& q)
    {
        add(Integer(q.get_num()));
        add(Integer(q.get_den()));
    }

    const std::vector<Integer>& elements() const { return base_; }

    /// Exponent vector of a positive rational, or nullopt if it is not a
    /// product of base powers.
    std::optional<RatVec> exponents(const Rational& q) const
    {
        if (sgn(q) <= 0) return std::nullopt;
        RatVec e(base_.size());
        Integer num = q.get_num();
        Integer den = q.get_den();
        for (std::size_t i = 0; i < base_.size(); ++i) {
            long k = 0;
            while (mpz_divisible_p(num.get_mpz_t(), base_[i].get_mpz_t())) {
                num /= base_[i];
                ++k;
            }
            while (mpz_divisible_p(den.get_mpz_t(), base_[i].get_mpz_t())) {
                den /= base_[i];
                --k;
            }
            e[i] = k;
        }
        if (num != 1 || den != 1) return std::nullopt;
        return e;
    }

    Rational value(const RatVec& e) const
    {
        Rational v = 1;
        for (std::size_t i = 0; i < base_.size(); ++i) {
            const long k = e[i].get_num().get_si();
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), base_[i].get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
            v *= k < 0 ? Rational(1) / Rational(p) : Rational(p);
        }
        return v;
    }

private:
    std::vector<Integer> base_;
};

enum class MultShape {
    FiniteCyclic,
    RaysDiscrete,
    RaysDense,
    CircleDense,
    PlaneDense,
    HeuristicDense,
    HeuristicDiscrete,
    Unknown
};

inline std::string to_string(MultShape s)
{
    switch (s) {
    case MultShape::FiniteCyclic: return "FiniteCyclic";
    case MultShape::RaysDiscrete: return "RaysDiscrete";
    case MultShape::RaysDense: return "RaysDense";
    case MultShape::CircleDense: return "CircleDense";
    case MultShape::PlaneDense: return "PlaneDense";
    case MultShape::HeuristicDense: return "HeuristicDense";
    case MultShape::HeuristicDiscrete: return "HeuristicDiscrete";
    default: return "Unknown";
    }
}

/// Angle of a unit-circle direction in units of pi/12, for exact scalars
/// whose argument is a multiple of pi/12.
inline std::optional<int> angle_units(const CycloScalar& x)
{
    if (x.is_zero()) return std::nullopt;
    const auto e = (x / x.conj()).zeta_exponent();
    if (!e) return std::nullopt;
    const double target = std::arg(x.to_complex()) * 12.0 / std::numbers::pi;
    // the two candidates differ by pi, so rounding cannot pick the wrong one
    int t = *e;
    double diff = std::remainder(target - t, 24.0);
    if (std::abs(diff) > 6.0) t += 12;
    return ((t % 24) + 24) % 24;
}

/// Closure of the multiplicative group generated by nonzero ratios, as a
/// subset of C (0 included when some modulus differs from 1).
///
/// Shapes: FiniteCyclic{order, generator}; RaysDiscrete with elements
/// r^j exp(i pi (j twist + l step) / 12), r^2 = modulus_sq_base > 1 and
/// step = 24 / order; RaysDense with `order` rays; CircleDense (unit
/// circle); PlaneDense (all of C); heuristic shapes carry evidence.
struct MultClosureDesc {
    MultShape shape = MultShape::FiniteCyclic;
    bool includes_zero = false;
    bool exact = true;
    int order = 1;
    std::optional<CycloScalar> generator;
    Rational modulus_sq_base{1};
    int twist = 0;
    CoprimeBase base;
    RatVec exponent_step;
    std::vector<std::complex<double>> log_generators;
    std::vector<std::complex<double>> log_samples;
    double log_window = 0.0;
    double fill_fraction = 0.0;
    std::vector<double> gap_history;

    static constexpr double kHeuristicTol = 1e-9;

    int step() const { return 24 / order; }

    /// Membership of alpha in the closure.
    Tri contains(const Scalar& alpha) const
    {
        const Tri zero = alpha.is_zero();
        if (zero == Tri::Yes) return from_bool(includes_zero);
        if (!alpha.is_exact() || !exact) {
            const double d = distance(alpha.to_complex());
            if (shape == MultShape::Unknown) return Tri::Unknown;
            if (d > kHeuristicTol + alpha.error()) return Tri::No;
            return exact ? Tri::Unknown : Tri::Yes;
        }
        const CycloScalar& a = alpha.exact();
        switch (shape) {
        case MultShape::FiniteCyclic: return from_bool(a.pow(order).is_one());
        case MultShape::RaysDiscrete: return from_bool(in_rays_discrete(a));
        case MultShape::RaysDense: {
            const CycloScalar p = a.pow(order);
            return from_bool(p.imag_part().is_zero() && p.real_part().sign() > 0);
        }
        case MultShape::CircleDense: return from_bool(a.abs_sq() == QSqrt3(1));
        case MultShape::PlaneDense:
        case MultShape::HeuristicDense: return Tri::Yes;
        default: return Tri::Unknown;
        }
    }

    /// Euclidean distance from w to the closure (heuristic shapes use the
    /// sampled elements).
    double distance(std::complex<double> w) const
    {
        const double r = std::abs(w);
        double best = includes_zero ? r : std::numeric_limits<double>::infinity();
        const double pi = std::numbers::pi;
        switch (shape) {
        case MultShape::FiniteCyclic:
            for (int j = 0; j < order; ++j) best = std::min(best, std::abs(w - std::polar(1.0, 2 * pi * j / order)));
            return best;
        case MultShape::RaysDiscrete: {
            const double lb = std::log(modulus_sq_base.get_d()) / 2.0;
            if (r == 0.0) return best;
            const long j0 = std::lround(std::log(r) / lb);
            for (long j = j0 - 1; j <= j0 + 1; ++j) {
                const double mod = std::exp(static_cast<double>(j) * lb);
                for (int l = 0; l < order; ++l) {
                    const double ang = static_cast<double>(j * twist + l * step()) * pi / 12.0;
                    best = std::min(best, std::abs(w - std::polar(mod, ang)));
                }
            }
            return best;
        }
        case MultShape::RaysDense:
            for (int l = 0; l < order; ++l) {
                const double diff = std::abs(std::remainder(std::arg(w) - 2 * pi * l / order, 2 * pi));
                best = std::min(best, diff >= pi / 2 ? r : r * std::sin(diff));
            }
            return best;
        case MultShape::CircleDense: return std::min(best, std::abs(r - 1.0));
        case MultShape::PlaneDense:
        case MultShape::HeuristicDense: return 0.0;
        case MultShape::HeuristicDiscrete: {
            if (r == 0.0) return best;
            for (const auto& s : log_samples) best = std::min(best, std::abs(w - std::exp(s)));
            return best;
        }
        default: return best;
        }
    }

private:
    bool in_rays_discrete(const CycloScalar& a) const
    {
        const QSqrt3 m2 = a.abs_sq();
        if (!m2.is_rational()) return false;
        const auto e = base.exponents(m2.rational_part());
        if (!e) return false;
        // e must be an integer multiple of exponent_step
        std::optional<Rational> mult;
        for (std::size_t i = 0; i < e->size(); ++i) {
            if (sgn(exponent_step[i]) == 0) {
                if (sgn((*e)[i]) != 0) return false;
                continue;
            }
            const Rational q = (*e)[i] / exponent_step[i];
            if (mult && *mult != q) return false;
            mult = q;
        }
        const Rational m = mult.value_or(Rational(0));
        if (!is_integer(m)) return false;
        const auto t = angle_units(a);
        if (!t) return false;
        const long j = m.get_num().get_si();
        const long rem = (*t - j * twist) % step();
        return rem == 0;
    }
};

namespace detail {

inline MultClosureDesc finite_cyclic(const std::vector<int>& angles)
{
    int g = 24;
    for (int t : angles) g = std::gcd(g, t);
    MultClosureDesc d;
    d.shape = MultShape::FiniteCyclic;
    d.order = 24 / g;
    d.generator = CycloScalar::zeta_power(g / 2);
    return d;
}

/// Evidence scan of the lifted group in the log-cylinder R x R/2piZ.
inline MultClosureDesc heuristic_mult(const std::vector<std::complex<double>>& ratios, bool includes_zero)
{
    const double two_pi = 2.0 * std::numbers::pi;
    MultClosureDesc d;
    d.exact = false;
    d.includes_zero = includes_zero;
    for (const auto& r : ratios) d.log_generators.push_back(std::log(r));
    const std::size_t k = d.log_generators.size();
    double w = 0.0;
    for (const auto& l : d.log_generators) w = std::max(w, std::abs(l.real()));
    if (w == 0.0) w = 1.0;
    d.log_window = w;

    int kmax = 1;
    while (kmax < 40 && std::pow(2.0 * (kmax + 1) + 1.0, static_cast<double>(k)) <= 2e5) ++kmax;
    const int grid = 32;
    auto cell = [&](std::complex<double> p) {
        const int ix = std::clamp(static_cast<int>((p.real() + w) / (2 * w) * grid), 0, grid - 1);
        const int iy = std::clamp(static_cast<int>(p.imag() / two_pi * grid), 0, grid - 1);
        return ix * grid + iy;
    };
    auto gap = [&](std::vector<std::complex<double>> pts) {
        std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.real() < b.real(); });
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size() && pts[j].real() - pts[i].real() < best; ++j) {
                const double dy = std::abs(std::remainder(pts[j].imag() - pts[i].imag(), two_pi));
                best = std::min(best, std::hypot(pts[j].real() - pts[i].real(), dy));
            }
        }
        return best;
    };
    std::vector<std::complex<double>> pts;
    for (int bound = 1; bound <= kmax; ++bound) {
        pts.clear();
        std::vector<int> coef(k, -bound);
        for (;;) {
            std::complex<double> s = 0.0;
            for (std::size_t j = 0; j < k; ++j) s += static_cast<double>(coef[j]) * d.log_generators[j];
            if (std::abs(s.real()) <= w) pts.emplace_back(s.real(), s.imag() - two_pi * std::floor(s.imag() / two_pi));
            std::size_t j = 0;
            while (j < k && coef[j] == bound) coef[j++] = -bound;
            if (j == k) break;
            ++coef[j];
        }
        // coincident points are the same group element
        std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        std::vector<std::complex<double>> uniq;
        for (const auto& p : pts) {
            if (uniq.empty() || std::abs(uniq.back() - p) > 1e-12) uniq.push_back(p);
        }
        pts = std::move(uniq);
        d.gap_history.push_back(pts.size() > 1 ? gap(pts) : std::numeric_limits<double>::infinity());
    }
    std::unordered_set<int> cells;
    for (const auto& p : pts) cells.insert(cell(p));
    d.fill_fraction = static_cast<double>(cells.size()) / (grid * grid);
    d.log_samples = pts;

    const auto& h = d.gap_history;
    const bool stable = h.size() >= 4 && h[h.size() - 1] == h[h.size() - 2] && h[h.size() - 2] == h[h.size() - 3] &&
                        h[h.size() - 3] == h[h.size() - 4];
    if (d.fill_fraction >= 0.9) {
        d.shape = MultShape::HeuristicDense;
    } else if (stable) {
        d.shape = MultShape::HeuristicDiscrete;
    } else {
        d.shape = MultShape::Unknown;
    }
    return d;
}

} // namespace detail

/// Closure of the multiplicative group generated by `ratios` (all nonzero).
///
/// Exact when every ratio has rational squared modulus and an argument in
/// (pi/12)Z, or when all moduli are 1. Other inputs go through a heuristic
/// scan of the lifted group on the log-cylinder.
inline MultClosureDesc classify_multiplicative_closure(const std::vector<Scalar>& ratios)
{
    bool all_exact = true;
    Tri all_unit = Tri::Yes;
    for (const auto& r : ratios) {
        if (r.is_zero() == Tri::Yes) throw InputError("zero ratio");
        all_exact = all_exact && r.is_exact();
        all_unit = tri_and(all_unit, modulus_is_one(r));
    }

    if (all_unit == Tri::Yes) {
        std::vector<int> angles;
        bool finite = true;
        bool certain = true;
        for (const auto& r : ratios) {
            if (r.is_exact()) {
                const auto t = angle_units(r.exact());
                if (t && r.exact().root_of_unity_order()) {
                    angles.push_back(*t);
                } else {
                    finite = false;
                }
                continue;
            }
            // approximate unit-modulus ratio: look for a small order numerically
            certain = false;
            const std::complex<double> v = r.to_complex();
            int found = 0;
            for (int q = 1; q <= 24 && !found; ++q) {
                if (std::abs(std::pow(v, q) - 1.0) <= 1e-9 * q) found = q;
            }
            if (found && 24 % found == 0) {
                angles.push_back(static_cast<int>(std::lround(std::arg(v) * 12.0 / std::numbers::pi) + 24) % 24);
            } else {
                finite = false;
            }
        }
        MultClosureDesc d;
        if (finite) {
            d = detail::finite_cyclic(angles);
        } else {
            d.shape = MultShape::CircleDense;
        }
        d.exact = certain;
        return d;
    }

    if (all_exact && all_unit == Tri::No) {
        CoprimeBase base;
        std::vector<Rational> mods;
        std::vector<int> angles;
        bool ok = true;
        for (const auto& r : ratios) {
            const QSqrt3 m2 = r.exact().abs_sq();
            const auto t = angle_units(r.exact());
            if (!m2.is_rational() || !t) {
                ok = false;
                break;
            }
            mods.push_back(m2.rational_part());
            angles.push_back(*t);
            base.add(m2.rational_part());
        }
        if (ok) {
            const std::size_t p = base.elements().size();
            std::vector<RatVec> exps;
            for (const auto& m : mods) exps.push_back(*base.exponents(m));
            const ZModule lattice(p, exps);
            MultClosureDesc d;
            d.includes_zero = true;
            d.base = base;
            if (lattice.rank() >= 2) {
                d.shape = MultShape::RaysDense;
                d.order = detail::finite_cyclic(angles).order;
                return d;
            }
            RatVec g0 = lattice.basis()[0];
            if (base.value(g0) < 1) {
                for (auto& x : g0) x = -x;
            }
            const std::size_t piv = lattice.pivots()[0];
            std::vector<RatVec> rows{{Rational(0), Rational(24)}};
            for (std::size_t j = 0; j < exps.size(); ++j) rows.push_back({exps[j][piv] / g0[piv], Rational(angles[j])});
            const ZModule coupled(2, rows);
            const RatVec& top = coupled.basis()[0];
            const RatVec& bottom = coupled.basis()[1];
            const long a = top[0].get_num().get_si();
            const long c = bottom[1].get_num().get_si();
            d.shape = MultShape::RaysDiscrete;
            d.order = static_cast<int>(24 / c);
            d.twist = static_cast<int>(top[1].get_num().get_si());
            RatVec step = g0;
            for (auto& x : step) x *= a;
            d.exponent_step = step;
            d.modulus_sq_base = base.value(step);
            return d;
        }
    }

    std::vector<std::complex<double>> vs;
    for (const auto& r : ratios) vs.push_back(r.to_complex());
    const bool includes_zero = all_unit == Tri::No;
    return detail::heuristic_mult(vs, includes_zero);
}

} // namespace affhom
