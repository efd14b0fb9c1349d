#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "approx.hpp"
#include "cyclo.hpp"
#include "tri.hpp"

namespace affhom {

/// A complex scalar that is either exact (in Q(zeta12)) or approximate.
///
/// Mixed arithmetic demotes to approximate; `is_exact()` is the exactness
/// flag that reports carry forward.
class Scalar {
public:
    Scalar() : v_(CycloScalar()) {}
    Scalar(long v) : v_(CycloScalar(v)) {}
    Scalar(int v) : v_(CycloScalar(static_cast<long>(v))) {}
    Scalar(Rational v) : v_(CycloScalar(std::move(v))) {}
    Scalar(CycloScalar v) : v_(std::move(v)) {}
    Scalar(ApproxScalar v) : v_(std::move(v)) {}

    static Scalar approx(std::complex<double> v, double err = 0.0) { return ApproxScalar::from(v, err); }

    bool is_exact() const { return std::holds_alternative<CycloScalar>(v_); }

    const CycloScalar& exact() const
    {
        if (!is_exact()) throw Error("exact value requested from approximate scalar");
        return std::get<CycloScalar>(v_);
    }

    ApproxScalar as_approx() const
    {
        if (const auto* a = std::get_if<ApproxScalar>(&v_)) return *a;
        const auto& c = std::get<CycloScalar>(v_);
        ApproxScalar out = ApproxScalar::from(c.to_complex());
        out.modulus_sq = c.abs_sq();
        return out;
    }

    std::complex<double> to_complex() const
    {
        if (const auto* a = std::get_if<ApproxScalar>(&v_)) return a->value();
        return std::get<CycloScalar>(v_).to_complex();
    }

    /// Absolute error radius; zero for exact values.
    double error() const
    {
        if (const auto* a = std::get_if<ApproxScalar>(&v_)) return a->err;
        return 0.0;
    }

    Scalar operator-() const
    {
        return std::visit([](const auto& x) -> Scalar { return -x; }, v_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b)
    {
        if (a.is_exact() && b.is_exact()) return a.exact() + b.exact();
        return a.as_approx() + b.as_approx();
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b)
    {
        if (a.is_exact() && b.is_exact()) return a.exact() - b.exact();
        return a.as_approx() - b.as_approx();
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        if (a.is_exact() && b.is_exact()) return a.exact() * b.exact();
        // exact zero annihilates without losing exactness
        if (a.is_exact() && a.exact().is_zero()) return a;
        if (b.is_exact() && b.exact().is_zero()) return b;
        return a.as_approx() * b.as_approx();
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Throws DivisionByZero for exact zero, UncertainZero when |x| <= err.
    Scalar inverse() const
    {
        if (is_exact()) return exact().inverse();
        return std::get<ApproxScalar>(v_).inverse();
    }

    Scalar conj() const
    {
        return std::visit([](const auto& x) -> Scalar { return x.conj(); }, v_);
    }

    /// |x|^2; exact (in the real subfield) whenever the modulus is known exactly.
    Scalar abs_sq() const
    {
        if (is_exact()) {
            const QSqrt3 m = exact().abs_sq();
            return CycloScalar::from_parts(m, QSqrt3());
        }
        const auto& a = std::get<ApproxScalar>(v_);
        if (a.modulus_sq) return CycloScalar::from_parts(*a.modulus_sq, QSqrt3());
        const double r = a.abs();
        const double v = r * r;
        return ApproxScalar{v, 0.0, 2.0 * r * a.err + a.err * a.err + ApproxScalar::kRound * v, std::nullopt};
    }

    Scalar pow(long e) const
    {
        if (is_exact()) return exact().pow(e);
        Scalar base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        Scalar acc(1);
        while (k) {
            if (k & 1UL) acc *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return acc;
    }

    Tri is_zero() const
    {
        if (is_exact()) return from_bool(exact().is_zero());
        const auto& a = std::get<ApproxScalar>(v_);
        if (a.modulus_sq && !a.modulus_sq->is_zero()) return Tri::No;
        return a.abs() <= a.err ? Tri::Unknown : Tri::No;
    }

    std::string to_string() const
    {
        return std::visit([](const auto& x) { return x.to_string(); }, v_);
    }

    const std::variant<CycloScalar, ApproxScalar>& variant() const { return v_; }

    /// Representation equality: equal exact values, or identical
    /// approximate records. Use `equals` for the mathematical question.
    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        if (a.is_exact() != b.is_exact()) return false;
        if (a.is_exact()) return a.exact() == b.exact();
        const auto& x = std::get<ApproxScalar>(a.v_);
        const auto& y = std::get<ApproxScalar>(b.v_);
        return x.re == y.re && x.im == y.im && x.err == y.err;
    }

private:
    std::variant<CycloScalar, ApproxScalar> v_;
};

inline Tri equals(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

inline Tri is_real(const Scalar& x)
{
    if (x.is_exact()) return from_bool(x.exact().imag_part().is_zero());
    const ApproxScalar a = x.as_approx();
    return std::abs(a.im) <= a.err ? Tri::Unknown : Tri::No;
}

inline Tri modulus_is_one(const Scalar& x) { return equals(x.abs_sq(), Scalar(1)); }

inline Tri in_F2(const Scalar& x)
{
    if (modulus_is_one(x) == Tri::No) return Tri::No;
    return equals(x.pow(4), Scalar(1));
}

inline Tri in_F3(const Scalar& x)
{
    if (modulus_is_one(x) == Tri::No) return Tri::No;
    return equals(x.pow(6), Scalar(1));
}

struct RootOfUnityAnswer {
    Tri is_root = Tri::Unknown;
    std::optional<int> order;
};

/// Roots of unity inside Q(zeta12) are exactly the 12th roots of unity.
inline RootOfUnityAnswer is_root_of_unity(const Scalar& x)
{
    if (x.is_exact()) {
        const auto ord = x.exact().root_of_unity_order();
        return {from_bool(ord.has_value()), ord};
    }
    if (modulus_is_one(x) == Tri::No) return {Tri::No, std::nullopt};
    return {Tri::Unknown, std::nullopt};
}

} // namespace affhom
