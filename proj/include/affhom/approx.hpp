#pragma once

#include <cfloat>
#include <cstdio>
#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "errors.hpp"
#include "qsqrt3.hpp"

namespace affhom {

/// Floating-point complex number with a conservative absolute error radius.
///
/// `modulus_sq` optionally records an exactly known |x|^2 (for example the
/// unit modulus of exp(i*t) for a decimal angle t). It survives
/// multiplication, inversion and conjugation and is dropped by addition.
struct ApproxScalar {
    double re = 0.0;
    double im = 0.0;
    double err = 0.0;
    std::optional<QSqrt3> modulus_sq;

    static constexpr double kRound = 8.0 * DBL_EPSILON;

    std::complex<double> value() const { return {re, im}; }
    double abs() const { return std::hypot(re, im); }

    static ApproxScalar from(std::complex<double> v, double err = 0.0)
    {
        return {v.real(), v.imag(), err + kRound * std::abs(v), std::nullopt};
    }

    ApproxScalar operator-() const { return {-re, -im, err, modulus_sq}; }

    friend ApproxScalar operator+(const ApproxScalar& a, const ApproxScalar& b)
    {
        const std::complex<double> v = a.value() + b.value();
        return {v.real(), v.imag(), a.err + b.err + kRound * std::abs(v), std::nullopt};
    }

    friend ApproxScalar operator-(const ApproxScalar& a, const ApproxScalar& b) { return a + (-b); }

    friend ApproxScalar operator*(const ApproxScalar& a, const ApproxScalar& b)
    {
        const std::complex<double> v = a.value() * b.value();
        const double ea = a.abs() * b.err + b.abs() * a.err + a.err * b.err + kRound * std::abs(v);
        std::optional<QSqrt3> m;
        if (a.modulus_sq && b.modulus_sq) m = *a.modulus_sq * *b.modulus_sq;
        return {v.real(), v.imag(), ea, std::move(m)};
    }

    ApproxScalar inverse() const
    {
        const double r = abs();
        if (r <= err) throw UncertainZero();
        const std::complex<double> v = 1.0 / value();
        const double e = err / (r * (r - err)) + kRound * std::abs(v);
        std::optional<QSqrt3> m;
        if (modulus_sq) m = modulus_sq->inverse();
        return {v.real(), v.imag(), e, std::move(m)};
    }

    friend ApproxScalar operator/(const ApproxScalar& a, const ApproxScalar& b) { return a * b.inverse(); }

    ApproxScalar conj() const { return {re, -im, err, modulus_sq}; }

    std::string to_string() const
    {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", re, im);
        return buf;
    }
};

} // namespace affhom
