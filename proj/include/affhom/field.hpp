#pragma once

#include <complex>

#include "cyclo.hpp"
#include "qsqrt3.hpp"
#include "rational.hpp"
#include "scalar.hpp"
#include "tri.hpp"

namespace affhom {

// Uniform vocabulary over the coefficient types the templates accept:
// Rational, QSqrt3, CycloScalar, Scalar and std::complex<double>.

template <class T>
struct field_traits;

template <>
struct field_traits<Rational> {
    static constexpr bool exact = true;
    static Tri is_zero(const Rational& x) { return from_bool(sgn(x) == 0); }
    static Rational inverse(const Rational& x)
    {
        if (sgn(x) == 0) throw DivisionByZero();
        return 1 / x;
    }
    static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
};

template <>
struct field_traits<QSqrt3> {
    static constexpr bool exact = true;
    static Tri is_zero(const QSqrt3& x) { return from_bool(x.is_zero()); }
    static QSqrt3 inverse(const QSqrt3& x) { return x.inverse(); }
    static double magnitude(const QSqrt3& x) { return std::abs(x.to_double()); }
};

template <>
struct field_traits<CycloScalar> {
    static constexpr bool exact = true;
    static Tri is_zero(const CycloScalar& x) { return from_bool(x.is_zero()); }
    static CycloScalar inverse(const CycloScalar& x) { return x.inverse(); }
    static double magnitude(const CycloScalar& x) { return std::abs(x.to_complex()); }
    static std::complex<double> to_complex(const CycloScalar& x) { return x.to_complex(); }
    static CycloScalar conj(const CycloScalar& x) { return x.conj(); }
};

template <>
struct field_traits<Scalar> {
    static constexpr bool exact = false;
    static Tri is_zero(const Scalar& x) { return x.is_zero(); }
    static Scalar inverse(const Scalar& x) { return x.inverse(); }
    static double magnitude(const Scalar& x) { return std::abs(x.to_complex()); }
    static std::complex<double> to_complex(const Scalar& x) { return x.to_complex(); }
    static Scalar conj(const Scalar& x) { return x.conj(); }
};

template <>
struct field_traits<std::complex<double>> {
    static constexpr bool exact = false;
    // Floating-point zero tests are left to callers with a tolerance.
    static Tri is_zero(const std::complex<double>& x) { return x == 0.0 ? Tri::Yes : Tri::No; }
    static std::complex<double> inverse(const std::complex<double>& x)
    {
        if (x == 0.0) throw DivisionByZero();
        return 1.0 / x;
    }
    static double magnitude(const std::complex<double>& x) { return std::abs(x); }
    static std::complex<double> to_complex(const std::complex<double>& x) { return x; }
    static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
};

} // namespace affhom
