#pragma once

#include <complex>
#include <string>

#include "cyclo.hpp"
#include "qsqrt3.hpp"
#include "zmodule.hpp"

namespace affhom {

/// Exact vector of R^2 = C with coordinates in Q(sqrt 3).
struct PlanarVector {
    QSqrt3 x;
    QSqrt3 y;

    static PlanarVector from_complex(const CycloScalar& z) { return {z.real_part(), z.imag_part()}; }
    CycloScalar to_cyclo() const { return CycloScalar::from_parts(x, y); }
    std::complex<double> to_complex() const { return {x.to_double(), y.to_double()}; }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    /// Coordinates over the Q-basis {1, sqrt3} of each axis.
    RatVec coords() const { return {x.rational_part(), x.sqrt3_part(), y.rational_part(), y.sqrt3_part()}; }

    static PlanarVector from_coords(const RatVec& c) { return {QSqrt3(c[0], c[1]), QSqrt3(c[2], c[3])}; }

    friend PlanarVector operator+(const PlanarVector& a, const PlanarVector& b) { return {a.x + b.x, a.y + b.y}; }
    friend PlanarVector operator-(const PlanarVector& a, const PlanarVector& b) { return {a.x - b.x, a.y - b.y}; }
    friend PlanarVector operator*(const QSqrt3& s, const PlanarVector& a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const PlanarVector& a, const PlanarVector& b) { return a.x == b.x && a.y == b.y; }

    std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

inline QSqrt3 dot(const PlanarVector& a, const PlanarVector& b) { return a.x * b.x + a.y * b.y; }
inline QSqrt3 cross(const PlanarVector& a, const PlanarVector& b) { return a.x * b.y - a.y * b.x; }
inline PlanarVector perp(const PlanarVector& a) { return {-a.y, a.x}; }

} // namespace affhom
