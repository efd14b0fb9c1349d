#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace affhom {

/// Element p + q*sqrt(3) of the real quadratic field Q(sqrt 3).
///
/// This is the real subfield of Q(zeta12); real and imaginary parts of
/// cyclotomic scalars live here, which lets planar geometry stay exact.
class QSqrt3 {
public:
    QSqrt3() = default;
    QSqrt3(Rational p, Rational q = 0) : p_(std::move(p)), q_(std::move(q)) {}
    QSqrt3(long p) : p_(p), q_(0) {}

    static QSqrt3 sqrt3() { return {0, 1}; }

    const Rational& rational_part() const { return p_; }
    const Rational& sqrt3_part() const { return q_; }

    bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
    bool is_rational() const { return sgn(q_) == 0; }
    bool is_integer() const { return is_rational() && affhom::is_integer(p_); }

    /// Exact sign, decided by comparing p^2 with 3 q^2.
    int sign() const
    {
        const int sp = sgn(p_);
        const int sq = sgn(q_);
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        // p^2 == 3 q^2 has no nonzero rational solution
        return p_ * p_ > 3 * q_ * q_ ? sp : sq;
    }

    double to_double() const { return p_.get_d() + q_.get_d() * std::sqrt(3.0); }

    QSqrt3 operator-() const { return {-p_, -q_}; }
    QSqrt3& operator+=(const QSqrt3& o) { p_ += o.p_; q_ += o.q_; return *this; }
    QSqrt3& operator-=(const QSqrt3& o) { p_ -= o.p_; q_ -= o.q_; return *this; }
    QSqrt3& operator*=(const QSqrt3& o)
    {
        Rational np = p_ * o.p_ + 3 * q_ * o.q_;
        Rational nq = p_ * o.q_ + q_ * o.p_;
        p_ = std::move(np);
        q_ = std::move(nq);
        return *this;
    }

    QSqrt3 conjugate() const { return {p_, -q_}; }
    Rational norm() const { return p_ * p_ - 3 * q_ * q_; }

    QSqrt3 inverse() const
    {
        if (is_zero()) throw DivisionByZero();
        const Rational n = norm();
        return {p_ / n, -q_ / n};
    }

    QSqrt3& operator/=(const QSqrt3& o) { return *this *= o.inverse(); }

    friend QSqrt3 operator+(QSqrt3 a, const QSqrt3& b) { return a += b; }
    friend QSqrt3 operator-(QSqrt3 a, const QSqrt3& b) { return a -= b; }
    friend QSqrt3 operator*(QSqrt3 a, const QSqrt3& b) { return a *= b; }
    friend QSqrt3 operator/(QSqrt3 a, const QSqrt3& b) { return a /= b; }
    friend bool operator==(const QSqrt3& a, const QSqrt3& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
    friend bool operator<(const QSqrt3& a, const QSqrt3& b) { return (a - b).sign() < 0; }

    std::string to_string() const
    {
        if (is_rational()) return p_.get_str();
        std::string s;
        if (sgn(p_) != 0) s = p_.get_str() + (sgn(q_) > 0 ? "+" : "");
        return s + q_.get_str() + "*sqrt3";
    }

    friend std::ostream& operator<<(std::ostream& os, const QSqrt3& x) { return os << x.to_string(); }

private:
    Rational p_{0};
    Rational q_{0};
};

} // namespace affhom
