#pragma once

#include <array>
#include <complex>
#include <numeric>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "qsqrt3.hpp"
#include "rational.hpp"

namespace affhom {

/// Exact element of the cyclotomic field Q(zeta), zeta = exp(i pi / 6).
///
/// Stored in the power basis {1, zeta, zeta^2, zeta^3} with the reduction
/// zeta^4 = zeta^2 - 1 (minimal polynomial x^4 - x^2 + 1). The field holds
/// i = zeta^3, sqrt(3) = 2 zeta - zeta^3 and every 12th root of unity.
/// mpq_class keeps each coefficient in lowest terms with a positive denominator.
class CycloScalar {
public:
    using Coeffs = std::array<Rational, 4>;

    CycloScalar() = default;
    CycloScalar(long v) { c_[0] = v; }
    CycloScalar(Rational v)
    {
        c_[0] = std::move(v);
        c_[0].canonicalize();
    }
    CycloScalar(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}
    {
        for (auto& x : c_) x.canonicalize();
    }
    explicit CycloScalar(Coeffs c) : c_(std::move(c))
    {
        for (auto& x : c_) x.canonicalize();
    }

    static CycloScalar zeta_power(long k)
    {
        const long m = ((k % 12) + 12) % 12;
        CycloScalar out;
        const auto& row = power_table()[static_cast<std::size_t>(m)];
        for (std::size_t j = 0; j < 4; ++j) out.c_[j] = row[j];
        return out;
    }
    static CycloScalar i() { return zeta_power(3); }
    static CycloScalar sqrt3() { return {0, 2, 0, -1}; }
    static CycloScalar gaussian(Rational re, Rational im) { return {std::move(re), 0, 0, std::move(im)}; }

    /// Builds re + i*im from real-subfield coordinates.
    static CycloScalar from_parts(const QSqrt3& re, const QSqrt3& im)
    {
        const Rational& p = re.rational_part();
        const Rational& q = re.sqrt3_part();
        const Rational& pp = im.rational_part();
        const Rational& qq = im.sqrt3_part();
        return {p - qq, 2 * q, 2 * qq, pp - q};
    }

    const Coeffs& coeffs() const { return c_; }
    const Rational& operator[](std::size_t k) const { return c_[k]; }

    bool is_zero() const
    {
        return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
    }
    bool is_one() const { return c_[0] == 1 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

    QSqrt3 real_part() const { return {c_[0] + c_[2] / 2, c_[1] / 2}; }
    QSqrt3 imag_part() const { return {c_[1] / 2 + c_[3], c_[2] / 2}; }

    std::complex<double> to_complex() const
    {
        return {real_part().to_double(), imag_part().to_double()};
    }

    CycloScalar operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

    CycloScalar& operator+=(const CycloScalar& o)
    {
        for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
        return *this;
    }
    CycloScalar& operator-=(const CycloScalar& o)
    {
        for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
        return *this;
    }

    friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b)
    {
        std::array<Rational, 7> d;
        for (std::size_t i = 0; i < 4; ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < 4; ++j) {
                if (sgn(b.c_[j]) == 0) continue;
                d[i + j] += a.c_[i] * b.c_[j];
            }
        }
        // zeta^4 = zeta^2 - 1, zeta^5 = zeta^3 - zeta, zeta^6 = -1
        return {d[0] - d[4] - d[6], d[1] - d[5], d[2] + d[4], d[3] + d[5]};
    }
    CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }

    /// Field automorphism zeta -> zeta^k for k coprime to 12.
    CycloScalar galois(int k) const
    {
        CycloScalar out;
        for (std::size_t j = 0; j < 4; ++j) {
            if (sgn(c_[j]) == 0) continue;
            const auto& row = power_table()[static_cast<std::size_t>((k * static_cast<int>(j)) % 12)];
            for (std::size_t m = 0; m < 4; ++m) {
                if (sgn(row[m]) != 0) out.c_[m] += c_[j] * row[m];
            }
        }
        return out;
    }

    CycloScalar conj() const
    {
        // conj(zeta) = zeta - zeta^3, conj(zeta^2) = 1 - zeta^2, conj(zeta^3) = -zeta^3
        return {c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]};
    }

    /// Field norm down to Q: product of the four Galois conjugates.
    Rational norm() const
    {
        const CycloScalar n = *this * galois(5) * galois(7) * galois(11);
        return n.c_[0];
    }

    CycloScalar inverse() const
    {
        if (is_zero()) throw DivisionByZero();
        const CycloScalar others = galois(5) * galois(7) * galois(11);
        const Rational n = (*this * others).c_[0];
        return {others.c_[0] / n, others.c_[1] / n, others.c_[2] / n, others.c_[3] / n};
    }

    CycloScalar& operator/=(const CycloScalar& o) { return *this = *this * o.inverse(); }

    /// |x|^2 as an element of the real subfield.
    QSqrt3 abs_sq() const { return (*this * conj()).real_part(); }

    CycloScalar pow(long e) const
    {
        CycloScalar base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        CycloScalar acc(1);
        while (k) {
            if (k & 1UL) acc *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return acc;
    }

    /// Multiplicative order when x is a root of unity (x = zeta^k for some k).
    std::optional<int> root_of_unity_order() const
    {
        for (int k = 0; k < 12; ++k) {
            if (*this == zeta_power(k)) return 12 / std::gcd(k, 12);
        }
        return std::nullopt;
    }

    /// Exponent k with x = zeta^k, if any.
    std::optional<int> zeta_exponent() const
    {
        for (int k = 0; k < 12; ++k) {
            if (*this == zeta_power(k)) return k;
        }
        return std::nullopt;
    }

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
    friend bool operator==(const CycloScalar& a, const CycloScalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

    /// Lexicographic order on coefficients; used only for canonical output ordering.
    friend bool lex_less(const CycloScalar& a, const CycloScalar& b)
    {
        for (std::size_t k = 0; k < 4; ++k) {
            if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
        }
        return false;
    }

    std::size_t hash() const
    {
        std::size_t h = 0;
        for (const auto& q : c_) h = hash_combine(h, hash_rational(q));
        return h;
    }

    /// Text in the input syntax: Gaussian rationals as "a+bi", otherwise zeta12 powers.
    std::string to_string() const
    {
        if (is_zero()) return "0";
        if (sgn(c_[1]) == 0 && sgn(c_[2]) == 0) {
            std::string s;
            if (sgn(c_[0]) != 0) s = c_[0].get_str();
            if (sgn(c_[3]) != 0) {
                if (!s.empty() && sgn(c_[3]) > 0) s += "+";
                s += (c_[3] == 1 ? std::string() : c_[3] == -1 ? std::string("-") : c_[3].get_str()) + "i";
            }
            return s;
        }
        std::string s;
        static const char* names[4] = {"", "zeta12", "zeta12^2", "zeta12^3"};
        for (std::size_t k = 0; k < 4; ++k) {
            if (sgn(c_[k]) == 0) continue;
            if (!s.empty() && sgn(c_[k]) > 0) s += "+";
            if (k == 0) {
                s += c_[k].get_str();
            } else if (c_[k] == 1) {
                s += names[k];
            } else if (c_[k] == -1) {
                s += std::string("-") + names[k];
            } else {
                s += c_[k].get_str() + "*" + names[k];
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycloScalar& x) { return os << x.to_string(); }

private:
    static const std::array<std::array<Rational, 4>, 12>& power_table()
    {
        static const std::array<std::array<Rational, 4>, 12> table = [] {
            std::array<std::array<Rational, 4>, 12> t{};
            const int rows[12][4] = {
                {1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
                {-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0},
                {0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1},
            };
            for (std::size_t k = 0; k < 12; ++k) {
                for (std::size_t j = 0; j < 4; ++j) t[k][j] = rows[k][j];
            }
            return t;
        }();
        return table;
    }

    Coeffs c_{};
};

struct CycloHash {
    std::size_t operator()(const CycloScalar& x) const { return x.hash(); }
};

} // namespace affhom
