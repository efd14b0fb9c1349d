#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "scalar.hpp"

namespace affhom {

template <class T>
using basic_point = std::vector<T>;

/// Affine homothety z -> ratio * z + shift of C^n.
///
/// The linear form is canonical. A map with ratio 1 is a translation
/// (the identity included); otherwise it has the unique center
/// shift / (1 - ratio).
template <class T>
class basic_homothety {
public:
    using value_type = T;
    using point = basic_point<T>;

    basic_homothety() = default;
    basic_homothety(T ratio, point shift) : ratio_(std::move(ratio)), shift_(std::move(shift))
    {
        if (field_traits<T>::is_zero(ratio_) == Tri::Yes) throw InputError("homothety ratio must be nonzero");
    }

    static basic_homothety from_center(T ratio, const point& center)
    {
        const T k = T(1) - ratio;
        point b;
        b.reserve(center.size());
        for (const auto& a : center) b.push_back(k * a);
        return {std::move(ratio), std::move(b)};
    }
    static basic_homothety translation(point v) { return {T(1), std::move(v)}; }
    static basic_homothety identity(std::size_t n) { return {T(1), point(n, T(0))}; }

    std::size_t dim() const { return shift_.size(); }
    const T& ratio() const { return ratio_; }
    const point& shift() const { return shift_; }

    Tri is_translation() const { return field_traits<T>::is_zero(ratio_ - T(1)); }

    point apply(const point& z) const
    {
        if (z.size() != dim()) throw DimensionMismatch();
        point out;
        out.reserve(z.size());
        for (std::size_t k = 0; k < z.size(); ++k) out.push_back(ratio_ * z[k] + shift_[k]);
        return out;
    }

    /// Fixed point; throws when the map is (or may be) a translation.
    point center() const
    {
        const T k = T(1) - ratio_;
        if (field_traits<T>::is_zero(k) != Tri::No) throw Error("translation has no center");
        const T inv = field_traits<T>::inverse(k);
        point a;
        a.reserve(dim());
        for (const auto& b : shift_) a.push_back(b * inv);
        return a;
    }

    basic_homothety inverse() const
    {
        const T inv = field_traits<T>::inverse(ratio_);
        point b;
        b.reserve(dim());
        for (const auto& s : shift_) b.push_back(-(inv * s));
        return {inv, std::move(b)};
    }

    /// f * g is the composition f after g.
    friend basic_homothety operator*(const basic_homothety& f, const basic_homothety& g)
    {
        if (f.dim() != g.dim()) throw DimensionMismatch();
        point b;
        b.reserve(f.dim());
        for (std::size_t k = 0; k < f.dim(); ++k) b.push_back(f.ratio_ * g.shift_[k] + f.shift_[k]);
        return {f.ratio_ * g.ratio_, std::move(b)};
    }

    friend bool operator==(const basic_homothety& f, const basic_homothety& g)
    {
        return f.ratio_ == g.ratio_ && f.shift_ == g.shift_;
    }

private:
    T ratio_{1};
    point shift_;
};

template <class T>
basic_homothety<T> compose(const basic_homothety<T>& f, const basic_homothety<T>& g)
{
    return f * g;
}

/// Translation vector of f o g o f^-1 o g^-1, namely (l - 1) b_g + (1 - m) b_f.
template <class T>
basic_point<T> commutator(const basic_homothety<T>& f, const basic_homothety<T>& g)
{
    if (f.dim() != g.dim()) throw DimensionMismatch();
    const T a = f.ratio() - T(1);
    const T c = T(1) - g.ratio();
    basic_point<T> v;
    v.reserve(f.dim());
    for (std::size_t k = 0; k < f.dim(); ++k) v.push_back(a * g.shift()[k] + c * f.shift()[k]);
    return v;
}

template <class T>
Tri is_zero_vector(const basic_point<T>& v)
{
    Tri acc = Tri::Yes;
    for (const auto& x : v) acc = tri_and(acc, field_traits<T>::is_zero(x));
    return acc;
}

template <class T>
Tri commutes(const basic_homothety<T>& f, const basic_homothety<T>& g)
{
    return is_zero_vector(commutator(f, g));
}

using Point = basic_point<Scalar>;
using Homothety = basic_homothety<Scalar>;
using ExactPoint = basic_point<CycloScalar>;
using ExactHomothety = basic_homothety<CycloScalar>;
using NumPoint = basic_point<std::complex<double>>;
using NumHomothety = basic_homothety<std::complex<double>>;

inline bool is_exact(const Point& p)
{
    for (const auto& x : p) {
        if (!x.is_exact()) return false;
    }
    return true;
}

inline bool is_exact(const Homothety& f) { return f.ratio().is_exact() && is_exact(f.shift()); }

inline ExactPoint to_exact(const Point& p)
{
    ExactPoint out;
    out.reserve(p.size());
    for (const auto& x : p) out.push_back(x.exact());
    return out;
}

inline Point to_scalar(const ExactPoint& p) { return Point(p.begin(), p.end()); }

inline NumPoint to_numeric(const Point& p)
{
    NumPoint out;
    out.reserve(p.size());
    for (const auto& x : p) out.push_back(x.to_complex());
    return out;
}

inline NumPoint to_numeric(const ExactPoint& p)
{
    NumPoint out;
    out.reserve(p.size());
    for (const auto& x : p) out.push_back(x.to_complex());
    return out;
}

inline ExactHomothety to_exact(const Homothety& f) { return {f.ratio().exact(), to_exact(f.shift())}; }
inline NumHomothety to_numeric(const Homothety& f) { return {f.ratio().to_complex(), to_numeric(f.shift())}; }
inline NumHomothety to_numeric(const ExactHomothety& f) { return {f.ratio().to_complex(), to_numeric(f.shift())}; }
inline Homothety to_scalar(const ExactHomothety& f) { return {Scalar(f.ratio()), to_scalar(f.shift())}; }

template <class T>
basic_point<T> operator+(const basic_point<T>& a, const basic_point<T>& b)
{
    if (a.size() != b.size()) throw DimensionMismatch();
    basic_point<T> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

template <class T>
basic_point<T> operator-(const basic_point<T>& a, const basic_point<T>& b)
{
    if (a.size() != b.size()) throw DimensionMismatch();
    basic_point<T> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

template <class T>
basic_point<T> scale(const T& s, const basic_point<T>& a)
{
    basic_point<T> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = s * a[k];
    return out;
}

inline double distance(const NumPoint& a, const NumPoint& b)
{
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::norm(a[k] - b[k]);
    return std::sqrt(s);
}

inline double norm(const NumPoint& a)
{
    double s = 0.0;
    for (const auto& x : a) s += std::norm(x);
    return std::sqrt(s);
}

} // namespace affhom
