#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <vector>

#include "field.hpp"

namespace affhom {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Reduced row echelon form with the pivot column of each nonzero row.
template <class F>
struct Echelon {
    Matrix<F> rows;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

namespace detail {

template <class F>
bool negligible(const F& x, double)
{
    return field_traits<F>::is_zero(x) == Tri::Yes;
}

inline bool negligible(const std::complex<double>& x, double tol) { return std::abs(x) <= tol; }

template <class F>
std::size_t choose_pivot(const Matrix<F>& m, std::size_t from, std::size_t col, double tol)
{
    if constexpr (std::is_same_v<F, std::complex<double>>) {
        std::size_t best = m.size();
        double mag = tol;
        for (std::size_t r = from; r < m.size(); ++r) {
            if (std::abs(m[r][col]) > mag) {
                mag = std::abs(m[r][col]);
                best = r;
            }
        }
        return best;
    } else {
        for (std::size_t r = from; r < m.size(); ++r) {
            if (!negligible(m[r][col], tol)) return r;
        }
        return m.size();
    }
}

} // namespace detail

/// Gauss-Jordan elimination. `tol` only matters for std::complex<double>,
/// where entries of magnitude <= tol count as zero.
template <class F>
Echelon<F> rref(Matrix<F> m, std::size_t cols, double tol = 0.0)
{
    Echelon<F> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        const std::size_t p = detail::choose_pivot(m, r, c, tol);
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const F inv = field_traits<F>::inverse(m[r][c]);
        for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || detail::negligible(m[i][c], 0.0)) continue;
            const F f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    if constexpr (std::is_same_v<F, std::complex<double>>) {
        for (auto& row : m) {
            for (auto& x : row) {
                if (std::abs(x) <= tol) x = 0.0;
            }
        }
    }
    out.rows = std::move(m);
    return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m, std::size_t cols, double tol = 0.0)
{
    return rref(m, cols, tol).rank();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m, std::size_t cols, double tol = 0.0)
{
    const Echelon<F> e = rref(m, cols, tol);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    Matrix<F> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(cols, F(0));
        v[free] = F(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of a x = b, or nullopt if the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b, std::size_t cols, double tol = 0.0)
{
    Matrix<F> aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(cols);
        aug[i].push_back(b[i]);
    }
    const Echelon<F> e = rref(aug, cols + 1, tol);
    if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
    std::vector<F> x(cols, F(0));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rows[i][cols];
    return x;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& m, std::size_t cols)
{
    Matrix<F> t(cols, std::vector<F>(m.size(), F(0)));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    }
    return t;
}

} // namespace affhom
