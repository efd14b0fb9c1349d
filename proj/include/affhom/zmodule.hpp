#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace affhom {

using RatVec = std::vector<Rational>;

/// Finitely generated Z-submodule of Q^N kept in Hermite normal form.
///
/// Rows are in echelon form with positive pivots, and each entry above a
/// pivot is reduced into [0, pivot). The form is canonical: equal modules
/// have equal bases.
class ZModule {
public:
    explicit ZModule(std::size_t ambient = 0) : n_(ambient) {}

    ZModule(std::size_t ambient, const std::vector<RatVec>& gens) : n_(ambient)
    {
        rows_ = gens;
        for (const auto& g : rows_) {
            if (g.size() != n_) throw DimensionMismatch();
        }
        normalize();
    }

    std::size_t ambient_dim() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<RatVec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    void add(const RatVec& v)
    {
        if (v.size() != n_) throw DimensionMismatch();
        rows_.push_back(v);
        normalize();
    }

    void add_all(const std::vector<RatVec>& vs)
    {
        for (const auto& v : vs) {
            if (v.size() != n_) throw DimensionMismatch();
            rows_.push_back(v);
        }
        normalize();
    }

    bool contains(RatVec v) const
    {
        if (v.size() != n_) throw DimensionMismatch();
        std::size_t next = 0;
        for (std::size_t c = 0; c < n_; ++c) {
            if (sgn(v[c]) == 0) continue;
            while (next < pivots_.size() && pivots_[next] < c) ++next;
            if (next == pivots_.size() || pivots_[next] != c) return false;
            const Rational q = v[c] / rows_[next][c];
            if (!is_integer(q)) return false;
            for (std::size_t k = c; k < n_; ++k) v[k] -= q * rows_[next][k];
        }
        return true;
    }

    bool contains(const ZModule& other) const
    {
        for (const auto& r : other.rows_) {
            if (!contains(r)) return false;
        }
        return true;
    }

    friend bool operator==(const ZModule& a, const ZModule& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }
    friend bool operator!=(const ZModule& a, const ZModule& b) { return !(a == b); }

private:
    static void axpy(RatVec& y, const Rational& q, const RatVec& x, std::size_t from)
    {
        for (std::size_t k = from; k < y.size(); ++k) y[k] -= q * x[k];
    }

    static bool is_zero_row(const RatVec& v)
    {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
    }

    void normalize()
    {
        std::vector<RatVec> work;
        for (auto& r : rows_) {
            if (!is_zero_row(r)) work.push_back(std::move(r));
        }
        std::vector<RatVec> out;
        std::vector<std::size_t> piv;
        for (std::size_t c = 0; c < n_ && !work.empty(); ++c) {
            // Euclid on column c with integer quotients; entries lie in a
            // common (1/D)Z so absolute values strictly decrease.
            for (;;) {
                std::size_t best = work.size();
                for (std::size_t i = 0; i < work.size(); ++i) {
                    if (sgn(work[i][c]) == 0) continue;
                    if (best == work.size() || abs(work[i][c]) < abs(work[best][c])) best = i;
                }
                if (best == work.size()) break;
                bool others = false;
                for (std::size_t i = 0; i < work.size(); ++i) {
                    if (i == best || sgn(work[i][c]) == 0) continue;
                    const Integer q = floor_div(work[i][c] / work[best][c]);
                    axpy(work[i], Rational(q), work[best], c);
                    if (sgn(work[i][c]) != 0) others = true;
                }
                if (others) continue;
                RatVec p = std::move(work[best]);
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
                if (sgn(p[c]) < 0) {
                    for (auto& x : p) x = -x;
                }
                for (auto& r : out) {
                    const Integer q = floor_div(r[c] / p[c]);
                    if (q != 0) axpy(r, Rational(q), p, c);
                }
                out.push_back(std::move(p));
                piv.push_back(c);
                std::vector<RatVec> keep;
                for (auto& r : work) {
                    if (!is_zero_row(r)) keep.push_back(std::move(r));
                }
                work = std::move(keep);
                break;
            }
        }
        rows_ = std::move(out);
        pivots_ = std::move(piv);
    }

    std::size_t n_ = 0;
    std::vector<RatVec> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace affhom
