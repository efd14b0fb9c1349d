#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "homothety.hpp"
#include "linalg.hpp"
#include "tri.hpp"

namespace affhom {

/// Complex affine subspace p + span_C(basis) of C^n.
///
/// Exact subspaces keep the direction basis in reduced row echelon form,
/// so equal subspaces compare equal. Approximate ones keep an orthonormal
/// basis and decide membership within `tol`.
class AffineSubspace {
public:
    AffineSubspace() = default;

    /// Affine hull of points and directions; the first point is the base.
    static AffineSubspace hull(std::size_t n, const std::vector<Point>& points, const std::vector<Point>& directions = {},
                               double tol = 1e-9)
    {
        if (points.empty()) throw Error("affine hull of no points");
        AffineSubspace a;
        a.n_ = n;
        a.base_ = points[0];
        std::vector<Point> dirs = directions;
        for (std::size_t k = 1; k < points.size(); ++k) dirs.push_back(points[k] - points[0]);
        bool exact = is_exact(a.base_);
        for (const auto& d : dirs) exact = exact && is_exact(d);
        a.exact_ = exact;
        a.tol_ = tol;
        for (const auto& d : dirs) {
            if (d.size() != n) throw DimensionMismatch();
        }
        if (a.base_.size() != n) throw DimensionMismatch();
        a.set_directions(dirs);
        return a;
    }

    static AffineSubspace whole(std::size_t n)
    {
        std::vector<Point> dirs;
        for (std::size_t k = 0; k < n; ++k) {
            Point e(n, Scalar(0));
            e[k] = Scalar(1);
            dirs.push_back(e);
        }
        return hull(n, {Point(n, Scalar(0))}, dirs);
    }

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    bool exact() const { return exact_; }
    double tolerance() const { return tol_; }
    const Point& base() const { return base_; }
    const std::vector<Point>& basis() const { return basis_; }

    /// Same set with another base point inside it.
    AffineSubspace rebased(const Point& p) const
    {
        AffineSubspace a = *this;
        a.base_ = p;
        a.exact_ = exact_ && is_exact(p);
        if (!a.exact_ && exact_) a.set_directions(basis_);
        return a;
    }

    AffineSubspace with_points(const std::vector<Point>& pts) const
    {
        std::vector<Point> all{base_};
        all.insert(all.end(), pts.begin(), pts.end());
        return hull(n_, all, basis_, tol_);
    }

    AffineSubspace with_directions(const std::vector<Point>& dirs) const
    {
        std::vector<Point> all = basis_;
        all.insert(all.end(), dirs.begin(), dirs.end());
        return hull(n_, {base_}, all, tol_);
    }

    /// Component of v orthogonal to the direction space (numeric).
    NumPoint residual(const NumPoint& v) const
    {
        NumPoint r = v;
        for (const auto& q : ortho_) {
            std::complex<double> c = 0.0;
            for (std::size_t k = 0; k < n_; ++k) c += std::conj(q[k]) * r[k];
            for (std::size_t k = 0; k < n_; ++k) r[k] -= c * q[k];
        }
        return r;
    }

    double distance(const NumPoint& z) const { return norm(residual(z - to_numeric(base_))); }

    Tri contains(const Point& z) const
    {
        if (z.size() != n_) throw DimensionMismatch();
        if (exact_ && is_exact(z)) {
            ExactPoint v = to_exact(z) - to_exact(base_);
            return from_bool(reduce(v));
        }
        return distance(to_numeric(z)) <= tol_ * magnitude_of(to_numeric(z)) ? Tri::Yes : Tri::No;
    }

    /// Direction membership: v lies in the direction space.
    Tri contains_direction(const Point& v) const
    {
        if (exact_ && is_exact(v)) {
            ExactPoint w = to_exact(v);
            return from_bool(reduce(w));
        }
        const NumPoint w = to_numeric(v);
        return norm(residual(w)) <= tol_ * magnitude_of(w) ? Tri::Yes : Tri::No;
    }

    /// Point base + sum c_k basis_k.
    Point point_at(const std::vector<Scalar>& coeffs) const
    {
        Point p = base_;
        for (std::size_t k = 0; k < basis_.size() && k < coeffs.size(); ++k) p = p + scale(coeffs[k], basis_[k]);
        return p;
    }

    /// Orthonormal coordinates of z - base (numeric chart).
    std::vector<std::complex<double>> chart(const NumPoint& z) const
    {
        const NumPoint v = z - to_numeric(base_);
        std::vector<std::complex<double>> c;
        for (const auto& q : ortho_) {
            std::complex<double> s = 0.0;
            for (std::size_t k = 0; k < n_; ++k) s += std::conj(q[k]) * v[k];
            c.push_back(s);
        }
        return c;
    }

    const std::vector<NumPoint>& orthonormal_basis() const { return ortho_; }

    friend bool operator==(const AffineSubspace& a, const AffineSubspace& b)
    {
        if (a.n_ != b.n_ || a.dim() != b.dim()) return false;
        for (const auto& v : b.basis_) {
            if (a.contains_direction(v) != Tri::Yes) return false;
        }
        return a.contains(b.base_) == Tri::Yes;
    }

private:
    static double magnitude_of(const NumPoint& z) { return std::max(1.0, norm(z)); }

    // Reduces v against the echelon basis; true when it reduces to zero.
    bool reduce(ExactPoint& v) const
    {
        for (std::size_t r = 0; r < exact_basis_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p].is_zero()) continue;
            const CycloScalar f = v[p];
            for (std::size_t k = 0; k < n_; ++k) v[k] -= f * exact_basis_[r][k];
        }
        for (const auto& x : v) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    void set_directions(const std::vector<Point>& dirs)
    {
        basis_.clear();
        exact_basis_.clear();
        pivots_.clear();
        ortho_.clear();
        if (exact_) {
            Matrix<CycloScalar> m;
            for (const auto& d : dirs) m.push_back(to_exact(d));
            Echelon<CycloScalar> e = rref(m, n_);
            exact_basis_ = e.rows;
            pivots_ = e.pivots;
            for (const auto& r : exact_basis_) basis_.push_back(to_scalar(r));
        } else {
            double s = 1.0;
            for (const auto& d : dirs) s = std::max(s, norm(to_numeric(d)));
            for (const auto& d : dirs) {
                NumPoint v = to_numeric(d);
                // two Gram-Schmidt passes for stability
                for (int pass = 0; pass < 2; ++pass) {
                    for (const auto& q : ortho_) {
                        std::complex<double> c = 0.0;
                        for (std::size_t k = 0; k < n_; ++k) c += std::conj(q[k]) * v[k];
                        for (std::size_t k = 0; k < n_; ++k) v[k] -= c * q[k];
                    }
                }
                const double nv = norm(v);
                if (nv <= tol_ * s) continue;
                for (auto& x : v) x /= nv;
                ortho_.push_back(v);
                Point sv;
                for (const auto& x : v) sv.push_back(Scalar::approx(x, tol_));
                basis_.push_back(sv);
            }
        }
        if (exact_) {
            // orthonormal chart also for exact subspaces
            for (const auto& b : basis_) {
                NumPoint v = to_numeric(b);
                for (int pass = 0; pass < 2; ++pass) {
                    for (const auto& q : ortho_) {
                        std::complex<double> c = 0.0;
                        for (std::size_t k = 0; k < n_; ++k) c += std::conj(q[k]) * v[k];
                        for (std::size_t k = 0; k < n_; ++k) v[k] -= c * q[k];
                    }
                }
                const double nv = norm(v);
                for (auto& x : v) x /= nv;
                ortho_.push_back(v);
            }
        }
    }

    std::size_t n_ = 0;
    Point base_;
    std::vector<Point> basis_;
    std::vector<ExactPoint> exact_basis_;
    std::vector<std::size_t> pivots_;
    std::vector<NumPoint> ortho_;
    bool exact_ = true;
    double tol_ = 1e-9;
};

} // namespace affhom
