// Randomized invariant suites, 10^4 trials each, exact arithmetic.

#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "affhom/additive_closure.hpp"
#include "affhom/profile.hpp"
#include "support.hpp"

using namespace affhom;
using namespace testing_support;

namespace {

constexpr int kTrials = 10000;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Rational rational(int span = 9, int den = 6) { return make_rational(integer(-span, span), integer(1, den)); }

    CycloScalar cyclo() { return CycloScalar(rational(), rational(), rational(), rational()); }

    CycloScalar gaussian() { return CycloScalar(rational(), 0, 0, rational()); }

    Point point(std::size_t n, bool gaussian_only = true)
    {
        Point p;
        for (std::size_t k = 0; k < n; ++k) p.push_back(Scalar(gaussian_only ? gaussian() : cyclo()));
        return p;
    }

    // ratios drawn from a small menu so that groups stay non-trivial
    Scalar ratio()
    {
        static const char* menu[] = {"i", "-1", "zeta12", "zeta12^2", "2i", "1+i", "1/2+3/2i", "-2", "3", "2*zeta12"};
        return parse_scalar(menu[integer(0, 9)]);
    }

    Homothety homothety(std::size_t n)
    {
        if (coin(0.15)) return Homothety::translation(point(n));
        return Homothety::from_center(ratio(), point(n));
    }

    QSqrt3 qsqrt3(bool rational_only) { return rational_only ? QSqrt3(rational()) : QSqrt3(rational(), rational(3, 2)); }

private:
    std::mt19937_64 rng_;
};

std::complex<double> num(const CycloScalar& x) { return x.to_complex(); }

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a) + std::abs(b)); }

} // namespace

TEST(FieldLaws, CyclotomicField)
{
    Gen g(11);
    for (int t = 0; t < kTrials; ++t) {
        const CycloScalar a = g.cyclo(), b = g.cyclo(), c = g.cyclo();
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + CycloScalar(0), a);
        ASSERT_EQ(a * CycloScalar(1), a);
        ASSERT_EQ(a - a, CycloScalar(0));
        ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
        ASSERT_EQ(a * a.conj(), CycloScalar(a.abs_sq().rational_part(), 0, 0, 0) +
                                    CycloScalar(a.abs_sq().sqrt3_part()) * CycloScalar::sqrt3());
        if (!a.is_zero()) {
            ASSERT_EQ(a * a.inverse(), CycloScalar(1));
        }
        // numeric oracle: the embedding zeta12 -> e^{i pi/6} is a ring map
        ASSERT_TRUE(close(num(a * b + c), num(a) * num(b) + num(c)));
    }
}

TEST(FieldLaws, RealQuadraticField)
{
    Gen g(12);
    for (int t = 0; t < kTrials; ++t) {
        const QSqrt3 a = g.qsqrt3(false), b = g.qsqrt3(false), c = g.qsqrt3(false);
        ASSERT_EQ((a + b) * c, a * c + b * c);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            ASSERT_EQ(a * a.inverse(), QSqrt3(1));
        }
        // sign is exact and agrees with the real value away from 0
        const double v = a.to_double() - b.to_double();
        if (std::abs(v) > 1e-9) {
            ASSERT_EQ((a - b).sign(), v > 0 ? 1 : -1);
        }
    }
}

TEST(GroupLaws, Homotheties)
{
    Gen g(21);
    for (int t = 0; t < kTrials; ++t) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        const Homothety f = g.homothety(n), h = g.homothety(n), k = g.homothety(n);
        const Homothety id = Homothety::identity(n);
        ASSERT_EQ((f * h) * k, f * (h * k));
        ASSERT_EQ(f * id, f);
        ASSERT_EQ(id * f, f);
        ASSERT_EQ(f * f.inverse(), id);
        ASSERT_EQ(f.inverse() * f, id);
        ASSERT_EQ((f * h).ratio(), f.ratio() * h.ratio());
        // composition is application order: (f * h)(z) = f(h(z))
        const Point z = g.point(n);
        ASSERT_EQ((f * h).apply(z), f.apply(h.apply(z)));
    }
}

TEST(CommutatorFormula, MatchesWord)
{
    Gen g(31);
    for (int t = 0; t < kTrials; ++t) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        const Homothety f = g.homothety(n), h = g.homothety(n);
        const Homothety word = f * h * f.inverse() * h.inverse();
        ASSERT_EQ(word.ratio(), Scalar(1));
        // f = l z + a, h = m z + b: the word translates by (l - 1) b + (1 - m) a
        const Scalar& l = f.ratio();
        const Scalar& m = h.ratio();
        Point expected;
        for (std::size_t k = 0; k < n; ++k) expected.push_back((l - Scalar(1)) * h.shift()[k] + (Scalar(1) - m) * f.shift()[k]);
        ASSERT_EQ(word.shift(), expected);
        ASSERT_EQ(commutator(f, h), expected);
        const Tri c = commutes(f, h);
        ASSERT_NE(c, Tri::Unknown);
        ASSERT_EQ(c == Tri::Yes, is_zero_vector(expected) == Tri::Yes);
    }
}

TEST(InvariantSubspace, GroupInvariance)
{
    Gen g(41);
    int checked = 0;
    for (int t = 0; t < kTrials; ++t) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        std::vector<Homothety> gens;
        const int m = g.integer(2, 3);
        for (int k = 0; k < m; ++k) gens.push_back(g.homothety(n));
        const GroupSpec spec(n, gens);
        if (is_nonabelian(spec) != Tri::Yes) {
            ASSERT_THROW(compute_EG(spec), AbelianGroup);
            continue;
        }
        ++checked;
        const AffineSubspace e = compute_EG(spec).space;
        ASSERT_TRUE(e.exact());
        std::vector<Scalar> coeffs;
        for (std::size_t k = 0; k < e.dim(); ++k) coeffs.push_back(Scalar(g.gaussian()));
        const Point p = e.point_at(coeffs);
        ASSERT_EQ(e.contains(p), Tri::Yes);
        for (const auto& f : gens) {
            ASSERT_EQ(e.contains(f.apply(p)), Tri::Yes);
            ASSERT_EQ(e.contains(f.inverse().apply(p)), Tri::Yes);
            // Gamma_G: fixed points of non-translations lie in E_G
            if (f.is_translation() == Tri::No) {
                ASSERT_EQ(e.contains(f.center()), Tri::Yes);
            }
        }
        // Gamma_G is G-invariant: conjugating a non-translation moves its
        // center by the conjugating map
        const Homothety& a = gens[0];
        const Homothety w = gens[1] * gens[static_cast<std::size_t>(m - 1)] * a.inverse();
        if (w.is_translation() == Tri::No) {
            for (const auto& f : gens) {
                const Homothety c = f * w * f.inverse();
                ASSERT_EQ(c.center(), f.apply(w.center()));
                ASSERT_EQ(e.contains(c.center()), Tri::Yes);
            }
        }
    }
    EXPECT_GT(checked, kTrials / 2);
}

TEST(SelfMaps, TranslationSubgroup)
{
    Gen g(51);
    for (int t = 0; t < kTrials; ++t) {
        const Homothety f = Homothety::from_center(g.ratio(), g.point(1));
        Homothety h = g.homothety(1);
        if (commutes(f, h) == Tri::Yes) h = Homothety::from_center(f.ratio(), {f.center()[0] + Scalar(1)});
        // a nonzero element of G1(0)
        const Homothety tv = f * h * f.inverse() * h.inverse();
        const Scalar v = tv.shift()[0];
        ASSERT_NE(v.is_zero(), Tri::Yes);
        const Scalar& l = f.ratio();
        const int k = g.integer(1, 4);
        Homothety fk = Homothety::identity(1);
        for (int j = 0; j < k; ++j) fk = fk * f;
        const Scalar lk = l.pow(k);
        // l^k G1(0) in G1(0): conjugate the translation by f^k
        const Homothety scaled = fk * tv * fk.inverse();
        ASSERT_EQ(scaled.ratio(), Scalar(1));
        ASSERT_EQ(scaled.shift()[0], lk * v);
        // (l^k - 1)^2 G1(0) in G1(0): l^{2k} v - 2 l^k v + v as a word
        const Homothety sq = (fk * scaled * fk.inverse()) * scaled.inverse() * scaled.inverse() * tv;
        ASSERT_EQ(sq.ratio(), Scalar(1));
        ASSERT_EQ(sq.shift()[0], (lk - Scalar(1)) * (lk - Scalar(1)) * v);
        // (1/(1 - l^k)) G1(0) in Gamma_G - a: T_v f^k fixes a + v / (1 - l^k)
        if (equals(lk, Scalar(1)) == Tri::No) {
            const Homothety m = tv * fk;
            ASSERT_EQ(m.center()[0], f.center()[0] + v / (Scalar(1) - lk));
        }
    }
}

TEST(ClosureDuality, Involution)
{
    Gen g(61);
    int lattices = 0;
    for (int t = 0; t < kTrials; ++t) {
        const bool rational = g.coin(0.6);
        std::vector<PlanarVector> gens;
        const int m = g.integer(1, 3);
        for (int k = 0; k < m; ++k) gens.push_back({g.qsqrt3(rational), g.qsqrt3(rational)});
        const ClosedSubgroupDesc d = classify_additive_closure(gens);
        for (const auto& v : gens) ASSERT_EQ(d.contains(v), Tri::Yes);
        // a discrete closure is reproduced by its own basis; the basis of a
        // line shape holds a real direction and is not a generating set
        if (d.is_discrete()) {
            ASSERT_EQ(classify_additive_closure(d.basis), d);
        }
        for (const auto& v : d.basis) ASSERT_EQ(d.contains(v), Tri::Yes);
        const auto dual = dual_generators(d);
        if (d.shape == SubgroupShape::Lattice2) {
            ++lattices;
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) ASSERT_EQ(dot(dual[i], d.basis[j]), QSqrt3(i == j ? 1 : 0));
            }
            // the dual of the dual is the original lattice
            const ClosedSubgroupDesc dd = classify_additive_closure(dual_generators(classify_additive_closure(dual)));
            ASSERT_EQ(dd.shape, SubgroupShape::Lattice2);
            for (const auto& v : d.basis) ASSERT_EQ(dd.contains(v), Tri::Yes);
            for (const auto& v : dd.basis) ASSERT_EQ(d.contains(v), Tri::Yes);
        } else if (d.shape == SubgroupShape::LineLattice) {
            ASSERT_EQ(dual.size(), 1u);
            for (const auto& v : gens) ASSERT_TRUE(dot(dual[0], v).is_integer());
            ASSERT_TRUE(dot(dual[0], d.basis[0]).is_zero());
        }
    }
    EXPECT_GT(lattices, kTrials / 4);
}
