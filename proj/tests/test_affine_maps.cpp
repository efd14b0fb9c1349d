#include <gtest/gtest.h>

#include "affhom/homothety.hpp"
#include "support.hpp"

using namespace affhom;
using namespace testing_support;

TEST(Homothety, ApplyCenterForm)
{
    const Homothety f = hom("2", {"1"});
    EXPECT_EQ(f.apply(P({"0"})), P({"-1"}));
}

TEST(Homothety, TranslationAddsVector)
{
    const Homothety t = trans({"1+2i"});
    EXPECT_EQ(t.apply(P({"3"})), P({"4+2i"}));
    EXPECT_EQ(t.is_translation(), Tri::Yes);
    EXPECT_THROW(t.center(), Error);
}

TEST(Homothety, CenterIsFixed)
{
    const Homothety f = hom("2i", {"1/3+i", "-2"});
    EXPECT_EQ(f.center(), P({"1/3+i", "-2"}));
    EXPECT_EQ(f.apply(f.center()), f.center());
}

TEST(Homothety, ComposeExpandsLinearForms)
{
    // z -> 2z + 1 after z -> 3z + i is z -> 6z + (2i + 1)
    const Homothety f(S("2"), P({"1"}));
    const Homothety g(S("3"), P({"i"}));
    const Homothety fg = compose(f, g);
    EXPECT_EQ(fg.ratio(), S("6"));
    EXPECT_EQ(fg.shift(), P({"1+2i"}));
    const Point z = P({"5/7-2i"});
    EXPECT_EQ(fg.apply(z), f.apply(g.apply(z)));
}

TEST(Homothety, InverseGivesIdentity)
{
    const Homothety f(S("2*zeta12"), P({"1-i"}));
    EXPECT_EQ(f.inverse() * f, Homothety::identity(1));
    EXPECT_EQ(f * f.inverse(), Homothety::identity(1));
}

TEST(Homothety, RatioOfQuotient)
{
    const Homothety f = hom("2i", {"0"});
    const Homothety g = hom("3", {"1"});
    EXPECT_EQ((f * g.inverse()).ratio(), S("2i/3"));
}

TEST(Commutator, SubstitutionValue)
{
    const Homothety f(S("2"), P({"1"}));
    const Homothety g(S("3"), P({"i"}));
    EXPECT_EQ(commutator(f, g), P({"i-2"}));
    const Homothety word = f * g * f.inverse() * g.inverse();
    EXPECT_EQ(word.ratio(), S("1"));
    EXPECT_EQ(word.apply(P({"0"})), P({"i-2"}));
}

TEST(Commutator, TranslationsCommute)
{
    EXPECT_EQ(is_zero_vector(commutator(trans({"1"}), trans({"i"}))), Tri::Yes);
}

TEST(Commutator, SameCenterCommutes)
{
    const Homothety f = hom("2i", {"1+i"});
    const Homothety g = hom("3", {"1+i"});
    EXPECT_EQ(is_zero_vector(commutator(f, g)), Tri::Yes);
    EXPECT_EQ(commutes(f, g), Tri::Yes);
}

TEST(Commutes, DistinctCentersDoNotCommute)
{
    EXPECT_EQ(commutes(hom("2", {"0"}), hom("3", {"1"})), Tri::No);
    EXPECT_EQ(commutes(hom("2", {"1"}), hom("3", {"1"})), Tri::Yes);
}

TEST(Commutes, HomothetyAndTranslation)
{
    const Homothety f = hom("2", {"0"});
    const Homothety t = trans({"1+i"});
    EXPECT_EQ(commutes(f, t), Tri::No);
    // (l - 1) b with l = 2, b = 1 + i
    EXPECT_EQ(commutator(f, t), P({"1+i"}));
}

TEST(Homothety, ConjugationMovesCenter)
{
    const Homothety f = hom("2i", {"1"});
    const Homothety g(S("3+i"), P({"2"}));
    const Homothety h = g * f * g.inverse();
    EXPECT_EQ(h.ratio(), f.ratio());
    EXPECT_EQ(h.center(), g.apply(f.center()));
}

TEST(Homothety, LineInvariance)
{
    const Homothety f(S("2-i"), P({"1", "i"}));
    const Point u = P({"1", "2"});
    const Point v = P({"i", "-1"});
    const Scalar alpha = S("3/2+1/3i");
    const Point lhs = f.apply(scale(alpha, u) + v);
    const Point rhs = scale(f.ratio() * alpha, u) + f.apply(v);
    EXPECT_EQ(lhs, rhs);
}

TEST(Homothety, ApproximateCenterDemotes)
{
    const Homothety f = Homothety::from_center(S("exp(i*1.0)"), P({"sqrt(2)"}));
    EXPECT_FALSE(is_exact(f));
    const NumPoint c = to_numeric(f.center());
    EXPECT_NEAR(c[0].real(), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(c[0].imag(), 0.0, 1e-12);
}

TEST(Homothety, DimensionMismatchThrows)
{
    const Homothety f = hom("2", {"0", "0"});
    EXPECT_THROW(f.apply(P({"1"})), DimensionMismatch);
    EXPECT_THROW(Homothety(S("0"), P({"1"})), InputError);
}
