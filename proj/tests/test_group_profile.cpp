#include <gtest/gtest.h>

#include "affhom/profile.hpp"
#include "support.hpp"

using namespace affhom;
using namespace testing_support;

TEST(RatioFlags, SpiralAndReal)
{
    const auto f = ratio_flags(group(1, {hom("2i", {"0"}), hom("3", {"1"})}));
    EXPECT_TRUE(f.has_nonreal_ratio);
    EXPECT_TRUE(f.has_modulus_ne1);
    EXPECT_EQ(f.sr, SRClass::None);
    EXPECT_TRUE(f.outside_SR);
}

TEST(RatioFlags, QuarterTurns)
{
    const auto f = ratio_flags(group(1, {hom("i", {"0"}), hom("-1", {"1"})}));
    EXPECT_TRUE(f.has_nonreal_ratio);
    EXPECT_FALSE(f.has_modulus_ne1);
    EXPECT_EQ(f.sr, SRClass::S2);
    EXPECT_FALSE(f.outside_SR);
}

TEST(RatioFlags, MixedClassesLeaveSR)
{
    const auto f = ratio_flags(group(1, {hom("i", {"0"}), hom("exp(i*pi/3)", {"1"})}));
    EXPECT_EQ(f.sr, SRClass::None);
    EXPECT_TRUE(f.outside_SR);
    EXPECT_EQ(in_F2(S("i*exp(i*pi/3)")), Tri::No);
    EXPECT_EQ(in_F3(S("i*exp(i*pi/3)")), Tri::No);
}

TEST(RatioFlags, SixthRootsAreS3)
{
    EXPECT_EQ(ratio_flags(group(1, {hom("exp(i*pi/3)", {"0"}), hom("-1", {"1"})})).sr, SRClass::S3);
}

TEST(ComputeEG, ThreeCentersSpanPlane)
{
    const auto spec = group(2, {hom("2i", {"1", "0"}), hom("2i", {"0", "1"}), hom("3i", {"-1", "-1"})});
    const auto eg = compute_EG(spec);
    EXPECT_EQ(eg.space.dim(), 2u);
    EXPECT_TRUE(eg.space.exact());
}

TEST(ComputeEG, TwoCentersInLine)
{
    const auto eg = compute_EG(group(1, {hom("2i", {"0"}), hom("3", {"1"})}));
    EXPECT_EQ(eg.space.dim(), 1u);
}

TEST(ComputeEG, CollinearCentersInPlane)
{
    // E_G = C x {0} for centers on the first axis
    const auto eg = compute_EG(group(2, {hom("2i", {"0", "0"}), hom("2i", {"1", "0"})}));
    EXPECT_EQ(eg.space.dim(), 1u);
    EXPECT_EQ(eg.space.contains(P({"5+i", "0"})), Tri::Yes);
    EXPECT_EQ(eg.space.contains(P({"0", "1"})), Tri::No);
}

TEST(ComputeEG, SharedCenterWithTranslation)
{
    const auto spec = group(2, {hom("2i", {"1", "1"}), trans({"1", "0"})});
    const auto eg = compute_EG(spec);
    EXPECT_GE(eg.space.dim(), 1u);
    EXPECT_EQ(eg.space.contains(P({"1", "1"})), Tri::Yes);
    EXPECT_EQ(eg.space.contains(P({"2", "1"})), Tri::Yes);
    // oracle: centers of short words lie in the computed subspace
    std::vector<Homothety> words{Homothety::identity(2)};
    for (int len = 0; len < 4; ++len) {
        std::vector<Homothety> next;
        for (const auto& w : words) {
            for (const auto& g : spec.generators) {
                next.push_back(g * w);
                next.push_back(g.inverse() * w);
            }
        }
        words = std::move(next);
    }
    for (const auto& w : words) {
        if (w.is_translation() == Tri::No) {
            ASSERT_EQ(eg.space.contains(w.center()), Tri::Yes);
        } else {
            ASSERT_EQ(eg.space.contains_direction(w.shift()), Tri::Yes);
        }
    }
}

TEST(ComputeEG, AbelianRejected)
{
    EXPECT_THROW(compute_EG(group(1, {hom("2", {"1"}), hom("3i", {"1"})})), AbelianGroup);
}

TEST(Crystallographic, Examples)
{
    EXPECT_EQ(crystallographic_test(S("i")), CrystalClass::CompatibleDiscrete);
    EXPECT_EQ(crystallographic_test(S("exp(i*pi/3)")), CrystalClass::CompatibleDiscrete);
    EXPECT_EQ(crystallographic_test(S("exp(2*i*pi/3)")), CrystalClass::CompatibleDiscrete);
    EXPECT_EQ(crystallographic_test(S("-1")), CrystalClass::CompatibleDiscrete);
    EXPECT_EQ(crystallographic_test(S("exp(i*pi/5)")), CrystalClass::ForcesDense);
    EXPECT_EQ(crystallographic_test(S("exp(i*pi/4)")), CrystalClass::ForcesDense);
    EXPECT_EQ(crystallographic_test(S("exp(i*pi/6)")), CrystalClass::ForcesDense);
    EXPECT_EQ(crystallographic_test(S("exp(i*1.0)")), CrystalClass::ForcesDense);
    EXPECT_EQ(crystallographic_test(S("2i")), CrystalClass::NotRotation);
}

TEST(Crystallographic, ApproximateBoundaryIsUndecidable)
{
    EXPECT_THROW(crystallographic_test(S("exp(i*1.5707963267948966)")), UndecidableAtPrecision);
}

TEST(G1Bounds, QuarterTurnLattice)
{
    const auto spec = group(1, {hom("i", {"0"}), hom("i", {"1"})});
    const auto lambda = classify_multiplicative_closure(spec.ratios());
    const auto b = g1_lattice_bounds(spec, lambda);
    ASSERT_TRUE(b.outer_available);
    ASSERT_TRUE(b.outer_closure && b.inner_closure);
    EXPECT_EQ(b.outer_closure->shape, SubgroupShape::Lattice2);
    // outer = Z(1 - i) + Z(1 + i)
    const auto expected = classify_additive_closure(
        {PlanarVector::from_complex(C("1-i")), PlanarVector::from_complex(C("1+i"))});
    EXPECT_TRUE(*b.outer_closure == expected);
    // inner generators (1 - i)^2 = -2i and i (-2i) = 2 are realised
    EXPECT_EQ(b.inner_closure->contains(C("-2i")), Tri::Yes);
    EXPECT_EQ(b.inner_closure->contains(C("2")), Tri::Yes);
    EXPECT_TRUE(b.pinned);
}

TEST(G1Bounds, SixthTurnOuter)
{
    const auto spec = group(1, {hom("exp(i*pi/3)", {"0"}), hom("exp(i*pi/3)", {"1"})});
    const auto b = g1_lattice_bounds(spec, classify_multiplicative_closure(spec.ratios()));
    ASSERT_TRUE(b.outer_closure);
    const auto expected = classify_additive_closure(
        {PlanarVector::from_complex(C("exp(-i*pi/3)")), PlanarVector::from_complex(C("exp(i*pi/3)"))});
    EXPECT_TRUE(*b.outer_closure == expected);
}

TEST(G1Bounds, SelfMapsOfTranslations)
{
    // l^k v and (l^k - 1)^2 v stay in the outer lattice for sampled v
    const auto spec = group(1, {hom("i", {"0"}), hom("i", {"1"})});
    const auto b = g1_lattice_bounds(spec, classify_multiplicative_closure(spec.ratios()));
    for (const auto& v : b.sampled) {
        for (int k = 1; k < 4; ++k) {
            const CycloScalar l = C("i").pow(k);
            EXPECT_EQ(b.outer_closure->contains(l * v[0].exact()), Tri::Yes);
            const CycloScalar m = (l - CycloScalar(1)) * (l - CycloScalar(1));
            EXPECT_EQ(b.outer_closure->contains(m * v[0].exact()), Tri::Yes);
        }
    }
}

TEST(Profile, BuildsForSpiralPair)
{
    const auto p = build_profile(group(1, {hom("2i", {"0"}), hom("2i", {"1"})}));
    EXPECT_TRUE(p.exact);
    EXPECT_EQ(p.EG().dim(), 1u);
    EXPECT_EQ(p.lambda_closure.shape, MultShape::RaysDiscrete);
    EXPECT_FALSE(p.g1.has_value());
}

TEST(Profile, RotationPairHasBounds)
{
    const auto p = build_profile(group(1, {hom("i", {"0"}), hom("i", {"1"})}));
    ASSERT_TRUE(p.g1.has_value());
    EXPECT_TRUE(p.g1->pinned);
}
