#include <gtest/gtest.h>

#include <random>

#include "affhom/scalar.hpp"

using namespace affhom;

namespace {

CycloScalar z(long k) { return CycloScalar::zeta_power(k); }

CycloScalar random_cyclo(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
            make_rational(num(rng), den(rng))};
}

} // namespace

TEST(Cyclo, ISquaredIsMinusOne) { EXPECT_EQ(z(3) * z(3), CycloScalar(-1)); }

TEST(Cyclo, AbsSqOfOnePlusI) { EXPECT_EQ((CycloScalar(1) + z(3)).abs_sq(), QSqrt3(2)); }

TEST(Cyclo, InverseOfOneMinusZetaSquared)
{
    // 1 - e^{i pi/3} = e^{-i pi/3}
    EXPECT_EQ((CycloScalar(1) - z(2)).inverse(), z(2));
}

TEST(Cyclo, Sqrt3Squares) { EXPECT_EQ(CycloScalar::sqrt3() * CycloScalar::sqrt3(), CycloScalar(3)); }

TEST(Cyclo, PowersMatchTable)
{
    CycloScalar acc(1);
    for (int k = 0; k < 24; ++k) {
        EXPECT_EQ(acc, z(k)) << k;
        acc *= z(1);
    }
}

TEST(Cyclo, ConjugateMatchesComplex)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const CycloScalar x = random_cyclo(rng);
        EXPECT_LT(std::abs(x.conj().to_complex() - std::conj(x.to_complex())), 1e-9 * (1 + std::abs(x.to_complex())));
    }
}

TEST(Cyclo, RootOfUnityOrders)
{
    EXPECT_EQ(z(3).root_of_unity_order(), 4);
    EXPECT_EQ(z(2).root_of_unity_order(), 6);
    EXPECT_EQ(z(5).root_of_unity_order(), 12);
    EXPECT_FALSE(CycloScalar(2).root_of_unity_order().has_value());
}

TEST(Predicates, FourthAndSixthRoots)
{
    EXPECT_EQ(in_F2(Scalar(z(3))), Tri::Yes);
    EXPECT_EQ(in_F3(Scalar(z(2))), Tri::Yes);
    EXPECT_EQ(in_F2(Scalar(z(2))), Tri::No);
    EXPECT_EQ(is_root_of_unity(Scalar(2)).is_root, Tri::No);
    EXPECT_EQ(in_F2(Scalar(CycloScalar(2) * z(3))), Tri::No);
}

TEST(Predicates, ApproxAnswersAreThreeValued)
{
    const Scalar near_i = Scalar::approx({1e-13, 1.0}, 1e-12);
    EXPECT_EQ(in_F2(near_i), Tri::Unknown);
    const Scalar far = Scalar::approx({0.5403023058681398, 0.8414709848078965}, 1e-15);
    EXPECT_EQ(in_F2(far), Tri::No);
    EXPECT_EQ(is_real(Scalar::approx({1.0, 1e-20}, 1e-15)), Tri::Unknown);
    EXPECT_EQ(is_real(Scalar(z(1))), Tri::No);
}

TEST(Scalar, InverseErrors)
{
    EXPECT_THROW(Scalar(0).inverse(), DivisionByZero);
    EXPECT_THROW(Scalar::approx({1e-14, 0.0}, 1e-12).inverse(), UncertainZero);
}

TEST(Scalar, MixedArithmeticDemotes)
{
    const Scalar s = Scalar(z(1)) + Scalar::approx({1.0, 0.0});
    EXPECT_FALSE(s.is_exact());
    EXPECT_LT(std::abs(s.to_complex() - (z(1).to_complex() + 1.0)), 1e-15);
}

TEST(Scalar, AbsSqIsRealExactly)
{
    const Scalar a = Scalar(CycloScalar(make_rational(3, 2), 1, -2, make_rational(1, 3)));
    const Scalar m = a.abs_sq();
    ASSERT_TRUE(m.is_exact());
    EXPECT_TRUE(m.exact().imag_part().is_zero());
}

TEST(QSqrt3, SignIsExact)
{
    EXPECT_EQ(QSqrt3(make_rational(17320508, 10000000), -1).sign(), -1);
    EXPECT_EQ(QSqrt3(make_rational(17320509, 10000000), -1).sign(), 1);
    EXPECT_EQ(QSqrt3(-2, 1).sign(), -1);
}
