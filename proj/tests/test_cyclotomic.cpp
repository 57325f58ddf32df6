#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "fpart/cyclotomic.hpp"
#include "fpart/errors.hpp"

namespace fpart {
namespace {

std::vector<BigInt> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

TEST(Cyclotomic, PolynomialsMatchHandComputation) {
    EXPECT_EQ(cyclotomic_polynomial(1).coeffs, ints({-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2).coeffs, ints({1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6).coeffs, ints({1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(8).coeffs, ints({1, 0, 0, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12).coeffs, ints({1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(15).coeffs, ints({1, -1, 0, 1, -1, 1, 0, -1, 1}));
}

TEST(Cyclotomic, DegreeIsEulerPhi) {
    for (std::uint32_t n = 1; n <= 60; ++n)
        EXPECT_EQ(cyclotomic_polynomial(n).degree(), static_cast<int>(euler_phi(n))) << n;
}

TEST(Cyclotomic, ReductionModPhi12) {
    // x^4 = x^2 - 1 gives x^6 = -1, x^7 = -x, x^11 = x - x^3.
    std::vector<BigInt> c(12, 0);
    c[7] = 1;
    c[11] = 3;
    EXPECT_EQ(CycInt(12, c).coeffs(), ints({0, 2, 0, -3}));
}

TEST(Cyclotomic, RootsOfUnitySumToZero) {
    for (std::uint32_t e = 2; e <= 24; ++e) {
        CycInt sum = CycInt::integer(e, 0);
        for (std::uint32_t k = 0; k < e; ++k) sum += zeta_pow(e, k);
        EXPECT_TRUE(sum.is_zero()) << e;
        EXPECT_EQ(zeta_pow(e, e), CycInt::integer(e, 1));
        EXPECT_EQ(zeta_pow(e, -1), conjugate(zeta_pow(e, 1)));
    }
}

TEST(Cyclotomic, ArithmeticAgreesWithComplexValues) {
    const std::uint32_t e = 15;
    auto value = [&](const CycInt& a) {
        const auto [re, im] = approx_complex(a);
        return std::complex<double>(re, im);
    };
    const CycInt a(e, ints({1, -2, 0, 3, 1, 0, 0, 1}));
    const CycInt b(e, ints({0, 1, 1, 0, -1, 2, 0, 0}));
    EXPECT_LT(std::abs(value(a * b) - value(a) * value(b)), 1e-9);
    EXPECT_LT(std::abs(value(a + b) - value(a) - value(b)), 1e-9);
    EXPECT_LT(std::abs(value(conjugate(a)) - std::conj(value(a))), 1e-9);
}

TEST(Cyclotomic, ExponentCounts) {
    const std::vector<std::int64_t> counts{1, 0, 1, 0, 1, 0};  // 1 + z^2 + z^4 = 0 in Z[z6]
    EXPECT_TRUE(CycInt::from_exponent_counts(6, counts).is_zero());
    const std::vector<std::int64_t> half{0, 1, 0, 1, 0, 1};
    EXPECT_TRUE(CycInt::from_exponent_counts(6, half).is_zero());
    const std::vector<std::int64_t> two{2, 0, 0, 0, 0, 0};
    EXPECT_EQ(as_rational_integer(CycInt::from_exponent_counts(6, two)), BigInt(2));
}

TEST(Cyclotomic, ChangeOrderEmbedsRing) {
    const CycInt z3 = zeta_pow(3, 1);
    EXPECT_EQ(change_order(z3, 6), zeta_pow(6, 2));
    EXPECT_EQ(change_order(z3 * z3, 12), change_order(z3, 12) * change_order(z3, 12));
    EXPECT_THROW(change_order(z3, 4), invalid_input);
}

TEST(Cyclotomic, OrderMismatchThrows) {
    EXPECT_THROW(zeta_pow(4, 1) + zeta_pow(6, 1), invalid_input);
}

TEST(Cyclotomic, RationalIntegerDetection) {
    EXPECT_EQ(as_rational_integer(CycInt::integer(8, -5)), BigInt(-5));
    EXPECT_FALSE(as_rational_integer(zeta_pow(8, 1)).has_value());
    // z8 + z8^7 = sqrt(2) is real but irrational.
    EXPECT_FALSE(as_rational_integer(zeta_pow(8, 1) + zeta_pow(8, 7)).has_value());
    EXPECT_EQ(to_string(CycInt::integer(5, 7)), "7");
}

TEST(Cyclotomic, BigCoefficientsStayExact) {
    const CycInt x = CycInt::integer(7, 1) + zeta_pow(7, 1);
    CycInt linear = CycInt::integer(7, 1);
    for (int i = 0; i < 256; ++i) linear *= x;
    CycInt squared = x;
    for (int i = 0; i < 8; ++i) squared *= squared;
    EXPECT_EQ(linear, squared);
    BigInt largest = 0;
    for (const auto& c : linear.coeffs()) largest = std::max(largest, BigInt(boost::multiprecision::abs(c)));
    EXPECT_GT(largest, BigInt(1) << 64);
}

}  // namespace
}  // namespace fpart
