#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "cwpd/format.hpp"
#include "cwpd/rational.hpp"

using cwpd::QSqrt2;
using cwpd::Rational;

TEST(RationalFormat, AlwaysShowsDenominator) {
    EXPECT_EQ(cwpd::format_rational(Rational(3)), "3/1");
    EXPECT_EQ(cwpd::format_rational(Rational(0)), "0/1");
    EXPECT_EQ(cwpd::format_rational(Rational(-6, 4)), "-3/2");
}

TEST(RationalFormat, ParseRoundTrip) {
    EXPECT_EQ(cwpd::parse_rational("7"), Rational(7));
    EXPECT_EQ(cwpd::parse_rational("-10/4"), Rational(-5, 2));
    for (const char* s : {"1/2", "-3/1", "0/1", "123456789012345678901234567891/2"})
        EXPECT_EQ(cwpd::format_rational(cwpd::parse_rational(s)), s);
}

TEST(RationalFormat, RejectsGarbage) {
    for (const char* s : {"", "1/0", "abc", "1/2/3", "1.5", " 1"})
        EXPECT_THROW(cwpd::parse_rational(s), std::invalid_argument) << s;
}

TEST(RationalPow, NegativeExponents) {
    EXPECT_EQ(cwpd::pow(Rational(2), -3), Rational(1, 8));
    EXPECT_EQ(cwpd::pow(Rational(-2, 3), 3), Rational(-8, 27));
    EXPECT_EQ(cwpd::pow(Rational(5), 0), Rational(1));
}

TEST(QSqrt2Sign, ExactNearCancellation) {
    // 99 - 70 sqrt2 ~ 0.00505 > 0, 577 - 408 sqrt2 > 0, 408 sqrt2 - 577 < 0
    EXPECT_EQ(QSqrt2(99, -70).sign(), 1);
    EXPECT_EQ(QSqrt2(577, -408).sign(), 1);
    EXPECT_EQ(QSqrt2(-577, 408).sign(), -1);
    EXPECT_EQ(QSqrt2(0, 0).sign(), 0);
    EXPECT_EQ(QSqrt2(-1, 1).sign(), 1);
}

TEST(QSqrt2Arith, MatchesDoubles) {
    const QSqrt2 a(Rational(1, 3), Rational(2)), b(Rational(-5, 7), Rational(1, 2));
    const double s = std::sqrt(2.0);
    EXPECT_NEAR((a * b).to_double(), (1.0 / 3 + 2 * s) * (-5.0 / 7 + 0.5 * s), 1e-12);
    EXPECT_NEAR((a - b).to_double(), (1.0 / 3 + 2 * s) - (-5.0 / 7 + 0.5 * s), 1e-12);
    EXPECT_TRUE(b < a);
    EXPECT_EQ(QSqrt2::sqrt2() * QSqrt2::sqrt2(), QSqrt2(2, 0));
}

TEST(FormatReal, TwelveSignificantDigits) {
    EXPECT_EQ(cwpd::format_real(std::acosh(std::sqrt(2.0))), "0.88137358702");
    EXPECT_EQ(cwpd::format_real(0.25), "0.25");
}
