#include <gtest/gtest.h>

#include "logsym/errors.hpp"
#include "logsym/rational.hpp"

using logsym::Rational;

TEST(Rational, ParsesIntegersAndFractions) {
    EXPECT_EQ(logsym::parse_rational("7"), Rational(7));
    EXPECT_EQ(logsym::parse_rational("-3"), Rational(-3));
    EXPECT_EQ(logsym::parse_rational("+4"), Rational(4));
    EXPECT_EQ(logsym::parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(logsym::parse_rational("-10/4"), Rational(-5, 2));
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "2 /3", "1/2/3", "--1", "1/-2"})
        EXPECT_THROW(logsym::parse_rational(bad), logsym::InputError) << bad;
}

TEST(Rational, PrintsLowestTermsPositiveDenominator) {
    EXPECT_EQ(logsym::to_string(Rational(8)), "8");
    EXPECT_EQ(logsym::to_string(Rational(-6) / 4), "-3/2");
    Rational q(3, -9);
    q.canonicalize();
    EXPECT_EQ(logsym::to_string(q), "-1/3");
    EXPECT_EQ(logsym::to_string(Rational(0)), "0");
}

TEST(Rational, NaturalIncludesZero) {
    EXPECT_TRUE(logsym::is_natural(Rational(0)));
    EXPECT_TRUE(logsym::is_natural(Rational(3)));
    EXPECT_FALSE(logsym::is_natural(Rational(-1)));
    EXPECT_FALSE(logsym::is_natural(Rational(1, 2)));
    EXPECT_TRUE(logsym::is_integer(Rational(-4)));
    EXPECT_FALSE(logsym::is_integer(Rational(-4, 3)));
}

TEST(Rational, ParseAndPrintRoundTrip) {
    for (int p = -12; p <= 12; ++p)
        for (int q = 1; q <= 7; ++q) {
            Rational x(p, q);
            x.canonicalize();
            EXPECT_EQ(logsym::parse_rational(logsym::to_string(x)), x);
        }
}
