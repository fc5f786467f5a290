#include <gtest/gtest.h>

#include "support.hpp"

using namespace wildrep;
using namespace wildrep::testing;

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rat("6/4"), R(3, 2));
    EXPECT_EQ(to_string(R(-5, 10)), "-1/2");
    EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rat("abc"), std::invalid_argument);
}

TEST(Rational, FloorFracAndGrid) {
    EXPECT_EQ(floor_rat(R(-1, 2)), R(-1));
    EXPECT_EQ(frac(R(7, 3)), R(1, 3));
    EXPECT_EQ(lcm64(4, 6), 12);
    EXPECT_EQ(next_multiple_above(R(1), R(1, 3)), R(4, 3));
    EXPECT_TRUE(is_integer(R(4, 2)));
}

TEST(Scalar, RationalRoundTrip) {
    for (long n = -12; n <= 12; ++n) {
        for (long d = 1; d <= 5; ++d) {
            Rat r = R(n, d);
            auto s = ExactScalar::from_rat(r);
            ASSERT_TRUE(s.to_rat());
            EXPECT_EQ(*s.to_rat(), r);
        }
    }
}

TEST(Scalar, MultiplicativeGroup) {
    auto half = ExactScalar::from_rat(R(1, 2));
    EXPECT_EQ(scalar_mul(half, S(2)), ExactScalar::one());
    EXPECT_EQ(scalar_inv(S(-3)), S(-1, 3));
    auto root2 = scalar_pow(S(2), R(1, 2));
    EXPECT_FALSE(root2.to_rat());
    EXPECT_EQ(scalar_mul(root2, root2), S(2));
    EXPECT_EQ(scalar_pow(ExactScalar::phase(R(1, 3)), R(3)), ExactScalar::one());
    EXPECT_EQ(-S(5), S(-5));
}

TEST(Scalar, Addition) {
    EXPECT_EQ(scalar_try_add(S(1, 2), S(1, 3)), S(5, 6));
    EXPECT_TRUE(scalar_sub(S(2), S(2)).is_zero());
    auto w = ExactScalar::phase(R(1, 3));
    EXPECT_EQ(scalar_try_add(w, w), scalar_mul(S(2), w));
    EXPECT_THROW(scalar_try_add(w, S(1)), NotRepresentable);
}

TEST(Scalar, OrderIsTotal) {
    std::vector<ExactScalar> xs{S(0), S(1), S(-1), S(2), ExactScalar::phase(R(1, 3)), S(1, 2)};
    for (const auto& a : xs) {
        for (const auto& b : xs) {
            int relations = (a < b) + (b < a) + (a == b);
            EXPECT_EQ(relations, 1) << a.str() << " vs " << b.str();
        }
    }
}

TEST(SpherePoint, InfinityFirst) {
    EXPECT_TRUE(SpherePoint::infinity() < SpherePoint::finite(R(0)));
    EXPECT_EQ(SpherePoint::infinity().str(), "inf");
    EXPECT_EQ(SpherePoint::finite(R(3, 2)).str(), "3/2");
}
