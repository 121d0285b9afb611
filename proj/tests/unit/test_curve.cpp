#include "escher/curve.hpp"
#include "escher/error.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace escher;

TEST(Curve, ValidatesSamples) {
    EXPECT_THROW(PerturbedCurve({{0.0, 0.1}}), Error);
    EXPECT_THROW(PerturbedCurve({{0.5, 0.1}, {0.4, 0.1}}), Error);
    EXPECT_THROW(PerturbedCurve({{0.5, 0.31}}), Error);
    EXPECT_NO_THROW(PerturbedCurve({{0.5, 0.3}}));
    EXPECT_TRUE(PerturbedCurve().is_straight());
}

TEST(Curve, Displacement) {
    const PerturbedCurve c({{0.25, 0.2}, {0.75, -0.2}});
    EXPECT_DOUBLE_EQ(c.displacement(0.0), 0.0);
    EXPECT_DOUBLE_EQ(c.displacement(0.125), 0.1);
    EXPECT_DOUBLE_EQ(c.displacement(0.5), 0.0);
    EXPECT_DOUBLE_EQ(c.displacement(1.0), 0.0);
}

TEST(Curve, Transforms) {
    const PerturbedCurve c({{0.25, 0.2}});
    EXPECT_DOUBLE_EQ(curve_mirror(c).displacement(0.75), 0.2);
    EXPECT_DOUBLE_EQ(curve_invert(c).displacement(0.25), -0.2);
    EXPECT_DOUBLE_EQ(curve_dual(c).displacement(0.75), -0.2);
    EXPECT_TRUE(curves_abut(c, curve_dual(c)));
    EXPECT_FALSE(curves_abut(c, c));
    EXPECT_DOUBLE_EQ(curve_distance(c, PerturbedCurve()), 0.2);
}

TEST(Curve, SelfDual) {
    EXPECT_TRUE(is_self_dual(PerturbedCurve()));
    EXPECT_TRUE(is_self_dual(PerturbedCurve({{0.25, 0.1}, {0.75, -0.1}})));
    EXPECT_FALSE(is_self_dual(PerturbedCurve({{0.25, 0.1}})));
}

TEST(CurveProperty, DualLaws) {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 500; ++n) {
        const auto c = gen::random_curve(rng);
        EXPECT_TRUE(curves_equal(curve_dual(curve_dual(c)), c));
        EXPECT_TRUE(curves_equal(curve_dual(c), curve_mirror(curve_invert(c))));
        EXPECT_TRUE(curves_abut(c, curve_dual(c)));
    }
}
