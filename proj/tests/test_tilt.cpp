#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace tiltwall;
using oracle::q;

namespace {

const ChernCharacter Px{q(3), q(-1), q(-1, 2), q(1, 3)};
const ChernCharacter S{q(2), q(-1), q(0), q(1, 12)};

} // namespace

TEST(TiltPoint, RejectsNonPositiveAlpha)
{
    EXPECT_THROW(TiltPoint(q(0), q(1)), std::invalid_argument);
    EXPECT_THROW(TiltPoint(q(-1, 4), q(1)), std::invalid_argument);
}

TEST(TwistedChar, Examples)
{
    for (int n = -6; n <= 6; ++n) {
        Rational b = q(n, 3);
        EXPECT_EQ(twisted_char(Px, b).c2, q(3, 2) * b * b + b - q(1, 2));
        EXPECT_EQ(twisted_char(Px, b), twist(Px, -b));
    }
    EXPECT_EQ(twisted_char(S, q(-1)).c1, 1);
    EXPECT_EQ(twisted_char(Px, q(0)), Px);
}

TEST(CentralCharge, Examples)
{
    for (auto [a2, b] : {std::pair{q(1, 4), q(-1, 2)}, {q(3), q(2, 5)}, {q(1, 9), q(-7, 3)}}) {
        TiltPoint p(a2, b);
        EXPECT_EQ(central_charge(line_bundle(q(0)), p).re, (a2 - b * b) * 2 / 2);
        EXPECT_EQ(central_charge(-line_bundle(q(-2)), p).re, -a2 + (2 + b) * (2 + b));
        EXPECT_EQ(central_charge(ChernCharacter{}, p), (ChargeValue{q(0), q(0)}));
    }
}

TEST(TiltSlope, Examples)
{
    for (auto a2 : {q(1, 16), q(1, 3), q(5)}) {
        TiltPoint p(a2, q(-1));
        EXPECT_EQ(tilt_slope(Px, p).value(), -q(3) * a2 / 4);
        EXPECT_EQ(tilt_slope(-line_bundle(q(-2)), p).value(), (a2 - 1) / 2);
    }
    // rank zero (0,1,1/2): Im Z = H^2 ch1 = 2
    TiltPoint p(q(1, 4), q(1, 2));
    EXPECT_EQ(central_charge(ChernCharacter{q(0), q(1), q(1, 2), q(0)}, p).im, 2);
    EXPECT_FALSE(tilt_slope(ChernCharacter{q(0), q(1), q(1, 2), q(0)}, p).is_infinite());
}

TEST(TiltSlope, Errors)
{
    TiltPoint p(q(1), q(-1));
    EXPECT_THROW(tilt_slope(line_bundle(q(-2)), p), not_in_heart);
    EXPECT_THROW(tilt_slope(ChernCharacter{}, p), zero_class);
    // ch3 does not enter Z
    EXPECT_THROW(tilt_slope(ChernCharacter{q(0), q(0), q(0), q(1, 2)}, p), zero_class);
    // Im Z = 0, Re Z != 0: +infinity
    EXPECT_TRUE(tilt_slope(ChernCharacter{q(0), q(0), q(1, 2), q(0)}, p).is_infinite());
}

TEST(Discriminant, Examples)
{
    for (int k = -4; k <= 4; ++k) EXPECT_EQ(discriminant(line_bundle(q(k))), 0);
    EXPECT_EQ(discriminant(ChernCharacter{q(0), q(1), q(1, 2), q(0)}), 4);
    EXPECT_EQ(discriminant(Px), 16);
    EXPECT_EQ(discriminant(S), 4);
}

TEST(Bogomolov, Examples)
{
    EXPECT_TRUE(bogomolov_ok(Px));
    EXPECT_TRUE(bogomolov_ok(S));
    EXPECT_FALSE(bogomolov_ok(ChernCharacter{q(1), q(0), q(1), q(0)}));
}

TEST(RotatedCharge, Examples)
{
    TiltPoint p(q(1, 2), q(1, 3));
    // a class with Z = (0, y): c0 = 0, c2^beta = 0
    ChernCharacter u{q(0), q(1), q(1, 3), q(0)};
    auto z = central_charge(u, p);
    ASSERT_EQ(z.re, 0);
    EXPECT_EQ(rotated_charge(u, p), (ChargeValue{z.im, q(0)}));
    EXPECT_EQ(rotated_charge(ChernCharacter{}, p), (ChargeValue{q(0), q(0)}));
    // mu0(G) for G = -ch(P_x)
    for (auto [a2, b] : {std::pair{q(1, 16), q(-3, 4)}, {q(1, 9), q(-1, 2)}, {q(2), q(1)}}) {
        auto z0 = rotated_charge(-Px, TiltPoint(a2, b));
        Rational mu0 = -z0.re / z0.im;
        EXPECT_EQ(mu0, -(3 * b + 1) / (q(1, 2) - b - q(3, 2) * b * b + q(3, 2) * a2));
    }
}

TEST(Heart, Examples)
{
    EXPECT_TRUE(numerically_in_heart(Px, q(-1)));
    EXPECT_EQ(twisted_char(Px, q(-1)).c1, 2);
    EXPECT_FALSE(numerically_in_heart(line_bundle(q(-2)), q(-1)));
    EXPECT_EQ(twisted_char(line_bundle(q(-2)), q(-1)).c1, -1);
}

TEST(TiltProperties, Randomised)
{
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 12), pos(1, 40);
    for (int i = 0; i < 100; ++i) {
        auto v = oracle::random_class(rng, 4, 4, 8, 24);
        auto w = oracle::random_class(rng, 4, 4, 8, 24);
        TiltPoint p(q(pos(rng), den(rng)), q(num(rng), den(rng)));
        auto zv = central_charge(v, p), zw = central_charge(w, p);
        EXPECT_EQ(central_charge(v + w, p), zv + zw);
        auto rv = rotated_charge(v, p), rw = rotated_charge(w, p);
        EXPECT_EQ(rotated_charge(v + w, p), rv + rw);
        EXPECT_EQ(rv.re * rv.re + rv.im * rv.im, zv.re * zv.re + zv.im * zv.im);
        Rational k = q(num(rng), den(rng));
        EXPECT_EQ(discriminant(v), discriminant(twist(v, k)));
        if (zv.im > 0) {
            for (int n = 1; n <= 4; ++n) EXPECT_EQ(tilt_slope(Rational(n) * v, p), tilt_slope(v, p));
        }
        if (numerically_in_heart(v, p.beta) && twisted_char(v, p.beta).c1 > 0) {
            EXPECT_FALSE(numerically_in_heart(-v, p.beta));
        }
    }
}
