#include "oracles.hpp"

#include <tiltwall/walls.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace tiltwall;
using oracle::q;

namespace {

const ChernCharacter Px{q(3), q(-1), q(-1, 2), q(1, 3)};
const ChernCharacter S{q(2), q(-1), q(0), q(1, 12)};
const ChernCharacter Il{q(1), q(0), q(-1, 2), q(1, 4)};
const ChernCharacter G{q(0), q(1), q(1, 2), q(0)};

NumericalWall as_wall(const WallLocus& l)
{
    EXPECT_TRUE(std::holds_alternative<NumericalWall>(l)) << to_string(l);
    return std::get<NumericalWall>(l);
}

/// Two circles centred on the axis cross above it iff (up to rounding) |r1 - r2| < d < r1 + r2.
bool circles_cross_numeric(const NumericalWall& a, const NumericalWall& b)
{
    double r1 = std::sqrt(a.radius_sq.convert_to<double>());
    double r2 = std::sqrt(b.radius_sq.convert_to<double>());
    double d = std::abs((a.center - b.center).convert_to<double>());
    const double eps = 1e-9;
    return std::abs(r1 - r2) + eps < d && d + eps < r1 + r2;
}

} // namespace

TEST(WallBetween, Examples)
{
    EXPECT_EQ(as_wall(wall_between(G, -line_bundle(q(-2)))), NumericalWall::semicircle(q(1, 2), q(25, 4)));
    EXPECT_EQ(as_wall(wall_between(line_bundle(q(3)), -Px)), NumericalWall::semicircle(q(7, 5), q(64, 25)));
    EXPECT_TRUE(std::holds_alternative<Everywhere>(wall_between(Px, q(2) * Px)));
    ChernCharacter oyd{q(0), q(1), q(1, 2), q(-1, 3)};
    EXPECT_EQ(as_wall(wall_between(oyd, -line_bundle(q(-3)))), NumericalWall::semicircle(q(1, 2), q(49, 4)));
    EXPECT_THROW(wall_between(ChernCharacter{}, Px), zero_class);
}

TEST(WallBetween, Serialisation)
{
    EXPECT_EQ(to_string(wall_between(G, -line_bundle(q(-2)))), "S center=1/2 r2=25/4");
    EXPECT_EQ(to_string(NumericalWall::vertical(q(-1, 3))), "V \xce\xb2=-1/3");
    EXPECT_EQ(to_string(WallLocus{Everywhere{}}), "Everywhere");
    EXPECT_EQ(to_string(WallLocus{Nowhere{}}), "Nowhere");
}

TEST(WallBetween, NowhereCase)
{
    // circle equation with negative radius^2
    EXPECT_TRUE(std::holds_alternative<Nowhere>(
        wall_between(ChernCharacter{q(1), q(0), q(-1), q(0)}, ChernCharacter{q(0), q(1), q(0), q(0)})));
    // two line bundles always have a wall
    EXPECT_EQ(as_wall(wall_between(line_bundle(q(0)), line_bundle(q(1)))), NumericalWall::semicircle(q(1, 2), q(1, 4)));
    // two rank-zero classes with different top lines never share a slope
    EXPECT_TRUE(std::holds_alternative<Nowhere>(
        wall_between(ChernCharacter{q(0), q(1), q(0), q(0)}, ChernCharacter{q(0), q(1), q(1, 2), q(0)})));
}

TEST(VerticalWall, Examples)
{
    EXPECT_EQ(vertical_wall(Px), NumericalWall::vertical(q(-1, 3)));
    EXPECT_EQ(vertical_wall(S), NumericalWall::vertical(q(-1, 2)));
    EXPECT_EQ(vertical_wall(Il), NumericalWall::vertical(q(0)));
    EXPECT_THROW(vertical_wall(G), std::domain_error);
}

TEST(ApexHyperbola, Examples)
{
    EXPECT_EQ(apex_hyperbola(Px), (ApexHyperbola{q(-1, 3), q(4, 9)}));
    EXPECT_EQ(apex_hyperbola(S), (ApexHyperbola{q(-1, 2), q(1, 4)}));
    EXPECT_EQ(apex_hyperbola(Il), (ApexHyperbola{q(0), q(1)}));
    EXPECT_THROW(apex_hyperbola(G), std::domain_error);
}

TEST(RankZeroTopLine, Examples)
{
    EXPECT_EQ(rank_zero_top_line(G), q(1, 2));
    EXPECT_EQ(rank_zero_top_line(ChernCharacter{q(0), q(1), q(-1, 2), q(1, 6)}), q(-1, 2));
    EXPECT_EQ(rank_zero_top_line(ChernCharacter{q(0), q(2), q(1), q(0)}), q(1, 2));
    EXPECT_THROW(rank_zero_top_line(Px), std::domain_error);
    EXPECT_THROW(rank_zero_top_line(ChernCharacter{q(0), q(0), q(1), q(0)}), std::domain_error);
}

TEST(WallsDisjoint, Examples)
{
    auto w12 = NumericalWall::semicircle(q(1, 2), q(1, 4));
    auto w52 = NumericalWall::semicircle(q(1, 2), q(25, 4));
    EXPECT_TRUE(walls_disjoint(w12, w52));
    EXPECT_FALSE(walls_disjoint(w12, w12));
    EXPECT_EQ(wall_relation(w12, w12), WallRelation::equal);
    EXPECT_EQ(wall_relation(w12, NumericalWall::semicircle(q(1), q(1, 2))), WallRelation::intersect);
    // tangent on the boundary only
    EXPECT_EQ(wall_relation(w12, NumericalWall::semicircle(q(1), q(1))), WallRelation::disjoint);
    EXPECT_EQ(wall_relation(NumericalWall::vertical(q(0)), NumericalWall::vertical(q(1))), WallRelation::disjoint);
    EXPECT_EQ(wall_relation(NumericalWall::vertical(q(1, 2)), w12), WallRelation::intersect);
    EXPECT_EQ(wall_relation(NumericalWall::vertical(q(1)), w12), WallRelation::disjoint);
}

TEST(WallsDisjoint, VerticalVersusLeftNest)
{
    std::mt19937 rng(8);
    auto vert = vertical_wall(Px);
    int seen = 0;
    for (int i = 0; i < 3000 && seen < 20; ++i) {
        auto w = oracle::random_class(rng, 4, 6, 12, 0);
        if (w.truncated().is_zero()) continue;
        auto l = wall_between(Px, w);
        auto p = std::get_if<NumericalWall>(&l);
        if (!p || !p->is_semicircle() || p->center >= q(-1, 3)) continue;
        ++seen;
        EXPECT_TRUE(walls_disjoint(vert, *p)) << to_string(*p);
    }
    EXPECT_GE(seen, 5);
}

TEST(PointRelation, Examples)
{
    auto w = NumericalWall::semicircle(q(1, 2), q(1, 4));
    EXPECT_EQ(point_relation(w, TiltPoint(q(1, 4), q(1, 2))), PointRelation::on);
    EXPECT_EQ(point_relation(w, TiltPoint(q(9), q(1, 2))), PointRelation::above);
    EXPECT_EQ(point_relation(w, TiltPoint(q(1, 100), q(1, 2))), PointRelation::below);
    auto v = NumericalWall::vertical(q(-1, 3));
    EXPECT_EQ(point_relation(v, TiltPoint(q(1), q(-1))), PointRelation::left);
    EXPECT_EQ(point_relation(v, TiltPoint(q(1), q(-1, 3))), PointRelation::on);
    EXPECT_EQ(point_relation(v, TiltPoint(q(1), q(0))), PointRelation::right);
}

TEST(WallProperties, SymmetryAndSubQuotient)
{
    std::mt19937 rng(555);
    for (int i = 0; i < 100; ++i) {
        auto v = oracle::random_class(rng, 4, 5, 10, 0);
        auto w = oracle::random_class(rng, 4, 5, 10, 0);
        if (v.is_zero() || w.is_zero() || (v + w).is_zero()) continue;
        auto a = wall_between(v, w);
        EXPECT_EQ(a, wall_between(w, v));
        EXPECT_EQ(a, wall_between(v, v + w));
        EXPECT_EQ(a, wall_between(v + w, w));
    }
}

TEST(WallProperties, VerticalOnlyAtMuH)
{
    std::mt19937 rng(556);
    int seen = 0;
    for (int i = 0; i < 4000; ++i) {
        auto v = oracle::random_class(rng, 3, 3, 6, 0);
        auto w = oracle::random_class(rng, 3, 3, 6, 0);
        if (v.is_zero() || w.is_zero()) continue;
        auto l = wall_between(v, w);
        auto p = std::get_if<NumericalWall>(&l);
        if (!p || !p->is_vertical() || v.c0 == 0) continue;
        ++seen;
        EXPECT_EQ(p->beta0, mu_H(v).value());
    }
    EXPECT_GT(seen, 0);
}

TEST(WallProperties, ApexesOnHyperbola)
{
    std::mt19937 rng(557);
    for (int i = 0; i < 300; ++i) {
        auto v = oracle::random_class(rng, 4, 5, 10, 0);
        auto w = oracle::random_class(rng, 4, 5, 10, 0);
        if (v.c0 == 0 || w.is_zero()) continue;
        auto l = wall_between(v, w);
        auto p = std::get_if<NumericalWall>(&l);
        if (!p || !p->is_semicircle()) continue;
        auto h = apex_hyperbola(v);
        Rational d = p->center - h.center;
        // top point (center, sqrt(r2)): (center - mu)^2 - r2 = half_width_sq
        EXPECT_EQ(d * d - p->radius_sq, h.half_width_sq);
    }
}

TEST(WallProperties, RankZeroSharedCentre)
{
    std::mt19937 rng(558);
    for (int i = 0; i < 200; ++i) {
        auto v = oracle::random_class(rng, 0, 4, 8, 0);
        auto w = oracle::random_class(rng, 4, 5, 10, 0);
        if (v.c1 == 0 || w.is_zero()) continue;
        auto l = wall_between(v, w);
        if (auto p = std::get_if<NumericalWall>(&l); p && p->is_semicircle()) {
            EXPECT_EQ(p->center, rank_zero_top_line(v));
        }
    }
}

TEST(WallProperties, NestedWallsDisjoint)
{
    std::mt19937 rng(559);
    int tested = 0;
    for (int i = 0; i < 20000 && tested < 200; ++i) {
        auto v = oracle::random_class(rng, 3, 4, 8, 0);
        if (v.truncated().is_zero() || discriminant(v) < 0) continue;
        auto w1 = oracle::random_class(rng, 4, 5, 10, 0);
        auto w2 = oracle::random_class(rng, 4, 5, 10, 0);
        if (w1.is_zero() || w2.is_zero()) continue;
        auto l1 = wall_between(v, w1), l2 = wall_between(v, w2);
        auto p1 = std::get_if<NumericalWall>(&l1), p2 = std::get_if<NumericalWall>(&l2);
        if (!p1 || !p2 || !p1->is_semicircle() || !p2->is_semicircle() || *p1 == *p2) continue;
        ++tested;
        EXPECT_TRUE(walls_disjoint(*p1, *p2)) << format_class(v) << " " << to_string(*p1) << " " << to_string(*p2);
        EXPECT_FALSE(circles_cross_numeric(*p1, *p2));
    }
    EXPECT_GE(tested, 50);
}
