#pragma once

#include <tiltwall/tilt.hpp>

#include <optional>
#include <utility>
#include <variant>

namespace tiltwall {

/// A vertical line or a semicircle centred on the beta-axis.
struct NumericalWall {
    enum class Kind { vertical, semicircle };

    Kind kind = Kind::vertical;
    Rational beta0;     // vertical
    Rational center;    // semicircle
    Rational radius_sq; // semicircle, > 0
    std::optional<std::pair<ChernCharacter, ChernCharacter>> source;

    static NumericalWall vertical(Rational b)
    {
        NumericalWall w;
        w.kind = Kind::vertical;
        w.beta0 = std::move(b);
        return w;
    }
    static NumericalWall semicircle(Rational c, Rational r2)
    {
        if (r2 <= 0) {
            throw std::invalid_argument("semicircle needs positive radius^2");
        }
        NumericalWall w;
        w.kind = Kind::semicircle;
        w.center = std::move(c);
        w.radius_sq = std::move(r2);
        return w;
    }

    bool is_vertical() const { return kind == Kind::vertical; }
    bool is_semicircle() const { return kind == Kind::semicircle; }

    // Walls are loci: the defining pair does not take part in equality.
    friend bool operator==(const NumericalWall& a, const NumericalWall& b)
    {
        if (a.kind != b.kind) {
            return false;
        }
        return a.is_vertical() ? a.beta0 == b.beta0 : (a.center == b.center && a.radius_sq == b.radius_sq);
    }

    friend bool operator<(const NumericalWall& a, const NumericalWall& b)
    {
        if (a.kind != b.kind) {
            return a.kind < b.kind;
        }
        if (a.is_vertical()) {
            return a.beta0 < b.beta0;
        }
        return a.center != b.center ? a.center < b.center : a.radius_sq < b.radius_sq;
    }
};

struct Everywhere {
    friend bool operator==(Everywhere, Everywhere) { return true; }
};
struct Nowhere {
    friend bool operator==(Nowhere, Nowhere) { return true; }
};

using WallLocus = std::variant<NumericalWall, Everywhere, Nowhere>;

inline std::string to_string(const NumericalWall& w)
{
    if (w.is_vertical()) {
        return "V \xce\xb2=" + to_string(w.beta0);
    }
    return "S center=" + to_string(w.center) + " r2=" + to_string(w.radius_sq);
}

inline std::string to_string(const WallLocus& w)
{
    if (auto p = std::get_if<NumericalWall>(&w)) {
        return to_string(*p);
    }
    return std::holds_alternative<Everywhere>(w) ? "Everywhere" : "Nowhere";
}

inline std::ostream& operator<<(std::ostream& os, const NumericalWall& w) { return os << to_string(w); }

/// Locus where the tilt slopes of v and w agree, obtained from
/// Re Z(v) Im Z(w) = Re Z(w) Im Z(v) with denominators cleared:
///   A (alpha^2 + beta^2) + (d r' - d' r) beta + (d' c - d c') = 0,  A = (r c' - r' c) / 2.
/// H^3 factors out, so the result is independent of the geometry.
inline WallLocus wall_between(const ChernCharacter& v, const ChernCharacter& w)
{
    if (v.truncated().is_zero() || w.truncated().is_zero()) {
        throw zero_class("wall_between needs nonzero classes");
    }
    const Rational &r = v.c0, &c = v.c1, &d = v.c2;
    const Rational &r2 = w.c0, &c2 = w.c1, &d2 = w.c2;
    Rational a = (r * c2 - r2 * c) / 2;
    Rational lin = d * r2 - d2 * r;
    Rational cst = d2 * c - d * c2;

    WallLocus out;
    if (a != 0) {
        Rational p = lin / a;
        Rational q = cst / a;
        Rational center = -p / 2;
        Rational rsq = p * p / 4 - q;
        if (rsq <= 0) {
            return Nowhere{};
        }
        out = NumericalWall::semicircle(center, rsq);
    } else if (lin != 0) {
        out = NumericalWall::vertical(-cst / lin);
    } else {
        if (cst == 0) {
            return Everywhere{};
        }
        return Nowhere{};
    }
    std::get<NumericalWall>(out).source = std::make_pair(v, w);
    return out;
}

inline NumericalWall vertical_wall(const ChernCharacter& v)
{
    if (v.c0 == 0) {
        throw std::domain_error("vertical wall needs nonzero rank");
    }
    return NumericalWall::vertical(v.c1 / v.c0);
}

/// The locus (beta - center)^2 - alpha^2 = half_width_sq where Re Z(v) = 0.
struct ApexHyperbola {
    Rational center;
    Rational half_width_sq;

    friend bool operator==(const ApexHyperbola&, const ApexHyperbola&) = default;
};

inline ApexHyperbola apex_hyperbola(const ChernCharacter& v)
{
    if (v.c0 == 0) {
        throw std::domain_error("apex hyperbola needs nonzero rank");
    }
    return {v.c1 / v.c0, (v.c1 * v.c1 - 2 * v.c0 * v.c2) / (v.c0 * v.c0)};
}

/// Common centre of the semicircular walls of a rank-zero class.
inline Rational rank_zero_top_line(const ChernCharacter& v)
{
    if (v.c0 != 0 || v.c1 == 0) {
        throw std::domain_error("rank_zero_top_line needs c0 = 0 and c1 != 0");
    }
    return v.c2 / v.c1;
}

enum class WallRelation { disjoint, intersect, equal };

inline WallRelation wall_relation(const NumericalWall& a, const NumericalWall& b)
{
    if (a == b) {
        return WallRelation::equal;
    }
    if (a.is_vertical() && b.is_vertical()) {
        return WallRelation::disjoint;
    }
    if (a.is_vertical() || b.is_vertical()) {
        const NumericalWall& v = a.is_vertical() ? a : b;
        const NumericalWall& s = a.is_vertical() ? b : a;
        Rational dx = v.beta0 - s.center;
        return s.radius_sq - dx * dx > 0 ? WallRelation::intersect : WallRelation::disjoint;
    }
    if (a.center == b.center) {
        return WallRelation::disjoint;
    }
    Rational beta = (a.radius_sq - b.radius_sq - a.center * a.center + b.center * b.center) / (2 * (b.center - a.center));
    Rational dx = beta - a.center;
    return a.radius_sq - dx * dx > 0 ? WallRelation::intersect : WallRelation::disjoint;
}

/// True iff the two walls share no point with alpha > 0. Equal walls are not disjoint.
inline bool walls_disjoint(const NumericalWall& a, const NumericalWall& b)
{
    return wall_relation(a, b) == WallRelation::disjoint;
}

enum class PointRelation { above, on, below, left, right };

inline const char* to_string(PointRelation r)
{
    switch (r) {
    case PointRelation::above: return "above";
    case PointRelation::on: return "on";
    case PointRelation::below: return "below";
    case PointRelation::left: return "left";
    default: return "right";
    }
}

inline PointRelation point_relation(const NumericalWall& w, const TiltPoint& p)
{
    if (w.is_vertical()) {
        int s = sign_of(p.beta - w.beta0);
        return s < 0 ? PointRelation::left : s > 0 ? PointRelation::right : PointRelation::on;
    }
    Rational dx = p.beta - w.center;
    int s = sign_of(dx * dx + p.alpha_sq - w.radius_sq);
    return s > 0 ? PointRelation::above : s < 0 ? PointRelation::below : PointRelation::on;
}

} // namespace tiltwall
