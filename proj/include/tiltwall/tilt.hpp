#pragma once

#include <tiltwall/chow.hpp>

#include <variant>

namespace tiltwall {

class not_in_heart : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class zero_class : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A point of the upper half-plane, stored as (alpha^2, beta).
struct TiltPoint {
    Rational alpha_sq;
    Rational beta;

    TiltPoint(Rational a2, Rational b) : alpha_sq(std::move(a2)), beta(std::move(b))
    {
        if (alpha_sq <= 0) {
            throw std::invalid_argument("alpha^2 must be positive");
        }
    }
};

struct ChargeValue {
    Rational re;
    Rational im;

    friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
    friend ChargeValue operator+(const ChargeValue& a, const ChargeValue& b) { return {a.re + b.re, a.im + b.im}; }
};

inline ChernCharacter twisted_char(const ChernCharacter& v, const Rational& beta) { return twist(v, -beta); }

inline ChargeValue central_charge(const ChernCharacter& v, const TiltPoint& p, const ThreefoldGeometry& g = quadric())
{
    ChernCharacter t = twisted_char(v, p.beta);
    return {p.alpha_sq * g.degree * t.c0 / 2 - g.degree * t.c2, g.degree * t.c1};
}

/// -iZ.
inline ChargeValue rotated_charge(const ChernCharacter& v, const TiltPoint& p, const ThreefoldGeometry& g = quadric())
{
    ChargeValue z = central_charge(v, p, g);
    return {z.im, -z.re};
}

/// -Re Z / Im Z, or +inf when Im Z = 0.
inline Slope tilt_slope(const ChernCharacter& v, const TiltPoint& p, const ThreefoldGeometry& g = quadric())
{
    ChargeValue z = central_charge(v, p, g);
    if (z.im < 0) {
        throw not_in_heart("not in numerical heart at beta=" + to_string(p.beta));
    }
    if (z.im == 0) {
        if (z.re == 0) {
            throw zero_class("slope of a class with Z = 0");
        }
        return Slope::infinite();
    }
    return Slope::finite(-z.re / z.im);
}

/// (H^2 ch1)^2 - 2 (H^3 ch0)(H ch2).
inline Rational discriminant(const ChernCharacter& v, const ThreefoldGeometry& g = quadric())
{
    Rational d = g.degree;
    return d * d * (v.c1 * v.c1 - 2 * v.c0 * v.c2);
}

inline bool bogomolov_ok(const ChernCharacter& v, const ThreefoldGeometry& g = quadric())
{
    return discriminant(v, g) >= 0;
}

inline bool numerically_in_heart(const ChernCharacter& v, const Rational& beta, const ThreefoldGeometry& g = quadric())
{
    return g.degree * twisted_char(v, beta).c1 >= 0;
}

} // namespace tiltwall
