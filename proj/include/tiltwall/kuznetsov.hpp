#pragma once

// Numerical lattice of the Kuznetsov component of the quadric threefold,
// with basis l1 = [O(-H)] and l2 = [S].

#include <tiltwall/tilt.hpp>

#include <array>
#include <cctype>
#include <variant>

namespace tiltwall {

struct KuClass {
    Integer a; // coefficient of l1
    Integer b; // coefficient of l2

    friend bool operator==(const KuClass&, const KuClass&) = default;
};

struct NotInLattice {
    friend bool operator==(NotInLattice, NotInLattice) { return true; }
};

inline ChernCharacter lambda1() { return {Rational(1), Rational(-1), make_rational(1, 2), make_rational(-1, 6)}; }
inline ChernCharacter lambda2() { return {Rational(2), Rational(-1), Rational(0), make_rational(1, 12)}; }

inline ChernCharacter to_chern(const KuClass& k) { return Rational(k.a) * lambda1() + Rational(k.b) * lambda2(); }

inline std::variant<KuClass, NotInLattice> from_chern(const ChernCharacter& v)
{
    // a + 2b = c0, -a - b = c1
    Rational b = v.c0 + v.c1;
    Rational a = -v.c0 - 2 * v.c1;
    if (!is_integer(a) || !is_integer(b)) {
        return NotInLattice{};
    }
    KuClass k{mp::numerator(a), mp::numerator(b)};
    if (!(to_chern(k) == v)) {
        return NotInLattice{};
    }
    return k;
}

inline std::string to_string(const KuClass& k)
{
    auto term = [](const Integer& c, const char* name) -> std::string {
        Integer m = mp::abs(c);
        return m == 1 ? std::string(name) : m.str() + "*" + name;
    };
    std::string out;
    auto append = [&](const Integer& c, const char* name) {
        if (c == 0) {
            return;
        }
        if (out.empty()) {
            out = (c < 0 ? "-" : "") + term(c, name);
        } else {
            out += (c < 0 ? " - " : " + ") + term(c, name);
        }
    };
    append(k.a, "l1");
    append(k.b, "l2");
    return out.empty() ? "0" : out;
}

/// Parses integer combinations such as "2*l2 - l1", "l2", "-3*l1 + 4 l2", "0".
inline KuClass parse_ku(std::string_view text)
{
    KuClass k{0, 0};
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += ch;
        }
    }
    if (s.empty()) {
        throw parse_error("empty Ku literal");
    }
    if (s == "0") {
        return k;
    }
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            throw parse_error("malformed Ku literal '" + std::string(text) + "'");
        }
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        Integer coeff = start == i ? Integer(1) : Integer(s.substr(start, i - start));
        if (i < s.size() && s[i] == '*') {
            ++i;
        }
        if (i + 2 > s.size() || s[i] != 'l' || (s[i + 1] != '1' && s[i + 1] != '2')) {
            throw parse_error("malformed Ku literal '" + std::string(text) + "'");
        }
        (s[i + 1] == '1' ? k.a : k.b) += sign * coeff;
        i += 2;
        any = true;
    }
    return k;
}

/// A string that looks like a Ku literal rather than a class literal.
inline bool looks_like_ku(std::string_view s) { return s.find('l') != std::string_view::npos && s.find('(') == std::string_view::npos; }

/// Gram matrix chi(l_i, l_j).
inline std::array<std::array<Rational, 2>, 2> ku_gram(const ThreefoldGeometry& g = quadric())
{
    std::array<ChernCharacter, 2> basis{lambda1(), lambda2()};
    std::array<std::array<Rational, 2>, 2> m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m[i][j] = euler_pairing(basis[i], basis[j], g);
    return m;
}

enum class Region { V, V_tilde, V_tilde_L, V_tilde_R, V_L, V_R };

inline const char* to_string(Region r)
{
    switch (r) {
    case Region::V: return "V";
    case Region::V_tilde: return "V_tilde";
    case Region::V_tilde_L: return "V_tilde_L";
    case Region::V_tilde_R: return "V_tilde_R";
    case Region::V_L: return "V_L";
    default: return "V_R";
    }
}

inline Region parse_region(std::string_view s)
{
    for (Region r : {Region::V, Region::V_tilde, Region::V_tilde_L, Region::V_tilde_R, Region::V_L, Region::V_R}) {
        if (s == to_string(r)) {
            return r;
        }
    }
    throw parse_error("unknown region '" + std::string(s) + "'");
}

namespace detail {

// alpha < bound with bound > 0, via squares.
inline bool alpha_lt(const TiltPoint& p, const Rational& bound) { return bound > 0 && p.alpha_sq < bound * bound; }
inline bool alpha_le(const TiltPoint& p, const Rational& bound) { return bound > 0 && p.alpha_sq <= bound * bound; }

inline bool in_v_tilde_left_branch(const TiltPoint& p, const Rational& split)
{
    const Rational& b = p.beta;
    return (b >= -1 && b < split && alpha_lt(p, -b)) || (b > -2 && b < -1 && alpha_le(p, 2 + b));
}

} // namespace detail

inline bool in_region(Region r, const TiltPoint& p)
{
    const Rational& b = p.beta;
    const Rational third = make_rational(-1, 3);
    const Rational half = make_rational(-1, 2);
    switch (r) {
    case Region::V_tilde:
        return detail::in_v_tilde_left_branch(p, Rational(0));
    case Region::V:
        return (b >= half && b < 0 && detail::alpha_lt(p, -b)) || (b > -1 && b < half && detail::alpha_le(p, 1 + b));
    case Region::V_tilde_L:
        return detail::in_v_tilde_left_branch(p, third);
    case Region::V_tilde_R:
        return b >= third && b < 0 && detail::alpha_lt(p, -b);
    case Region::V_L:
        return in_region(Region::V, p) && in_region(Region::V_tilde_L, p);
    case Region::V_R:
        return in_region(Region::V, p) && in_region(Region::V_tilde_R, p);
    }
    return false;
}

/// det[Z0(l1), Z0(l2)] / deg^2 for the rotated charge Z0 = -iZ.
inline Rational ku_determinant(const TiltPoint& p, const ThreefoldGeometry& g = quadric())
{
    auto z1 = rotated_charge(lambda1(), p, g);
    auto z2 = rotated_charge(lambda2(), p, g);
    return (z1.re * z2.im - z2.re * z1.im) / (Rational(g.degree) * g.degree);
}

/// chi(O, v) = chi(O(H), v) = 0.
inline bool numerically_orthogonal_to_exceptionals(const ChernCharacter& v, const ThreefoldGeometry& g = quadric())
{
    return euler_pairing(line_bundle(Rational(0)), v, g) == 0 && euler_pairing(line_bundle(Rational(1)), v, g) == 0;
}

/// Base point sigma(alpha0, -1/2) of the orbit; any 0 < alpha0 < 1/2.
inline TiltPoint orbit_base_point(const Rational& alpha0)
{
    if (alpha0 <= 0 || alpha0 >= make_rational(1, 2)) {
        throw std::invalid_argument("alpha0 must lie in (0, 1/2)");
    }
    return {alpha0 * alpha0, make_rational(-1, 2)};
}

} // namespace tiltwall
