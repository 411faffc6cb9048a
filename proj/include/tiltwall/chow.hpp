#pragma once

// Numerical Chow ring of a Picard-rank-one threefold. Classes are written in
// powers of the hyperplane class H: ch = c0 + c1 H + c2 H^2 + c3 H^3.

#include <tiltwall/rational.hpp>

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace tiltwall {

struct ThreefoldGeometry {
    std::string name = "Q";
    int degree = 2;                     // H^3
    std::array<Rational, 3> todd{};     // coefficients of H, H^2, H^3 in td(X)
    int ch2_denominator = 2;
    int ch3_denominator = 12;
    int canonical_twist = -3;           // omega_X = O(k H)

    void validate() const
    {
        if (degree < 1) {
            throw std::invalid_argument("geometry degree must be positive");
        }
        if (ch2_denominator < 1 || ch3_denominator < 1) {
            throw std::invalid_argument("lattice denominators must be positive");
        }
    }
};

/// The smooth quadric threefold.
inline const ThreefoldGeometry& quadric()
{
    static const ThreefoldGeometry q{
        "Q", 2, {make_rational(3, 2), make_rational(13, 12), make_rational(1, 2)}, 2, 12, -3};
    return q;
}

struct ChernCharacter {
    Rational c0, c1, c2, c3;

    ChernCharacter() = default;
    ChernCharacter(Rational r, Rational d1, Rational d2, Rational d3)
        : c0(std::move(r)), c1(std::move(d1)), c2(std::move(d2)), c3(std::move(d3))
    {
    }

    const Rational& operator[](std::size_t i) const
    {
        switch (i) {
        case 0: return c0;
        case 1: return c1;
        case 2: return c2;
        default: return c3;
        }
    }

    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0 && c3 == 0; }

    /// The class with ch3 dropped.
    ChernCharacter truncated() const { return {c0, c1, c2, Rational(0)}; }

    ChernCharacter& operator+=(const ChernCharacter& o)
    {
        c0 += o.c0;
        c1 += o.c1;
        c2 += o.c2;
        c3 += o.c3;
        return *this;
    }
    ChernCharacter& operator-=(const ChernCharacter& o)
    {
        c0 -= o.c0;
        c1 -= o.c1;
        c2 -= o.c2;
        c3 -= o.c3;
        return *this;
    }

    friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
    friend ChernCharacter operator-(ChernCharacter a, const ChernCharacter& b) { return a -= b; }
    friend ChernCharacter operator-(const ChernCharacter& a) { return {-a.c0, -a.c1, -a.c2, -a.c3}; }
    friend ChernCharacter operator*(const Rational& k, const ChernCharacter& a)
    {
        return {k * a.c0, k * a.c1, k * a.c2, k * a.c3};
    }
    friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;

    /// Lexicographic on (c0, c1, c2, c3); used for canonical output order.
    friend bool operator<(const ChernCharacter& a, const ChernCharacter& b)
    {
        for (std::size_t i = 0; i < 4; ++i) {
            if (a[i] != b[i]) {
                return a[i] < b[i];
            }
        }
        return false;
    }
};

inline bool lattice_valid(const ChernCharacter& v, const ThreefoldGeometry& g = quadric())
{
    return is_integer(v.c0) && is_integer(v.c1) && is_integer(v.c2 * g.ch2_denominator)
        && is_integer(v.c3 * g.ch3_denominator);
}

/// ch(O(kH)) = e^{kH}.
inline ChernCharacter line_bundle(const Rational& k)
{
    return {Rational(1), k, k * k / 2, k * k * k / 6};
}

/// e^{kH} * v.
inline ChernCharacter twist(const ChernCharacter& v, const Rational& k)
{
    Rational k2 = k * k / 2;
    Rational k3 = k * k * k / 6;
    return {v.c0, v.c1 + k * v.c0, v.c2 + k * v.c1 + k2 * v.c0, v.c3 + k * v.c2 + k2 * v.c1 + k3 * v.c0};
}

inline ChernCharacter dual(const ChernCharacter& v) { return {v.c0, -v.c1, v.c2, -v.c3}; }

/// Graded product, truncated in degree > 3.
inline ChernCharacter product(const ChernCharacter& a, const ChernCharacter& b)
{
    return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0,
        a.c0 * b.c3 + a.c1 * b.c2 + a.c2 * b.c1 + a.c3 * b.c0};
}

/// mu_H, where rank zero has slope +infinity.
class Slope {
public:
    static Slope infinite() { return Slope(); }
    static Slope finite(Rational v) { return Slope(std::move(v)); }

    bool is_infinite() const { return infinite_; }
    const Rational& value() const
    {
        if (infinite_) {
            throw std::logic_error("slope is +infinity");
        }
        return value_;
    }

    friend bool operator==(const Slope& a, const Slope& b)
    {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator<(const Slope& a, const Slope& b)
    {
        if (a.infinite_) {
            return false;
        }
        return b.infinite_ || a.value_ < b.value_;
    }

    std::string str() const { return infinite_ ? std::string("+inf") : to_string(value_); }

private:
    Slope() = default;
    explicit Slope(Rational v) : infinite_(false), value_(std::move(v)) {}
    bool infinite_ = true;
    Rational value_;
};

inline Slope mu_H(const ChernCharacter& v)
{
    if (v.c0 == 0) {
        return Slope::infinite();
    }
    return Slope::finite(v.c1 / v.c0);
}

/// Hirzebruch-Riemann-Roch: chi = H^3 (c3 + t1 c2 + t2 c1 + t3 c0).
inline Rational euler_char(const ChernCharacter& v, const ThreefoldGeometry& g = quadric())
{
    return g.degree * (v.c3 + g.todd[0] * v.c2 + g.todd[1] * v.c1 + g.todd[2] * v.c0);
}

/// chi(v, w) = chi(v^dual * w).
inline Rational euler_pairing(const ChernCharacter& v, const ChernCharacter& w, const ThreefoldGeometry& g = quadric())
{
    return euler_char(product(dual(v), w), g);
}

/// Polynomial in m with rational coefficients; coeffs[i] multiplies m^i.
struct HilbertPolynomial {
    std::array<Rational, 4> coeffs{};

    /// -1 for the zero polynomial.
    int degree() const
    {
        for (int i = 3; i >= 0; --i) {
            if (coeffs[static_cast<std::size_t>(i)] != 0) {
                return i;
            }
        }
        return -1;
    }

    Rational operator()(const Rational& m) const
    {
        Rational acc = 0;
        for (int i = 3; i >= 0; --i) {
            acc = acc * m + coeffs[static_cast<std::size_t>(i)];
        }
        return acc;
    }

    /// p_2: the polynomial with the constant term dropped.
    HilbertPolynomial truncated() const
    {
        HilbertPolynomial p = *this;
        p.coeffs[0] = 0;
        return p;
    }

    friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

    std::string str() const
    {
        std::string out;
        for (int i = 3; i >= 0; --i) {
            const Rational& c = coeffs[static_cast<std::size_t>(i)];
            if (c == 0) {
                continue;
            }
            Rational mag = c < 0 ? Rational(-c) : c;
            if (out.empty()) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (i == 0 || mag != 1) {
                out += to_string(mag);
            }
            if (i >= 1) {
                out += "m";
            }
            if (i >= 2) {
                out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }
};

/// m -> chi(v(mH)), expanded symbolically.
inline HilbertPolynomial hilbert_polynomial(const ChernCharacter& v, const ThreefoldGeometry& g = quadric())
{
    const auto& t = g.todd;
    HilbertPolynomial p;
    p.coeffs[0] = euler_char(v, g);
    p.coeffs[1] = g.degree * (v.c2 + t[0] * v.c1 + t[1] * v.c0);
    p.coeffs[2] = g.degree * (v.c1 + t[0] * v.c0) / 2;
    p.coeffs[3] = g.degree * v.c0 / 6;
    return p;
}

enum class Order { precedes, succeeds, equivalent };

inline const char* to_string(Order o)
{
    switch (o) {
    case Order::precedes: return "<";
    case Order::succeeds: return ">";
    default: return "~";
    }
}

/// The Gieseker pre-order: nonzero < 0, higher degree < lower degree, and equal
/// degrees compared through the leading-coefficient-normalised polynomials for m >> 0.
inline Order gieseker_compare(const HilbertPolynomial& f, const HilbertPolynomial& g)
{
    int df = f.degree();
    int dg = g.degree();
    if (df < 0 || dg < 0) {
        if (df < 0 && dg < 0) {
            return Order::equivalent;
        }
        return df < 0 ? Order::succeeds : Order::precedes;
    }
    if (df != dg) {
        return df > dg ? Order::precedes : Order::succeeds;
    }
    const Rational& lf = f.coeffs[static_cast<std::size_t>(df)];
    const Rational& lg = g.coeffs[static_cast<std::size_t>(dg)];
    for (int i = df - 1; i >= 0; --i) {
        Rational a = f.coeffs[static_cast<std::size_t>(i)] / lf;
        Rational b = g.coeffs[static_cast<std::size_t>(i)] / lg;
        if (a != b) {
            return a < b ? Order::precedes : Order::succeeds;
        }
    }
    return Order::equivalent;
}

/// Two-term Gieseker comparison on p_2 (constant term dropped).
inline Order gieseker_compare_truncated(const HilbertPolynomial& f, const HilbertPolynomial& g)
{
    return gieseker_compare(f.truncated(), g.truncated());
}

// ---------------------------------------------------------------------------
// Text forms.

inline std::string format_class(const ChernCharacter& v)
{
    return "(" + to_string(v.c0) + ", " + to_string(v.c1) + ", " + to_string(v.c2) + ", " + to_string(v.c3) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const ChernCharacter& v) { return os << format_class(v); }

/// Parses "(c0, c1, c2, c3)". A three-entry literal "(c0, c1, c2)" leaves c3 = 0.
inline ChernCharacter parse_class(std::string_view text)
{
    auto s = detail::trim(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
        throw parse_error("class literal must look like (c0, c1, c2, c3): '" + std::string(text) + "'");
    }
    s = s.substr(1, s.size() - 2);
    std::vector<Rational> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        parts.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (parts.size() != 3 && parts.size() != 4) {
        throw parse_error("class literal needs 3 or 4 entries: '" + std::string(text) + "'");
    }
    parts.resize(4, Rational(0));
    return {parts[0], parts[1], parts[2], parts[3]};
}

/// Key-value geometry description. Recognised keys: name, degree, todd (three
/// rationals), ch2_denominator, ch3_denominator, canonical_twist. '#' starts a comment.
inline ThreefoldGeometry parse_geometry(std::istream& in)
{
    ThreefoldGeometry g;
    g.todd = {Rational(0), Rational(0), Rational(0)};
    bool seen_degree = false, seen_todd = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        auto body = detail::trim(line);
        if (body.empty()) {
            continue;
        }
        auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw parse_error("geometry line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string key(detail::trim(body.substr(0, eq)));
        std::string value(detail::trim(body.substr(eq + 1)));
        auto as_int = [&](const std::string& v) {
            Rational r = parse_rational(v);
            if (!is_integer(r)) {
                throw parse_error("geometry key '" + key + "' needs an integer");
            }
            return static_cast<int>(mp::numerator(r));
        };
        if (key == "name") {
            g.name = value;
        } else if (key == "degree") {
            g.degree = as_int(value);
            seen_degree = true;
        } else if (key == "todd") {
            std::istringstream ts(value);
            std::string tok;
            std::size_t i = 0;
            while (ts >> tok) {
                if (i >= 3) {
                    throw parse_error("todd expects three rationals");
                }
                g.todd[i++] = parse_rational(tok);
            }
            if (i != 3) {
                throw parse_error("todd expects three rationals");
            }
            seen_todd = true;
        } else if (key == "ch2_denominator") {
            g.ch2_denominator = as_int(value);
        } else if (key == "ch3_denominator") {
            g.ch3_denominator = as_int(value);
        } else if (key == "canonical_twist") {
            g.canonical_twist = as_int(value);
        } else {
            throw parse_error("unknown geometry key '" + key + "'");
        }
    }
    if (!seen_degree || !seen_todd) {
        throw parse_error("geometry needs at least 'degree' and 'todd'");
    }
    g.validate();
    return g;
}

inline ThreefoldGeometry load_geometry(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open geometry file '" + path + "'");
    }
    return parse_geometry(in);
}

} // namespace tiltwall
