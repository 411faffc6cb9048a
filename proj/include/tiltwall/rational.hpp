#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tiltwall {

namespace mp = boost::multiprecision;

// Expression templates are disabled so that `auto` always yields a value.
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(long long p, long long q = 1) { return Rational(Integer(p), Integer(q)); }

inline Integer floor_of(const Rational& x)
{
    Integer n = mp::numerator(x);
    Integer d = mp::denominator(x);
    Integer q = n / d;
    if (n % d != 0 && n < 0) {
        --q;
    }
    return q;
}

inline Integer ceil_of(const Rational& x) { return -floor_of(-x); }

inline bool is_integer(const Rational& x) { return mp::denominator(x) == 1; }

inline int sign_of(const Rational& x) { return x.sign(); }

/// Exact square root when `x` is the square of a rational, otherwise false.
inline bool rational_sqrt(const Rational& x, Rational& root)
{
    if (x < 0) {
        return false;
    }
    Integer n = mp::numerator(x);
    Integer d = mp::denominator(x);
    Integer rn = mp::sqrt(n);
    Integer rd = mp::sqrt(d);
    if (rn * rn != n || rd * rd != d) {
        return false;
    }
    root = Rational(rn, rd);
    return true;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& x)
{
    if (is_integer(x)) {
        return mp::numerator(x).str();
    }
    return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

inline Integer parse_integer(std::string_view s, std::string_view whole)
{
    s = trim(s);
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    if (i == s.size()) {
        throw parse_error("malformed rational '" + std::string(whole) + "'");
    }
    Integer value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw parse_error("malformed rational '" + std::string(whole) + "'");
        }
        value = value * 10 + (s[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

} // namespace detail

/// Parses "p", "-p", "p/q" (integers of arbitrary size).
inline Rational parse_rational(std::string_view text)
{
    auto s = detail::trim(text);
    if (s.empty()) {
        throw parse_error("empty rational literal");
    }
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(detail::parse_integer(s, text));
    }
    Integer num = detail::parse_integer(s.substr(0, slash), text);
    Integer den = detail::parse_integer(s.substr(slash + 1), text);
    if (den == 0) {
        throw parse_error("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

} // namespace tiltwall
