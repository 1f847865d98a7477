#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "lagfib/error.hpp"

namespace lagfib {

using Integer = boost::multiprecision::cpp_int;

// Always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

// num/den with the sign moved to the numerator.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer ipow(Integer base, unsigned exp) {
    Integer result = 1;
    while (exp != 0) {
        if (exp & 1u) result *= base;
        exp >>= 1;
        if (exp != 0) base *= base;
    }
    return result;
}

inline Rational ipow(const Rational& base, unsigned exp) {
    return Rational(ipow(numerator_of(base), exp), ipow(denominator_of(base), exp));
}

// Floor of the n-th root of a non-negative integer, plus whether it is exact.
inline std::pair<Integer, bool> integer_nth_root(const Integer& x, unsigned n) {
    if (x < 0) throw std::invalid_argument("integer_nth_root: negative radicand");
    if (n == 0) throw std::invalid_argument("integer_nth_root: zeroth root");
    if (x < 2 || n == 1) return {x, true};

    // Start above the root and run Newton's iteration downwards; it decreases
    // monotonically until it reaches floor(x^(1/n)).
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    Integer guess = Integer(1) << ((bits + n - 1) / n);
    for (;;) {
        Integer next = ((n - 1) * guess + x / ipow(guess, n - 1)) / n;
        if (next >= guess) break;
        guess = std::move(next);
    }
    return {guess, ipow(guess, n) == x};
}

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c < '0' || c > '9') throw ParseError("malformed rational '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

} // namespace detail

// Accepts "p" or "p/q" with optional sign on p; q must be non-zero.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(text, text));
    const Integer num = detail::parse_integer(text.substr(0, slash), text);
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    const Integer den = detail::parse_integer(den_text, text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

} // namespace lagfib
