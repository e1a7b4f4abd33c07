#ifndef SCHURRATIO_ARITH_HPP
#define SCHURRATIO_ARITH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace schurratio {

/// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always kept reduced with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

/// "p/q", or just "p" when the denominator is one.
inline std::string to_string(const BigRational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

inline BigInt parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) {
        throw std::invalid_argument("empty integer literal");
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw std::invalid_argument("malformed integer literal '" + s + "'");
        }
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return BigInt(s);
}

/// Accepts "p", "-p", or "p/q" with q != 0.
inline BigRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_integer(text));
    }
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return BigRational(num, den);
}

inline std::int64_t gcd_int(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace schurratio

#endif // SCHURRATIO_ARITH_HPP
