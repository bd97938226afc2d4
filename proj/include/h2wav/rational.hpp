#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace h2wav {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. Denominators in the truncated origin constructions grow like
// 2^(N(N+1)/2), so fixed-width integers are not an option.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;  // truncates toward zero
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rational_floor(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

inline BigInt rational_ceil(const Rational& q) {
    return -rational_floor(-q);
}

// 2^n for any integer n, as an exact rational.
inline Rational pow2(long n) {
    if (n >= 0) return Rational(BigInt(1) << n, 1);
    return Rational(1, BigInt(1) << (-n));
}

inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// Strict "p" / "p/q" parser; anything else is a format error.
inline Rational parse_rational(const std::string& s) {
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) throw std::invalid_argument("bad rational: '" + s + "'");
        return Rational(BigInt(s), 1);
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("bad rational: '" + s + "'");
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("bad rational (zero denominator): '" + s + "'");
    return Rational(BigInt(num), d);
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

}  // namespace h2wav
