#pragma once

#include "h2wav/rational.hpp"

#include <cmath>
#include <ostream>

namespace h2wav {

// Exact element of the field Q(sqrt 2), stored as a + b*sqrt2 with rational
// a, b. The amplitudes of every step wavelet here live in {0, 1/sqrt2,
// -1/sqrt2, 1}; products and squares of those stay inside this field, so all
// verification arithmetic is closed and exact.
class Q2Value {
public:
    Q2Value() = default;
    Q2Value(long long a) : a_(a) {}  // NOLINT: rationals embed
    explicit Q2Value(Rational a) : a_(std::move(a)) {}
    Q2Value(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Q2Value sqrt2() { return Q2Value(0, 1); }
    // 1/sqrt2 == sqrt2 / 2
    static Q2Value inv_sqrt2() { return Q2Value(Rational(0), Rational(1, 2)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Q2Value operator+(const Q2Value& o) const { return {a_ + o.a_, b_ + o.b_}; }
    Q2Value operator-(const Q2Value& o) const { return {a_ - o.a_, b_ - o.b_}; }
    Q2Value operator-() const { return {-a_, -b_}; }
    Q2Value operator*(const Q2Value& o) const {
        return {a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
    }
    Q2Value& operator+=(const Q2Value& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Q2Value& operator-=(const Q2Value& o) { a_ -= o.a_; b_ -= o.b_; return *this; }

    // (a + b*sqrt2)^(-1) = (a - b*sqrt2) / (a^2 - 2 b^2); the norm a^2 - 2b^2
    // vanishes only at 0 because sqrt2 is irrational.
    Q2Value inverse() const {
        Rational n = a_ * a_ - 2 * b_ * b_;
        if (n == 0) throw std::domain_error("Q2Value: division by zero");
        return {a_ / n, -b_ / n};
    }
    Q2Value operator/(const Q2Value& o) const { return *this * o.inverse(); }

    // |x|^2 for the real embedding; amplitudes in scope are real, so this is
    // just the square.
    Q2Value abs_sq() const { return *this * *this; }

    // True iff |x| == 1 exactly, i.e. x == +-1.
    bool is_unimodular() const { return b_ == 0 && (a_ == 1 || a_ == -1); }

    bool operator==(const Q2Value& o) const = default;

    double to_double() const { return h2wav::to_double(a_) + h2wav::to_double(b_) * std::sqrt(2.0); }

    // "a + b*sqrt2" / "a - b*sqrt2", both parts in lowest terms.
    std::string to_string() const {
        if (b_ < 0) return rational_to_string(a_) + " - " + rational_to_string(-b_) + "*sqrt2";
        return rational_to_string(a_) + " + " + rational_to_string(b_) + "*sqrt2";
    }

    static Q2Value parse(const std::string& s) {
        // The sign separator is never at position 0 (a leading '-' belongs to a).
        for (std::size_t i = 1; i + 2 < s.size(); ++i) {
            if (s[i] != ' ' || (s[i + 1] != '+' && s[i + 1] != '-') || s[i + 2] != ' ') continue;
            std::string left = s.substr(0, i);
            std::string right = s.substr(i + 3);
            constexpr std::string_view suffix = "*sqrt2";
            if (right.size() <= suffix.size() ||
                right.compare(right.size() - suffix.size(), suffix.size(), suffix) != 0)
                throw std::invalid_argument("bad Q2 value: '" + s + "'");
            Rational b = parse_rational(right.substr(0, right.size() - suffix.size()));
            if (s[i + 1] == '-') b = -b;
            return {parse_rational(left), b};
        }
        throw std::invalid_argument("bad Q2 value: '" + s + "'");
    }

private:
    Rational a_{0};
    Rational b_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Q2Value& v) {
    return os << v.to_string();
}

}  // namespace h2wav
