#pragma once

#include "h2wav/rational.hpp"

#include <compare>
#include <numbers>
#include <ostream>

namespace h2wav {

// A real number q*pi with exact rational q. Every endpoint in every set this
// library manipulates is such a multiple, which is what keeps the whole
// tiling/verification layer free of rounding.
class PiScalar {
public:
    PiScalar() = default;
    explicit PiScalar(Rational coeff) : coeff_(std::move(coeff)) {}
    PiScalar(long long num, long long den) : coeff_(num, den) {}

    static PiScalar of(long long num, long long den = 1) { return PiScalar(Rational(num, den)); }
    static PiScalar zero() { return PiScalar(); }

    const Rational& coeff() const { return coeff_; }
    bool is_zero() const { return coeff_ == 0; }

    PiScalar operator+(const PiScalar& o) const { return PiScalar(coeff_ + o.coeff_); }
    PiScalar operator-(const PiScalar& o) const { return PiScalar(coeff_ - o.coeff_); }
    PiScalar operator-() const { return PiScalar(-coeff_); }
    PiScalar& operator+=(const PiScalar& o) { coeff_ += o.coeff_; return *this; }
    PiScalar& operator-=(const PiScalar& o) { coeff_ -= o.coeff_; return *this; }

    // Scaling by an exact rational factor.
    PiScalar scaled(const Rational& f) const { return PiScalar(coeff_ * f); }

    bool operator==(const PiScalar& o) const { return coeff_ == o.coeff_; }
    // pi > 0, so the order of q*pi is the order of q.
    std::strong_ordering operator<=>(const PiScalar& o) const {
        if (coeff_ < o.coeff_) return std::strong_ordering::less;
        if (coeff_ > o.coeff_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const { return h2wav::to_double(coeff_) * std::numbers::pi; }

    // "p/q" (lowest terms), the form used inside interval JSON.
    std::string coeff_string() const { return rational_to_string(coeff_); }
    // "p/q*pi", the standalone form used for measures and defects.
    std::string to_string() const { return coeff_string() + "*pi"; }

    // Accepts either form.
    static PiScalar parse(const std::string& s) {
        constexpr std::string_view suffix = "*pi";
        if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0)
            return PiScalar(parse_rational(s.substr(0, s.size() - suffix.size())));
        return PiScalar(parse_rational(s));
    }

private:
    Rational coeff_{0};
};

inline std::ostream& operator<<(std::ostream& os, const PiScalar& p) {
    return os << p.to_string();
}

}  // namespace h2wav
