#include "h2wav/pi_scalar.hpp"
#include "h2wav/q2.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace h2wav;

namespace {
Q2Value q2(long an, long ad, long bn, long bd) {
    return Q2Value(Rational(an, ad), Rational(bn, bd));
}
}  // namespace

TEST_CASE("products of sqrt2 amplitudes") {
    const Q2Value h = Q2Value::inv_sqrt2();
    CHECK(h * h == q2(1, 2, 0, 1));
    CHECK(h * (-h) == q2(-1, 2, 0, 1));
    CHECK(q2(3, 5, -7, 2) * Q2Value(0) == Q2Value(0));
    CHECK(Q2Value::sqrt2() * Q2Value::sqrt2() == Q2Value(2));
    CHECK(Q2Value::sqrt2() * h == Q2Value(1));
}

TEST_CASE("squared modulus of real amplitudes") {
    CHECK(Q2Value::inv_sqrt2().abs_sq() == q2(1, 2, 0, 1));
    CHECK(Q2Value(1).abs_sq() == Q2Value(1));
    CHECK((-Q2Value::inv_sqrt2()).abs_sq() == q2(1, 2, 0, 1));
}

TEST_CASE("unimodularity test") {
    CHECK(Q2Value(1).is_unimodular());
    CHECK(Q2Value(-1).is_unimodular());
    CHECK(!Q2Value::inv_sqrt2().is_unimodular());
    CHECK(!Q2Value(0).is_unimodular());
    CHECK(!Q2Value::sqrt2().is_unimodular());
}

TEST_CASE("field arithmetic is exact") {
    std::mt19937 gen(42);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    auto rnd = [&] { return Rational(num(gen), den(gen)); };
    int nontrivial = 0;
    for (int i = 0; i < 300; ++i) {
        Q2Value x{rnd(), rnd()}, y{rnd(), rnd()};
        if (y.is_zero()) continue;
        ++nontrivial;
        CHECK((x * y) / y == x);
        CHECK(y * y.inverse() == Q2Value(1));
        CHECK(x + y - y == x);
    }
    CHECK(nontrivial > 250);
    CHECK_THROWS_AS(Q2Value(0).inverse(), std::domain_error);
}

TEST_CASE("zero only at (0, 0)") {
    CHECK(Q2Value(0).is_zero());
    CHECK(!q2(0, 1, 1, 7).is_zero());
    CHECK(!q2(-3, 4, 0, 1).is_zero());
    // a + b*sqrt2 with a, b rational vanishes only trivially; the inverse of
    // anything nonzero must exist
    CHECK(q2(2, 1, -1, 1).inverse() == q2(1, 1, 1, 2));  // 1/(2 - sqrt2)
}

TEST_CASE("pi-scalar ordering matches rational ordering") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
    for (int i = 0; i < 200; ++i) {
        PiScalar a{Rational(num(gen), den(gen))};
        PiScalar b{Rational(num(gen), den(gen))};
        PiScalar c{Rational(num(gen), den(gen))};
        CHECK((a < b) == (a.coeff() < b.coeff()));
        std::vector<PiScalar> v{a, b, c};
        std::sort(v.begin(), v.end());
        CHECK(v[0] <= v[1]);
        CHECK(v[1] <= v[2]);
        CHECK(v[0] <= v[2]);
    }
    CHECK(PiScalar::of(4, 3) < PiScalar::of(2));
    CHECK(PiScalar::of(-1) < PiScalar::zero());
}

TEST_CASE("serialization round trips are bit-exact") {
    CHECK(PiScalar::of(4, 3).to_string() == "4/3*pi");
    CHECK(PiScalar::of(2).to_string() == "2*pi");
    CHECK(PiScalar::of(2).coeff_string() == "2");
    CHECK(PiScalar::parse("4/3*pi") == PiScalar::of(4, 3));
    CHECK(PiScalar::parse("4/3") == PiScalar::of(4, 3));
    CHECK(PiScalar::parse("-7/2") == PiScalar::of(-7, 2));

    CHECK(Q2Value::inv_sqrt2().to_string() == "0 + 1/2*sqrt2");
    CHECK((-Q2Value::inv_sqrt2()).to_string() == "0 - 1/2*sqrt2");
    CHECK(Q2Value(1).to_string() == "1 + 0*sqrt2");

    std::mt19937 gen(11);
    std::uniform_int_distribution<long> num(-99, 99), den(1, 64);
    for (int i = 0; i < 200; ++i) {
        PiScalar p{Rational(num(gen), den(gen))};
        CHECK(PiScalar::parse(p.to_string()) == p);
        CHECK(PiScalar::parse(p.coeff_string()) == p);
        Q2Value v{Rational(num(gen), den(gen)), Rational(num(gen), den(gen))};
        CHECK(Q2Value::parse(v.to_string()) == v);
    }
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/"), std::invalid_argument);
    CHECK_THROWS_AS(Q2Value::parse("1/2"), std::invalid_argument);
    CHECK_THROWS_AS(Q2Value::parse("1 + sqrt2"), std::invalid_argument);
    CHECK_THROWS_AS(PiScalar::parse("pi"), std::invalid_argument);
}

TEST_CASE("rationals stay in lowest terms through arithmetic") {
    Rational q(4, 6);
    CHECK(numerator(q) == 2);
    CHECK(denominator(q) == 3);
    PiScalar p = PiScalar::of(1, 3) + PiScalar::of(1, 6);
    CHECK(p.coeff_string() == "1/2");
    CHECK(pow2(-3) == Rational(1, 8));
    CHECK(pow2(5) == Rational(32));
    CHECK(rational_floor(Rational(-7, 2)) == -4);
    CHECK(rational_ceil(Rational(-7, 2)) == -3);
    CHECK(rational_floor(Rational(7, 2)) == 3);
    CHECK(rational_ceil(Rational(7, 2)) == 4);
    CHECK(rational_floor(Rational(6, 2)) == 3);
    CHECK(rational_ceil(Rational(6, 2)) == 3);
}
