#include "h2wav/characterize.hpp"
#include "h2wav/constructions.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace h2wav;

namespace {

PiScalar P(long n, long d = 1) { return PiScalar::of(n, d); }
Interval iv(long an, long ad, long bn, long bd) { return {P(an, ad), P(bn, bd)}; }
const Q2Value h = Q2Value::inv_sqrt2();

// psi_1 with the sign flipped on its top band: breaks the q=1 shift sum but
// nothing else.
StepFunction perturbed_psi_1() {
    std::vector<StepFunction::Piece> pieces;
    StepFunction base = make_psi_r(1);
    for (const auto& p : base.pieces())
        pieces.push_back({p.where, p.where.lo == P(28, 3) ? h : p.value});
    return StepFunction::from_pieces(std::move(pieces));
}

const StepFunction kOne = StepFunction::from_pieces({{iv(2, 1, 4, 1), 1}});

}  // namespace

TEST_CASE("calderon sum") {
    for (int r = 1; r <= 6; ++r) CHECK(calderon_sum(make_psi_r(r)) == kOne);
    CHECK(calderon_sum(indicator_wavelet(shannon_set())) == kOne);
    CHECK(calderon_sum(make_psi_xy(P(3, 2), P(8, 5))) == kOne);

    SUBCASE("evaluating over an alternative fundamental domain agrees") {
        for (int r = 1; r <= 4; ++r) {
            KrParts kr = make_kr(r);
            StepFunction on_kr = calderon_sum_on(make_psi_r(r), kr.set);
            CHECK(on_kr == StepFunction::from_pieces({{kr.low, 1}, {kr.high, 1}}));
        }
    }

    SUBCASE("the sum is invariant under doubling the domain") {
        for (const StepFunction& f : {make_psi_r(1), make_psi_r(3),
                                      make_psi_xy(P(3, 2), P(8, 5)),
                                      indicator_wavelet(make_krk(2, 4))}) {
            StepFunction base = calderon_sum_on(f, shannon_set());
            StepFunction doubled = calderon_sum_on(f, dilate(shannon_set(), 1));
            CHECK(doubled == test::dilate_fn(base, 1));
        }
    }

    SUBCASE("a deficient support shows up as a non-unit sum") {
        StepFunction half = StepFunction::from_pieces({{iv(2, 1, 3, 1), 1}});
        StepFunction rho = calderon_sum(half);
        CHECK(rho != kOne);
    }

    SUBCASE("support must be positive") {
        CHECK_THROWS_AS(calderon_sum(StepFunction::from_pieces({{iv(-1, 1, 1, 1), 1}})),
                        std::domain_error);
        CHECK_THROWS_AS(calderon_sum(StepFunction()), std::domain_error);
    }
}

TEST_CASE("relevant odd shifts") {
    for (int r = 1; r <= 4; ++r) {
        auto qs = relevant_q(make_psi_r(r));
        REQUIRE(qs.size() == 1);
        CHECK(qs.at(1) == std::vector<long>{r, r + 1});
    }
    CHECK(relevant_q(indicator_wavelet(shannon_set())).empty());
    auto qs0 = relevant_q(make_psi_xy(P(3, 2), P(8, 5)));
    REQUIRE(qs0.count(1) == 1);
    CHECK(qs0.at(1) == std::vector<long>{0, 1});
}

TEST_CASE("odd shift sums") {
    SUBCASE("they vanish for the r-family, with a real cancellation inside") {
        for (int r = 1; r <= 4; ++r) {
            StepFunction f = make_psi_r(r);
            CHECK(tq_sum(f, 1).is_zero());
            // the cancellation is not vacuous: the contributing scales exist
            CHECK(relevant_q(f).at(1).size() == 2);
        }
    }
    SUBCASE("no overlapping terms means an identically zero sum") {
        CHECK(tq_sum(indicator_wavelet(shannon_set()), 1).is_zero());
        CHECK(tq_sum(make_psi_r(1), 3).is_zero());
        CHECK(tq_sum(make_psi_r(1), -5).is_zero());
    }
    SUBCASE("even q is a domain error") {
        CHECK_THROWS_AS(tq_sum(make_psi_r(1), 2), std::domain_error);
        CHECK_THROWS_AS(tq_sum(make_psi_r(1), 0), std::domain_error);
    }
    SUBCASE("involution: the negative sum is the positive one dragged by 2q pi") {
        for (int r = 1; r <= 4; ++r) {
            StepFunction f = make_psi_r(r);
            for (long long q : {1LL, 3LL, 5LL}) {
                CHECK(tq_sum(f, -q) == test::shift_fn(tq_sum(f, q), P(2 * q)));
            }
            // also exercised where the sums are nonzero
            StepFunction broken = perturbed_psi_1();
            CHECK(tq_sum(broken, -1) == test::shift_fn(tq_sum(broken, 1), P(2)));
        }
    }
    SUBCASE("brute scan finds nothing outside the candidate set") {
        for (const StepFunction& f : {make_psi_r(1), make_psi_r(2), make_psi_r(3),
                                      make_psi_r(4), make_psi_xy(P(3, 2), P(8, 5))}) {
            Rational extent = f.support().max().coeff() - f.support().min().coeff();
            long long q_max = rational_ceil(extent / 2).convert_to<long long>() + 1;
            for (long long q = 1; q <= q_max; q += 2) CHECK(tq_sum(f, q).is_zero());
        }
    }
}

TEST_CASE("wavelet verdict") {
    SUBCASE("the r-family passes exactly") {
        for (int r = 1; r <= 8; ++r) {
            WaveletVerdict v = verify_wavelet(make_psi_r(r));
            CHECK(v.pass());
            CHECK(v.norm_ok);
            CHECK(v.rho_ok);
            CHECK(v.tq_ok);
            CHECK(v.norm_sq_pi == Q2Value(2));
            CHECK(v.checked_q == std::set<long long>{1});
        }
    }
    SUBCASE("the odd-class wavelet passes") {
        CHECK(verify_wavelet(make_psi_xy(P(3, 2), P(8, 5))).pass());
        CHECK(verify_wavelet(make_psi_xy(P(5, 4), P(11, 8))).pass());
    }
    SUBCASE("indicator wavelets pass") {
        CHECK(verify_wavelet(indicator_wavelet(shannon_set())).pass());
        CHECK(verify_wavelet(indicator_wavelet(make_kr(5).set)).pass());
    }
    SUBCASE("the sign flip breaks exactly the q=1 sum") {
        WaveletVerdict v = verify_wavelet(perturbed_psi_1());
        CHECK(!v.pass());
        CHECK(v.norm_ok);   // squares unchanged
        CHECK(v.rho_ok);    // squares unchanged
        CHECK(!v.tq_ok);
        REQUIRE(v.failing_q.has_value());
        CHECK(*v.failing_q == 1);
        REQUIRE(v.witness.has_value());
        // the cancellation 1/2 + (-1/2) becomes 1/2 + 1/2 = 1 on 2^-2 I_1
        CHECK(v.witness->where == iv(1, 3, 1, 2));
        CHECK(v.witness->value == Q2Value(1));
    }
    SUBCASE("norm and calderon failures are reported") {
        StepFunction half = StepFunction::from_pieces({{iv(2, 1, 3, 1), 1}});
        WaveletVerdict v = verify_wavelet(half);
        CHECK(!v.norm_ok);
        CHECK(!v.rho_ok);
        CHECK(v.witness.has_value());
        StepFunction negative = StepFunction::from_pieces({{iv(-2, 1, 0, 1), 1}});
        WaveletVerdict vn = verify_wavelet(negative);
        CHECK(!vn.pass());
        CHECK(!vn.rho_ok);
    }
}

TEST_CASE("msf detection") {
    CHECK(is_msf(indicator_wavelet(make_kr(1).set)));
    CHECK(is_msf(indicator_wavelet(shannon_set())));
    CHECK(!is_msf(make_psi_r(1)));
    CHECK(!is_msf(make_psi_xy(P(3, 2), P(8, 5))));
}

TEST_CASE("classification") {
    for (int r = 1; r <= 8; ++r) CHECK(classify(make_psi_r(r)) == ClassLabel::of(r));
    CHECK(classify(make_psi_xy(P(3, 2), P(8, 5))) == ClassLabel::of(0));
    CHECK(classify(indicator_wavelet(shannon_set())) == ClassLabel::msf());
    CHECK(classify(indicator_wavelet(make_krk(3, 5))) == ClassLabel::msf());
    CHECK_THROWS_AS(classify(StepFunction::from_pieces({{iv(2, 1, 3, 1), 1}})),
                    std::invalid_argument);
    CHECK(ClassLabel::of(3).to_string() == "M_3");
    CHECK(ClassLabel::msf().to_string() == "M_inf");

    SUBCASE("the label matches the divisibility ladder") {
        for (int r = 1; r <= 6; ++r) {
            StepFunction f = make_psi_r(r);
            ClassLabel label = classify(f);
            REQUIRE(label.r.has_value());
            SupportProfile sp = support_profile(f);
            bool some_odd_quotient = false;
            for (long long k : sp.shift_indices) {
                if (k == 0) continue;
                CHECK(k % (1LL << *label.r) == 0);
                if ((k / (1LL << *label.r)) % 2 != 0) some_odd_quotient = true;
            }
            CHECK(some_odd_quotient);
        }
    }
}
