#include "h2wav/constructions.hpp"

#include <stdexcept>
#include <string>

namespace h2wav {

namespace {

Rational pow2i(int n) { return pow2(static_cast<long>(n)); }

void require_r(int r) {
    if (r < 1) throw std::invalid_argument("r must be a positive integer, got " + std::to_string(r));
}

}  // namespace

PiScalar t_param(int r) {
    require_r(r);
    Rational p = pow2i(r + 1);
    return PiScalar(p / (p - 1));
}

IntervalSet make_krk(int r, long long k) {
    require_r(r);
    Rational pr = pow2i(r), pr1 = pow2i(r + 1);
    if (k < 1 || Rational(k, 1) >= 2 * (pr - 1))
        throw std::invalid_argument("k must satisfy 1 <= k < 2(2^r - 1), got k=" +
                                    std::to_string(k) + " at r=" + std::to_string(r));
    Rational kk(k, 1);
    Interval a{PiScalar(2 * (kk + 1) / (pr1 - 1)), PiScalar(2 * kk / (pr - 1))};
    Interval b{PiScalar(pr1 * kk / (pr - 1)), PiScalar(4 * pr * (kk + 1) / (pr1 - 1))};
    return IntervalSet({a, b});
}

KrParts make_kr(int r) {
    require_r(r);
    Rational p = pow2i(r + 1);
    PiScalar t = t_param(r);
    Interval low{t, PiScalar::of(2)};
    Interval high{PiScalar(p), PiScalar(p * t.coeff())};
    return {IntervalSet({low, high}), low, high};
}

KxyParts make_kxy_parts(const PiScalar& x, const PiScalar& y) {
    const PiScalar pi = PiScalar::of(1);
    const PiScalar two_pi = PiScalar::of(2);
    if (!(pi < x && x < y && y < two_pi && two_pi + x > y + y))
        throw std::invalid_argument(
            "(x, y) must satisfy pi < x < y < 2pi and x + 2pi > 2y; got x=" +
            x.to_string() + ", y=" + y.to_string());
    KxyParts parts;
    parts.bands = {
        Interval{x, y},
        Interval{two_pi, x.scaled(2)},
        Interval{y.scaled(2), x + two_pi},
        Interval{y + two_pi, PiScalar::of(4)},
        Interval{x.scaled(2) + PiScalar::of(4), y.scaled(2) + PiScalar::of(4)},
    };
    parts.set = IntervalSet(std::vector<Interval>(parts.bands.begin(), parts.bands.end()));
    return parts;
}

IntervalSet make_kxy(const PiScalar& x, const PiScalar& y) {
    return make_kxy_parts(x, y).set;
}

KrepsBuild make_kreps(int r, const PiScalar& eps, int depth) {
    require_r(r);
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    Rational pr1 = pow2i(r + 1);
    PiScalar bound{(pr1 / 2 - 1) / (pr1 - 1)};
    if (!(PiScalar::zero() < eps && eps < bound))
        throw std::invalid_argument("eps must satisfy 0 < eps < (2^r - 1)/(2^(r+1) - 1) * pi; got " +
                                    eps.to_string());

    KrParts kr = make_kr(r);
    PiScalar t = t_param(r);
    PiScalar half_t = t.scaled(Rational(1, 2));
    PiScalar shift_up{pr1};  // 2^(r+1) pi, the gap between the two bands

    KrepsBuild b;
    b.depth = depth;
    b.seeds = {
        Interval{half_t + eps.scaled(1 / pr1), half_t + eps},
        Interval{t + eps.scaled(2), PiScalar::of(2)},
        Interval{kr.high.hi, kr.high.hi + eps.scaled(2)},
    };

    Interval carved = b.seeds[0].shifted(shift_up);
    for (int n = 0; n <= depth; ++n) {
        b.removed.push_back(carved);
        Interval down = carved.scaled(pow2(-(n + r + 2)));
        b.near_origin.push_back(down);
        carved = down.shifted(shift_up);
    }
    // `carved` is now the first band the truncation leaves in place; its
    // measure is the exact translation overlap of the truncated set.
    b.tail_defect = carved.length();

    IntervalSet rest = set_subtract(IntervalSet::of(kr.high), IntervalSet(b.removed));
    std::vector<Interval> all = rest.pieces();
    all.insert(all.end(), b.near_origin.begin(), b.near_origin.end());
    all.insert(all.end(), b.seeds.begin(), b.seeds.end());
    b.set = IntervalSet(std::move(all));
    return b;
}

IntervalSet shannon_set() {
    return IntervalSet::of({PiScalar::of(2), PiScalar::of(4)});
}

}  // namespace h2wav
