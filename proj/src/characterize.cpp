#include "h2wav/characterize.hpp"

#include "h2wav/interval_set.hpp"

#include <stdexcept>

namespace h2wav {

namespace {

void require_support(const StepFunction& f, const char* who) {
    if (f.is_zero()) throw std::domain_error(std::string(who) + ": empty support");
    if (!(PiScalar::zero() < f.support().min()))
        throw std::domain_error(std::string(who) + ": support must lie in (0, inf)");
}

// Largest j with v * 2^-j > bound (v, bound > 0).
long largest_scale_above(Rational v, const Rational& bound) {
    long j = 0;
    while (v / 2 > bound) { v /= 2; ++j; }
    while (v <= bound) { v *= 2; --j; }
    return j;
}

// Smallest j with v * 2^-j < bound (v, bound > 0).
long smallest_scale_below(Rational v, const Rational& bound) {
    long j = 0;
    while (v >= bound) { v /= 2; ++j; }
    while (v * 2 < bound) { v *= 2; --j; }
    return j;
}

// Contributions of |f(2^j .)|^2 restricted to one interval of the domain.
void scaled_energy_contributions(const StepFunction& f, const Interval& window,
                                 std::vector<StepFunction::Piece>& out) {
    for (const auto& p : f.pieces()) {
        // 2^-j * piece meets the window iff 2^-j hi > window.lo and
        // 2^-j lo < window.hi
        long j_hi = largest_scale_above(p.where.hi.coeff(), window.lo.coeff());
        long j_lo = smallest_scale_below(p.where.lo.coeff(), window.hi.coeff());
        for (long j = j_lo; j <= j_hi; ++j) {
            if (auto seg = p.where.scaled(pow2(-j)).intersect(window))
                out.push_back({*seg, p.value.abs_sq()});
        }
    }
}

const IntervalSet& dyadic_fundamental_domain() {
    static const IntervalSet octave = IntervalSet::of({PiScalar::of(2), PiScalar::of(4)});
    return octave;
}

}  // namespace

StepFunction calderon_sum_on(const StepFunction& f, const IntervalSet& domain) {
    require_support(f, "calderon_sum");
    std::vector<StepFunction::Piece> contributions;
    for (const auto& window : domain.pieces())
        scaled_energy_contributions(f, window, contributions);
    return StepFunction::accumulate(contributions);
}

StepFunction calderon_sum(const StepFunction& f) {
    return calderon_sum_on(f, dyadic_fundamental_domain());
}

std::map<long long, std::vector<long>> relevant_q(const StepFunction& f) {
    require_support(f, "relevant_q");
    std::map<long long, std::vector<long>> qs;
    const Rational extent = f.support().max().coeff() - f.support().min().coeff();
    for (long j = 0; pow2(j + 1) < extent; ++j) {
        std::set<long long> found;
        for (const auto& a : f.pieces()) {
            for (const auto& b : f.pieces()) {
                // b meets a + 2^(j+1) q pi for odd q > 0
                Rational lo = (b.where.lo.coeff() - a.where.hi.coeff()) / pow2(j + 1);
                Rational hi = (b.where.hi.coeff() - a.where.lo.coeff()) / pow2(j + 1);
                for (BigInt q = rational_floor(lo) + 1; q <= rational_ceil(hi) - 1; ++q)
                    if (q > 0 && q % 2 != 0) found.insert(q.convert_to<long long>());
            }
        }
        for (long long q : found) qs[q].push_back(j);
    }
    return qs;
}

StepFunction tq_sum(const StepFunction& f, long long q) {
    if (q % 2 == 0) throw std::domain_error("tq_sum: q must be odd");
    require_support(f, "tq_sum");
    std::vector<StepFunction::Piece> contributions;
    const Rational extent = f.support().max().coeff() - f.support().min().coeff();
    const Rational qabs(q < 0 ? -q : q, 1);
    for (long j = 0; pow2(j + 1) * qabs <= extent; ++j) {
        PiScalar shift{pow2(j + 1) * Rational(q, 1)};
        for (const auto& a : f.pieces()) {
            for (const auto& b : f.pieces()) {
                // xi with 2^j xi in a and 2^j xi + 2^(j+1) q pi in b
                if (auto hit = a.where.intersect(b.where.shifted(-shift)))
                    contributions.push_back({hit->scaled(pow2(-j)), a.value * b.value});
            }
        }
    }
    return StepFunction::accumulate(contributions);
}

WaveletVerdict verify_wavelet(const StepFunction& f) {
    WaveletVerdict v;
    v.norm_sq_pi = norm_sq(f);
    v.norm_ok = v.norm_sq_pi == Q2Value(2);

    const bool positive_support = !f.is_zero() && PiScalar::zero() < f.support().min();
    if (!positive_support) {
        if (!f.is_zero()) v.witness = f.pieces().front();
        return v;
    }

    StepFunction rho = calderon_sum(f);
    const StepFunction one = StepFunction::from_pieces(
        {{{PiScalar::of(2), PiScalar::of(4)}, Q2Value(1)}});
    v.rho_ok = rho == one;
    if (!v.rho_ok) {
        std::vector<StepFunction::Piece> diff = rho.pieces();
        for (const auto& p : one.pieces()) diff.push_back({p.where, -p.value});
        StepFunction deviation = StepFunction::accumulate(diff);
        if (!deviation.is_zero()) v.witness = deviation.pieces().front();
    }

    v.tq_ok = true;
    for (const auto& [q, js] : relevant_q(f)) {
        v.checked_q.insert(q);
        StepFunction tq = tq_sum(f, q);
        if (!tq.is_zero() && v.tq_ok) {
            v.tq_ok = false;
            v.failing_q = q;
            if (!v.witness) v.witness = tq.pieces().front();
        }
    }
    return v;
}

bool is_msf(const StepFunction& f) {
    for (const auto& p : f.pieces())
        if (!p.value.is_unimodular()) return false;
    return true;
}

ClassLabel classify(const StepFunction& f) {
    if (!verify_wavelet(f).pass())
        throw std::invalid_argument("classify: input fails the wavelet characterization");
    if (is_msf(f)) return ClassLabel::msf();
    SupportProfile sp = support_profile(f);
    int best = -1;
    for (long long k : sp.shift_indices) {
        if (k == 0) continue;
        int v2 = 0;
        for (long long m = k < 0 ? -k : k; m % 2 == 0; m /= 2) ++v2;
        if (best < 0 || v2 < best) best = v2;
    }
    if (best < 0)
        throw std::runtime_error(
            "classify: non-MSF wavelet with no nonzero support shift; not classified");
    return ClassLabel::of(best);
}

}  // namespace h2wav
