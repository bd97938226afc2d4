#include "h2wav/wavelets.hpp"

#include "h2wav/constructions.hpp"
#include "h2wav/tiling.hpp"

#include <stdexcept>

namespace h2wav {

namespace {

void add_region(std::vector<StepFunction::Piece>& out, const IntervalSet& region,
                const Q2Value& value) {
    for (const auto& iv : region.pieces()) out.push_back({iv, value});
}

StepFunction assemble(const IntervalSet& half_low, const IntervalSet& low,
                      const IntervalSet& half_low_shifted, const IntervalSet& rest,
                      const IntervalSet& low_shifted) {
    const Q2Value pos = Q2Value::inv_sqrt2();
    std::vector<StepFunction::Piece> pieces;
    add_region(pieces, set_union(set_union(half_low, low), half_low_shifted), pos);
    add_region(pieces, low_shifted, -pos);
    add_region(pieces, rest, Q2Value(1));
    return StepFunction::from_pieces(std::move(pieces));
}

}  // namespace

StepFunction make_psi_r(int r) {
    KrParts kr = make_kr(r);
    IntervalSet low = IntervalSet::of(kr.low);
    PiScalar up{pow2(r + 1)};  // 2^(r+1) pi
    IntervalSet half_low = low.scaled(Rational(1, 2));
    IntervalSet half_low_shifted = half_low.shifted(up);
    IntervalSet rest = set_subtract(IntervalSet::of(kr.high), half_low_shifted);
    IntervalSet low_shifted = low.shifted(up.scaled(2));
    return assemble(half_low, low, half_low_shifted, rest, low_shifted);
}

StepFunction make_psi_xy(const PiScalar& x, const PiScalar& y) {
    KxyParts kxy = make_kxy_parts(x, y);
    IntervalSet third = IntervalSet::of(kxy.bands[2]);
    const PiScalar two_pi = PiScalar::of(2);
    IntervalSet half_third = third.scaled(Rational(1, 2));
    IntervalSet half_third_shifted = half_third.shifted(two_pi);
    // The shifted copy must sit strictly inside the fourth band; the triangle
    // condition guarantees it, so a failure means broken parameters.
    if (!(IntervalSet::of(kxy.bands[3]).contains(half_third_shifted) &&
          half_third_shifted != IntervalSet::of(kxy.bands[3])))
        throw std::logic_error("make_psi_xy: shifted band not properly contained");
    // The third band keeps amplitude 1/sqrt2; the unit amplitude covers what
    // remains of the five bands.
    IntervalSet rest = set_subtract(kxy.set, set_union(half_third_shifted, third));
    IntervalSet third_shifted = third.shifted(PiScalar::of(4));
    return assemble(half_third, third, half_third_shifted, rest, third_shifted);
}

StepFunction indicator_wavelet(const IntervalSet& s) {
    if (!is_wavelet_set(s))
        throw std::invalid_argument("indicator_wavelet: set fails the wavelet-set check");
    std::vector<StepFunction::Piece> pieces;
    add_region(pieces, s, Q2Value(1));
    return StepFunction::from_pieces(std::move(pieces));
}

namespace {

long long required_shift_bound(const IntervalSet& e) {
    if (e.empty()) return 0;
    Rational extent = e.max().coeff() - e.min().coeff();
    return rational_ceil(extent / 2).convert_to<long long>();
}

}  // namespace

SupportProfile support_profile(const StepFunction& f) {
    return support_profile(f, required_shift_bound(f.support()));
}

SupportProfile support_profile(const StepFunction& f, long long k_bound) {
    SupportProfile sp;
    sp.support = f.support();
    if (sp.support.empty()) return sp;
    if (k_bound < required_shift_bound(sp.support))
        throw std::invalid_argument("support_profile: k_bound below the support extent");
    for (long long k = -k_bound; k <= k_bound; ++k) {
        IntervalSet ek = set_intersect(sp.support, translate(sp.support, -k));
        if (!ek.measure().is_zero()) {
            sp.shift_overlaps.emplace(k, std::move(ek));
            sp.shift_indices.insert(k);
        }
    }
    return sp;
}

std::string_view to_string(SupportPiece p) {
    switch (p) {
        case SupportPiece::HalfLow: return "half_low";
        case SupportPiece::Low: return "low";
        case SupportPiece::HalfLowShifted: return "half_low_shifted";
        case SupportPiece::HighRemainder: return "high_remainder";
        case SupportPiece::LowShifted: return "low_shifted";
    }
    return "?";
}

std::map<SupportPiece, PieceInteraction> support_interaction_table(int r) {
    KrParts kr = make_kr(r);
    IntervalSet low = IntervalSet::of(kr.low);
    PiScalar up{pow2(r + 1)};
    IntervalSet half_low = low.scaled(Rational(1, 2));
    IntervalSet half_low_shifted = half_low.shifted(up);

    std::map<SupportPiece, IntervalSet> piece_sets{
        {SupportPiece::HalfLow, half_low},
        {SupportPiece::Low, low},
        {SupportPiece::HalfLowShifted, half_low_shifted},
        {SupportPiece::HighRemainder, set_subtract(IntervalSet::of(kr.high), half_low_shifted)},
        {SupportPiece::LowShifted, low.shifted(up.scaled(2))},
    };
    IntervalSet support = make_psi_r(r).support();

    std::map<SupportPiece, PieceInteraction> table;
    for (const auto& [name, piece] : piece_sets) {
        PieceInteraction pi;
        // shift scan: 2|k| can never exceed the span between piece and support
        Rational span_lo = support.min().coeff() - piece.max().coeff();
        Rational span_hi = support.max().coeff() - piece.min().coeff();
        long long k_lo = rational_floor(span_lo / 2).convert_to<long long>();
        long long k_hi = rational_ceil(span_hi / 2).convert_to<long long>();
        for (long long k = k_lo; k <= k_hi; ++k) {
            IntervalSet image = translate(piece, k);
            if (set_intersect(image, support).measure().is_zero()) continue;
            if (!support.contains(image))
                throw std::logic_error("support_interaction_table: partial shift overlap");
            pi.shifts.insert(k);
        }
        // dilation scan: 2^j * piece must meet [min, max) of the support
        for (long j = 0;; --j) {
            IntervalSet image = dilate(piece, j);
            if (!(support.min() < image.max())) break;
            if (!set_intersect(image, support).measure().is_zero()) {
                if (!support.contains(image))
                    throw std::logic_error("support_interaction_table: partial dilation overlap");
                pi.dilations.insert(j);
            }
        }
        for (long j = 1;; ++j) {
            IntervalSet image = dilate(piece, j);
            if (!(image.min() < support.max())) break;
            if (!set_intersect(image, support).measure().is_zero()) {
                if (!support.contains(image))
                    throw std::logic_error("support_interaction_table: partial dilation overlap");
                pi.dilations.insert(j);
            }
        }
        table.emplace(name, std::move(pi));
    }
    return table;
}

}  // namespace h2wav
