#include "h2wav/tiling.hpp"

#include <algorithm>
#include <stdexcept>

namespace h2wav {

namespace {

void require_positive(const IntervalSet& s, const char* who) {
    if (!s.empty() && !(PiScalar::zero() < s.min()))
        throw std::domain_error(std::string(who) + ": set must lie in (0, inf)");
}

// All translated copies piece+2k*pi clipped to [d0, d0+2pi), over every k
// that yields a non-null overlap.
void fold_by_translation(const Interval& piece, const Interval& domain,
                         std::vector<Interval>& out) {
    // lo + 2k < domain.hi  and  hi + 2k > domain.lo
    BigInt k_lo = rational_floor((domain.lo.coeff() - piece.hi.coeff()) / 2) + 1;
    BigInt k_hi = rational_ceil((domain.hi.coeff() - piece.lo.coeff()) / 2) - 1;
    for (BigInt k = k_lo; k <= k_hi; ++k) {
        Interval moved = piece.shifted(PiScalar(Rational(2 * k, 1)));
        if (auto clipped = moved.intersect(domain)) out.push_back(*clipped);
    }
}

// All dilated copies 2^f * piece clipped to [2pi, 4pi). Requires piece.lo > 0.
void fold_by_dilation(const Interval& piece, const Interval& domain,
                      std::vector<Interval>& out, std::vector<long>* folds = nullptr) {
    // smallest f with hi * 2^f > domain.lo
    long f = 0;
    Rational v = piece.hi.coeff();
    const Rational dlo = domain.lo.coeff(), dhi = domain.hi.coeff();
    while (v <= dlo) { v *= 2; ++f; }
    while (v / 2 > dlo) { v /= 2; --f; }
    for (Rational lo = piece.lo.coeff() * pow2(f); lo < dhi; lo *= 2, ++f) {
        Interval moved = piece.scaled(pow2(f));
        if (auto clipped = moved.intersect(domain)) {
            out.push_back(*clipped);
            if (folds) folds->push_back(f);
        }
    }
}

MultiplicityProfile translation_fold_profile(const IntervalSet& s, const Interval& domain) {
    std::vector<Interval> contributions;
    for (const auto& piece : s.pieces()) fold_by_translation(piece, domain, contributions);
    return MultiplicityProfile::from_contributions(domain, contributions);
}

const Interval kOctave{PiScalar::of(2), PiScalar::of(4)};

}  // namespace

MultiplicityProfile MultiplicityProfile::from_contributions(
    const Interval& domain, const std::vector<Interval>& contributions) {
    std::vector<PiScalar> cuts{domain.lo, domain.hi};
    for (const auto& c : contributions) {
        cuts.push_back(c.lo);
        cuts.push_back(c.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    MultiplicityProfile p;
    p.domain_ = domain;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Interval seg{cuts[i], cuts[i + 1]};
        std::int64_t n = 0;
        for (const auto& c : contributions)
            if (c.contains(seg)) ++n;
        if (!p.steps_.empty() && p.steps_.back().count == n)
            p.steps_.back().where.hi = seg.hi;
        else
            p.steps_.push_back({seg, n});
    }
    return p;
}

std::int64_t MultiplicityProfile::count_at(const PiScalar& x) const {
    for (const auto& st : steps_)
        if (st.where.contains(x)) return st.count;
    throw std::out_of_range("MultiplicityProfile::count_at: point outside domain");
}

TilingReport tiling_report(const MultiplicityProfile& p) {
    TilingReport r;
    for (const auto& st : p.steps()) {
        if (st.count >= 2) {
            r.overlap_defect += st.where.length().scaled(Rational(st.count - 1, 1));
            if (!r.witness_overlap) r.witness_overlap = st.where;
        } else if (st.count == 0) {
            r.gap_defect += st.where.length();
            if (!r.witness_gap) r.witness_gap = st.where;
        }
    }
    return r;
}

MultiplicityProfile tau_profile(const IntervalSet& s) {
    return translation_fold_profile(s, kOctave);
}

MultiplicityProfile d_profile(const IntervalSet& s) {
    require_positive(s, "d_profile");
    std::vector<Interval> contributions;
    for (const auto& piece : s.pieces()) fold_by_dilation(piece, kOctave, contributions);
    return MultiplicityProfile::from_contributions(kOctave, contributions);
}

WaveletSetCheck check_wavelet_set(const IntervalSet& s) {
    require_positive(s, "check_wavelet_set");
    WaveletSetCheck c;
    c.translation = tiling_report(tau_profile(s));
    c.dilation = tiling_report(d_profile(s));
    c.ok = c.translation.clean() && c.dilation.clean();
    return c;
}

namespace {

// Elementary residue segments of the domain, cut at the folded images of
// every endpoint of both sets. Within one segment, any translated/dilated
// copy is wholly inside or wholly outside either set, so fibers line up.
std::vector<Interval> common_residue_segments(const Interval& domain,
                                              const std::vector<Interval>& fa,
                                              const std::vector<Interval>& fb) {
    std::vector<PiScalar> cuts{domain.lo, domain.hi};
    for (const auto& c : fa) { cuts.push_back(c.lo); cuts.push_back(c.hi); }
    for (const auto& c : fb) { cuts.push_back(c.lo); cuts.push_back(c.hi); }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Interval> segs;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) segs.push_back({cuts[i], cuts[i + 1]});
    return segs;
}

// Sorted k with seg + 2k*pi wholly inside s. seg must come from the common
// refinement, which guarantees the all-or-nothing property.
std::vector<BigInt> translation_fibers(const IntervalSet& s, const Interval& seg) {
    std::vector<BigInt> ks;
    for (const auto& piece : s.pieces()) {
        // piece.lo <= seg.lo + 2k  and  seg.hi + 2k <= piece.hi
        BigInt k_lo = rational_ceil((piece.lo.coeff() - seg.lo.coeff()) / 2);
        BigInt k_hi = rational_floor((piece.hi.coeff() - seg.hi.coeff()) / 2);
        for (BigInt k = k_lo; k <= k_hi; ++k) ks.push_back(k);
    }
    std::sort(ks.begin(), ks.end());
    return ks;
}

// Sorted f with 2^-f * seg wholly inside s (f is the fold exponent mapping
// the source material onto seg).
std::vector<long> dilation_fibers(const IntervalSet& s, const Interval& seg) {
    std::vector<long> fs;
    for (const auto& piece : s.pieces()) {
        std::vector<Interval> images;
        std::vector<long> folds;
        fold_by_dilation(piece, seg, images, &folds);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (images[i].contains(seg) && piece.contains(seg.scaled(pow2(-folds[i]))))
                fs.push_back(folds[i]);
    }
    std::sort(fs.begin(), fs.end());
    return fs;
}

void append_part(EquivalenceWitness& w, Interval part, long long index) {
    if (!w.parts.empty() && w.parts.back().second == index &&
        w.parts.back().first.hi == part.lo) {
        w.parts.back().first.hi = part.hi;
        return;
    }
    w.parts.push_back({part, index});
}

}  // namespace

EquivalenceResult translation_equivalent(const IntervalSet& a, const IntervalSet& b) {
    const Interval period{PiScalar::zero(), PiScalar::of(2)};
    std::vector<Interval> fa, fb;
    for (const auto& p : a.pieces()) fold_by_translation(p, period, fa);
    for (const auto& p : b.pieces()) fold_by_translation(p, period, fb);

    EquivalenceWitness w;
    std::vector<std::pair<Interval, long long>> raw;
    for (const auto& seg : common_residue_segments(period, fa, fb)) {
        auto ka = translation_fibers(a, seg);
        auto kb = translation_fibers(b, seg);
        if (ka.size() != kb.size()) return {false, std::nullopt};
        for (std::size_t i = 0; i < ka.size(); ++i) {
            Interval part = seg.shifted(PiScalar(Rational(2 * ka[i], 1)));
            raw.push_back({part, (kb[i] - ka[i]).convert_to<long long>()});
        }
    }
    std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) {
        return x.first.lo < y.first.lo;
    });
    for (auto& [part, k] : raw) append_part(w, part, k);
    return {true, std::move(w)};
}

EquivalenceResult dilation_equivalent(const IntervalSet& a, const IntervalSet& b) {
    require_positive(a, "dilation_equivalent");
    require_positive(b, "dilation_equivalent");
    std::vector<Interval> fa, fb;
    for (const auto& p : a.pieces()) fold_by_dilation(p, kOctave, fa);
    for (const auto& p : b.pieces()) fold_by_dilation(p, kOctave, fb);

    EquivalenceWitness w;
    std::vector<std::pair<Interval, long long>> raw;
    for (const auto& seg : common_residue_segments(kOctave, fa, fb)) {
        auto ja = dilation_fibers(a, seg);
        auto jb = dilation_fibers(b, seg);
        if (ja.size() != jb.size()) return {false, std::nullopt};
        for (std::size_t i = 0; i < ja.size(); ++i) {
            Interval part = seg.scaled(pow2(-ja[i]));
            raw.push_back({part, ja[i] - jb[i]});
        }
    }
    std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) {
        return x.first.lo < y.first.lo;
    });
    for (auto& [part, n] : raw) append_part(w, part, n);
    return {true, std::move(w)};
}

}  // namespace h2wav
