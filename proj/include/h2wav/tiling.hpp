#pragma once

#include "h2wav/interval_set.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace h2wav {

// Exact multiplicity function over one fundamental domain, stored as maximal
// constant runs that partition the domain (gaps show up as count-0 runs).
class MultiplicityProfile {
public:
    struct Step {
        Interval where;
        std::int64_t count = 0;
        bool operator==(const Step&) const = default;
    };

    MultiplicityProfile() = default;

    // contributions must already be clipped to the domain.
    static MultiplicityProfile from_contributions(const Interval& domain,
                                                  const std::vector<Interval>& contributions);

    const Interval& domain() const { return domain_; }
    const std::vector<Step>& steps() const { return steps_; }

    bool identically(std::int64_t c) const {
        return steps_.size() == 1 && steps_.front().count == c;
    }
    std::int64_t count_at(const PiScalar& x) const;

    bool operator==(const MultiplicityProfile&) const = default;

private:
    Interval domain_{PiScalar::of(2), PiScalar::of(4)};
    std::vector<Step> steps_;
};

// Exact defect measures of a would-be partition: overlap is the measure of
// over-covered material weighted by (count - 1), gap the measure left
// uncovered. Both zero iff the profile is identically 1.
struct TilingReport {
    PiScalar overlap_defect;
    PiScalar gap_defect;
    std::optional<Interval> witness_overlap;
    std::optional<Interval> witness_gap;

    bool clean() const { return overlap_defect.is_zero() && gap_defect.is_zero(); }
};

TilingReport tiling_report(const MultiplicityProfile& p);

// Multiplicity of the 2pi-translates of s over [2pi, 4pi): the count at xi is
// #{k : xi - 2k*pi in s}.
MultiplicityProfile tau_profile(const IntervalSet& s);

// Multiplicity of the dyadic dilates of s over [2pi, 4pi): the count at xi is
// #{j : 2^-j xi in s}. s must live in (0, inf); points <= 0 are a hard error,
// not silently clipped.
MultiplicityProfile d_profile(const IntervalSet& s);

struct WaveletSetCheck {
    bool ok = false;
    TilingReport translation;
    TilingReport dilation;
};

// The two-condition tiling criterion: s is a wavelet set iff its
// 2pi-translates partition R and its dyadic dilates partition R+.
WaveletSetCheck check_wavelet_set(const IntervalSet& s);
inline bool is_wavelet_set(const IntervalSet& s) { return check_wavelet_set(s).ok; }

// A piecewise matching: `parts` partition the source set, and part + 2k*pi
// (translation) resp. 2^n * part (dilation) partition the target.
struct EquivalenceWitness {
    std::vector<std::pair<Interval, long long>> parts;
};

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<EquivalenceWitness> witness;
};

// Two sets are translation equivalent iff their 2pi-fold multiplicity
// functions agree a.e.; for finite interval unions the witness partition is
// then constructed greedily residue by residue.
EquivalenceResult translation_equivalent(const IntervalSet& a, const IntervalSet& b);
// Same with dyadic folding; both sets must live in (0, inf).
EquivalenceResult dilation_equivalent(const IntervalSet& a, const IntervalSet& b);

}  // namespace h2wav
