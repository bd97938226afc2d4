#pragma once

#include "h2wav/step_function.hpp"

#include <map>
#include <set>
#include <string_view>

namespace h2wav {

// The non-MSF step wavelet built over the r-th two-band wavelet set: value
// 1/sqrt2 on the low band, on its half-scale copy and on that copy shifted
// into the high band, -1/sqrt2 on the low band shifted above the high band,
// and 1 on the remainder of the high band.
StepFunction make_psi_r(int r);

// The odd-class step wavelet built over the five-band set of make_kxy, with
// the same amplitude pattern hung off the set's third band.
StepFunction make_psi_xy(const PiScalar& x, const PiScalar& y);

// chi_s as a wavelet transform; s must pass the wavelet-set check.
StepFunction indicator_wavelet(const IntervalSet& s);

// Support interaction data of a step function f with E = supp f:
// shift_overlaps[k] = {xi in E : xi + 2k*pi in E}, kept only where it has
// positive measure; shift_indices is the set of those k. The k scan range is
// derived from the support extent, so no contributing index can be missed.
struct SupportProfile {
    IntervalSet support;
    std::map<long long, IntervalSet> shift_overlaps;
    std::set<long long> shift_indices;
};

SupportProfile support_profile(const StepFunction& f);
// Explicit bound variant; k_bound must cover the support extent.
SupportProfile support_profile(const StepFunction& f, long long k_bound);

// The five support pieces of make_psi_r, in ascending frequency order.
enum class SupportPiece {
    HalfLow,          // 2^-1 * low band
    Low,              // low band
    HalfLowShifted,   // 2^-1 * low band, shifted into the high band
    HighRemainder,    // the rest of the high band
    LowShifted,       // low band shifted above the high band
};

std::string_view to_string(SupportPiece p);

struct PieceInteraction {
    std::set<long long> shifts;     // k with (piece + 2k*pi) inside the support
    std::set<long long> dilations;  // j with 2^j * piece inside the support
};

// For each support piece of make_psi_r, every shift/dilation index whose
// image meets the support with positive measure. Each listed image is
// verified to land wholly inside the support (a partial overlap would mean
// the construction is broken and throws).
std::map<SupportPiece, PieceInteraction> support_interaction_table(int r);

}  // namespace h2wav
