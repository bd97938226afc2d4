#pragma once

#include "h2wav/interval_set.hpp"

#include <array>
#include <vector>

namespace h2wav {

// Left endpoint of the low band of the r-th canonical two-interval set:
// 2^(r+1)/(2^(r+1)-1) * pi. Also the width of its high band.
PiScalar t_param(int r);

// The two-interval wavelet set with parameters r >= 1, 1 <= k < 2(2^r - 1):
//   [2(k+1)/(2^(r+1)-1) pi, 2k/(2^r-1) pi) u [2^(r+1)k/(2^r-1) pi, 2^(r+2)(k+1)/(2^(r+1)-1) pi)
// These are exactly the wavelet sets made of two disjoint intervals.
IntervalSet make_krk(int r, long long k);

struct KrParts {
    IntervalSet set;
    Interval low;   // [t_r, 2pi)
    Interval high;  // [2^(r+1) pi, 2^(r+1) t_r)
};

// The k = 2^r - 1 member of the two-interval family, split into its bands.
KrParts make_kr(int r);

struct KxyParts {
    IntervalSet set;
    std::array<Interval, 5> bands;
};

// The five-interval wavelet set
//   [x,y) u [2pi,2x) u [2y,x+2pi) u [y+2pi,4pi) u [2x+4pi,2y+4pi)
// for (x, y) in the open triangle pi < x < y < 2pi, x + 2pi > 2y. Two free
// real parameters; restricted here to rational multiples of pi so the
// verifier stays exact.
KxyParts make_kxy_parts(const PiScalar& x, const PiScalar& y);
IntervalSet make_kxy(const PiScalar& x, const PiScalar& y);

// Truncated build of the wavelet set whose indicator wavelet has a Fourier
// transform supported arbitrarily close to the origin. Starting from the
// two-band set of make_kr, bands are recursively carved out of the high band
// and re-inserted as dyadic copies accumulating at 0. The infinite recursion
// is cut at `depth`; the returned certificate makes the cut exact: the
// truncated set is dilation equivalent to the two-band set with zero defect,
// while its translation profile double-covers exactly the first uncarved
// band, of measure `tail_defect`.
struct KrepsBuild {
    IntervalSet set;
    int depth = 0;
    std::vector<Interval> removed;      // bands carved out of the high band, outermost first
    std::vector<Interval> near_origin;  // their dyadic images walking down to 0
    std::array<Interval, 3> seeds;      // the three bands seeding the recursion
    PiScalar tail_defect;               // measure of the first band left uncarved
};

// Requires r >= 1, depth >= 0 and 0 < eps < (2^r - 1)/(2^(r+1) - 1) * pi
// (the bound that keeps the middle seed band non-empty).
KrepsBuild make_kreps(int r, const PiScalar& eps, int depth);

// [2pi, 4pi), the only wavelet set that is a single interval.
IntervalSet shannon_set();

}  // namespace h2wav
