#pragma once

#include "h2wav/pi_scalar.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace h2wav {

// Half-open interval [lo, hi) with pi-rational endpoints. Half-open is the
// canonical convention throughout: partitions of the line then have zero
// boundary double-count, and all the a.e. statements become exact.
struct Interval {
    PiScalar lo;
    PiScalar hi;

    PiScalar length() const { return hi - lo; }
    bool empty() const { return !(lo < hi); }

    bool contains(const PiScalar& x) const { return lo <= x && x < hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    Interval shifted(const PiScalar& d) const { return {lo + d, hi + d}; }
    // factor must be positive; order of endpoints is preserved.
    Interval scaled(const Rational& f) const { return {lo.scaled(f), hi.scaled(f)}; }

    std::optional<Interval> intersect(const Interval& o) const {
        Interval r{lo < o.lo ? o.lo : lo, hi < o.hi ? hi : o.hi};
        if (r.empty()) return std::nullopt;
        return r;
    }

    bool operator==(const Interval& o) const = default;
};

// Canonical finite union of disjoint, sorted, half-open intervals. Canonical
// means: sorted by lo, every stored interval non-degenerate, and consecutive
// intervals separated by a strictly positive gap (abutting input is merged).
// Structural equality of canonical forms is set equality up to measure zero.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> raw);
    IntervalSet(std::initializer_list<Interval> raw) : IntervalSet(std::vector<Interval>(raw)) {}

    static IntervalSet of(Interval iv) { return IntervalSet({iv}); }

    const std::vector<Interval>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    // Endpoints of the support hull; require a non-empty set.
    const PiScalar& min() const;
    const PiScalar& max() const;

    PiScalar measure() const;
    bool contains(const PiScalar& x) const;
    bool contains(const IntervalSet& o) const;

    IntervalSet shifted(const PiScalar& d) const;
    IntervalSet scaled(const Rational& f) const;  // f > 0

    bool operator==(const IntervalSet& o) const = default;

private:
    std::vector<Interval> pieces_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_subtract(const IntervalSet& a, const IntervalSet& b);

// Shift by 2*k*pi, the translation group of the tiling criterion.
IntervalSet translate(const IntervalSet& s, long long k);
// Scale by 2^j, the dilation group.
IntervalSet dilate(const IntervalSet& s, long j);

inline PiScalar measure(const IntervalSet& s) { return s.measure(); }

std::ostream& operator<<(std::ostream& os, const Interval& iv);
std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

}  // namespace h2wav
