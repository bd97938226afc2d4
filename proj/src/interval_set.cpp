#include "h2wav/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace h2wav {

IntervalSet::IntervalSet(std::vector<Interval> raw) {
    std::erase_if(raw, [](const Interval& iv) { return iv.empty(); });
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });
    for (auto& iv : raw) {
        if (!pieces_.empty() && iv.lo <= pieces_.back().hi) {
            if (pieces_.back().hi < iv.hi) pieces_.back().hi = iv.hi;
        } else {
            pieces_.push_back(iv);
        }
    }
}

const PiScalar& IntervalSet::min() const {
    if (pieces_.empty()) throw std::logic_error("min() of empty interval set");
    return pieces_.front().lo;
}

const PiScalar& IntervalSet::max() const {
    if (pieces_.empty()) throw std::logic_error("max() of empty interval set");
    return pieces_.back().hi;
}

PiScalar IntervalSet::measure() const {
    PiScalar total;
    for (const auto& iv : pieces_) total += iv.length();
    return total;
}

bool IntervalSet::contains(const PiScalar& x) const {
    // pieces are sorted; a scan is fine at the sizes in play
    for (const auto& iv : pieces_) {
        if (x < iv.lo) return false;
        if (x < iv.hi) return true;
    }
    return false;
}

bool IntervalSet::contains(const IntervalSet& o) const {
    return set_subtract(o, *this).empty();
}

IntervalSet IntervalSet::shifted(const PiScalar& d) const {
    std::vector<Interval> out;
    out.reserve(pieces_.size());
    for (const auto& iv : pieces_) out.push_back(iv.shifted(d));
    IntervalSet r;
    r.pieces_ = std::move(out);  // shifting preserves canonical form
    return r;
}

IntervalSet IntervalSet::scaled(const Rational& f) const {
    if (f <= 0) throw std::domain_error("IntervalSet::scaled: factor must be positive");
    std::vector<Interval> out;
    out.reserve(pieces_.size());
    for (const auto& iv : pieces_) out.push_back(iv.scaled(f));
    IntervalSet r;
    r.pieces_ = std::move(out);
    return r;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> all = a.pieces();
    all.insert(all.end(), b.pieces().begin(), b.pieces().end());
    return IntervalSet(std::move(all));
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < a.pieces().size() && j < b.pieces().size()) {
        const Interval& x = a.pieces()[i];
        const Interval& y = b.pieces()[j];
        if (auto r = x.intersect(y)) out.push_back(*r);
        if (x.hi < y.hi) ++i; else ++j;
    }
    return IntervalSet(std::move(out));
}

IntervalSet set_subtract(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::size_t j = 0;
    for (const auto& piece : a.pieces()) {
        PiScalar cur = piece.lo;
        while (j < b.pieces().size() && b.pieces()[j].hi <= cur) ++j;
        std::size_t jj = j;
        while (jj < b.pieces().size() && b.pieces()[jj].lo < piece.hi) {
            const Interval& cut = b.pieces()[jj];
            if (cur < cut.lo) out.push_back({cur, cut.lo});
            if (cur < cut.hi) cur = cut.hi;
            ++jj;
        }
        if (cur < piece.hi) out.push_back({cur, piece.hi});
    }
    return IntervalSet(std::move(out));
}

IntervalSet translate(const IntervalSet& s, long long k) {
    return s.shifted(PiScalar(Rational(2 * BigInt(k), 1)));
}

IntervalSet dilate(const IntervalSet& s, long j) {
    return s.scaled(pow2(j));
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << "[" << iv.lo << ", " << iv.hi << ")";
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
    os << "{";
    for (std::size_t i = 0; i < s.pieces().size(); ++i) {
        if (i) os << ", ";
        os << s.pieces()[i];
    }
    return os << "}";
}

}  // namespace h2wav
