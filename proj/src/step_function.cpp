#include "h2wav/step_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace h2wav {

StepFunction StepFunction::from_pieces(std::vector<Piece> raw) {
    std::erase_if(raw, [](const Piece& p) { return p.where.empty() || p.value.is_zero(); });
    std::sort(raw.begin(), raw.end(), [](const Piece& a, const Piece& b) {
        return a.where.lo < b.where.lo;
    });
    StepFunction f;
    for (auto& p : raw) {
        if (!f.pieces_.empty()) {
            Piece& prev = f.pieces_.back();
            if (p.where.lo < prev.where.hi)
                throw std::invalid_argument("StepFunction: overlapping pieces");
            if (p.where.lo == prev.where.hi && p.value == prev.value) {
                prev.where.hi = p.where.hi;
                continue;
            }
        }
        f.pieces_.push_back(std::move(p));
    }
    return f;
}

StepFunction StepFunction::accumulate(const std::vector<Piece>& contributions) {
    std::vector<PiScalar> cuts;
    for (const auto& c : contributions) {
        if (c.where.empty()) continue;
        cuts.push_back(c.where.lo);
        cuts.push_back(c.where.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Piece> summed;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Interval seg{cuts[i], cuts[i + 1]};
        Q2Value total;
        for (const auto& c : contributions)
            if (c.where.contains(seg)) total += c.value;
        if (!total.is_zero()) summed.push_back({seg, total});
    }
    return from_pieces(std::move(summed));
}

IntervalSet StepFunction::support() const {
    std::vector<Interval> ivs;
    ivs.reserve(pieces_.size());
    for (const auto& p : pieces_) ivs.push_back(p.where);
    return IntervalSet(std::move(ivs));
}

Q2Value StepFunction::value_at(const PiScalar& x) const {
    for (const auto& p : pieces_) {
        if (x < p.where.lo) break;
        if (p.where.contains(x)) return p.value;
    }
    return Q2Value();
}

Q2Value norm_sq(const StepFunction& f) {
    Q2Value total;
    for (const auto& p : f.pieces())
        total += p.value.abs_sq() * Q2Value(p.where.length().coeff());
    return total;
}

Q2Value integral(const StepFunction& f) {
    Q2Value total;
    for (const auto& p : f.pieces())
        total += p.value * Q2Value(p.where.length().coeff());
    return total;
}

std::ostream& operator<<(std::ostream& os, const StepFunction& f) {
    os << "{";
    for (std::size_t i = 0; i < f.pieces().size(); ++i) {
        if (i) os << ", ";
        os << f.pieces()[i].where << " -> " << f.pieces()[i].value;
    }
    return os << "}";
}

}  // namespace h2wav
