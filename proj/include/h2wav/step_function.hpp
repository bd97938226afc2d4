#pragma once

#include "h2wav/interval_set.hpp"
#include "h2wav/q2.hpp"

#include <ostream>
#include <vector>

namespace h2wav {

// Piecewise-constant function with Q(sqrt2) values, zero outside finitely
// many half-open intervals. Canonical form: pieces sorted and disjoint,
// zero-valued pieces never stored, abutting pieces of equal value merged.
// Used both for the Fourier transforms of the step wavelets and for the
// derived verification functions (dyadic energy sums, odd-shift sums).
class StepFunction {
public:
    struct Piece {
        Interval where;
        Q2Value value;
        bool operator==(const Piece&) const = default;
    };

    StepFunction() = default;

    // Pieces may arrive unsorted; overlap between non-equal values is a
    // construction error.
    static StepFunction from_pieces(std::vector<Piece> raw);

    // Pointwise sum of possibly-overlapping contributions.
    static StepFunction accumulate(const std::vector<Piece>& contributions);

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_zero() const { return pieces_.empty(); }

    IntervalSet support() const;
    Q2Value value_at(const PiScalar& x) const;

    bool operator==(const StepFunction&) const = default;

private:
    std::vector<Piece> pieces_;
};

// Integral of |f|^2 in units of pi (the result is measure-weighted, and every
// length is a rational multiple of pi). A unit-norm wavelet has value 2.
Q2Value norm_sq(const StepFunction& f);

// Integral of f itself in units of pi; 2pi * f^vee(0).
Q2Value integral(const StepFunction& f);

std::ostream& operator<<(std::ostream& os, const StepFunction& f);

}  // namespace h2wav
