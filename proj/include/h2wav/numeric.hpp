#pragma once

#include "h2wav/step_function.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace h2wav {

// Floating-point companion layer. All set and interval logic stays exact
// upstream; rational-pi endpoints are converted to double only here, at the
// boundary. The Fourier convention is f^(xi) = int f(x) e^{-i xi x} dx, so
// time-domain synthesis carries the 1/2pi of the inversion:
// psi(x) = (1/2pi) int psi^(xi) e^{i xi x} dxi; that normalization is what
// makes a transform of norm_sq 2pi a unit vector.

struct ComplexSample {
    double x = 0.0;
    std::complex<double> value;
};

// Closed-form time-domain samples of the wavelet whose transform is f.
std::vector<ComplexSample> sample_time(const StepFunction& f, const std::vector<double>& xs);

// Index of a dilated translate: psi_{j,k} = 2^{j/2} psi(2^j . - k).
using BasisIndex = std::pair<int, long>;

// <psi_a, psi_b> via exact support intersections and closed-form exponential
// integrals in the frequency domain. Disjoint dilated supports short-circuit
// to an exact 0.
std::complex<double> inner_product(const StepFunction& f, BasisIndex a, BasisIndex b);

struct GramReport {
    std::vector<BasisIndex> index_grid;
    double max_offdiag = 0.0;
    double max_diag_err = 0.0;
};

// Gram matrix of {psi_{j,k}} over the index box; reports the maximal
// deviation from the identity.
GramReport gram(const StepFunction& f, int j_min, int j_max, long k_min, long k_max);

// For each delta > 0, whether s has positive measure inside (0, delta).
// Exact; this is the probe that exhibits support accumulating at the origin.
std::vector<std::pair<PiScalar, bool>> origin_probe(const IntervalSet& s,
                                                    const std::vector<PiScalar>& deltas);

}  // namespace h2wav
