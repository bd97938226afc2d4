#pragma once

#include "h2wav/step_function.hpp"
#include "h2wav/wavelets.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace h2wav {

// Calderon sum sum_j |f(2^j xi)|^2, evaluated exactly on the dyadic
// fundamental domain [2pi, 4pi); the sum is invariant under xi -> 2 xi, so
// this domain determines it on all of (0, inf). f must be supported in
// (0, inf), bounded away from 0 and from infinity (finitely many pieces are).
StepFunction calderon_sum(const StepFunction& f);

// Same sum restricted to an arbitrary domain; used to cross-check the
// canonical domain against other dilation fundamental domains.
StepFunction calderon_sum_on(const StepFunction& f, const IntervalSet& domain);

// Every positive odd q whose shift sum has any support term at all, with the
// ascending list of j >= 0 contributing for that q. All q outside this set
// have identically zero shift sums because no two support pieces are
// 2^(j+1) q pi apart.
std::map<long long, std::vector<long>> relevant_q(const StepFunction& f);

// The odd-shift sum t_q(xi) = sum_{j>=0} f(2^j xi) f(2^j (xi + 2q pi)),
// exact as a canonical piecewise function (amplitudes are real, so the
// conjugation drops). q must be odd; negative odd q is allowed and obeys
// t_{-q}(xi) = t_q(xi - 2q pi).
StepFunction tq_sum(const StepFunction& f, long long q);

// Outcome of the two characterizing equations plus the norm hypothesis:
// f is (the transform of) a wavelet iff norm_sq == 2pi, the Calderon sum is
// identically 1 on R+, and every odd-shift sum vanishes.
struct WaveletVerdict {
    bool norm_ok = false;
    bool rho_ok = false;
    bool tq_ok = false;
    std::optional<long long> failing_q;
    std::optional<StepFunction::Piece> witness;  // first offending piece, if any
    std::set<long long> checked_q;
    Q2Value norm_sq_pi;  // norm_sq in units of pi

    bool pass() const { return norm_ok && rho_ok && tq_ok; }
};

WaveletVerdict verify_wavelet(const StepFunction& f);

// Minimally supported frequency: |f| is an indicator, i.e. every stored
// amplitude is +-1.
bool is_msf(const StepFunction& f);

// Equivalence class of a wavelet: the MSF class, or M_r where 2^r is the
// largest power of two dividing every nonzero support shift index.
struct ClassLabel {
    std::optional<int> r;  // nullopt = MSF class

    static ClassLabel msf() { return {std::nullopt}; }
    static ClassLabel of(int r) { return {r}; }
    bool operator==(const ClassLabel&) const = default;
    std::string to_string() const { return r ? "M_" + std::to_string(*r) : "M_inf"; }
};

// Requires verify_wavelet(f) to pass. MSF wavelets map to the MSF class;
// otherwise the label is the minimal 2-adic valuation over the nonzero shift
// indices of the support. A non-MSF wavelet whose support meets no nonzero
// shift of itself is not classified (no such wavelet is known; refusing
// beats guessing).
ClassLabel classify(const StepFunction& f);

}  // namespace h2wav
