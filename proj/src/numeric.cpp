#include "h2wav/numeric.hpp"

#include "h2wav/interval_set.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace h2wav {

namespace {

constexpr double kSeriesCutoff = 1e-12;
constexpr std::complex<double> kI{0.0, 1.0};

// int_a^b e^{i c xi} dxi, with a 3-term series branch for tiny |c| where the
// closed form cancels catastrophically.
std::complex<double> exp_integral(double a, double b, double c) {
    if (std::abs(c) < kSeriesCutoff) {
        const double d1 = b - a;
        const double d2 = (b * b - a * a) / 2.0;
        const double d3 = (b * b * b - a * a * a) / 6.0;
        return d1 + kI * c * d2 - c * c * d3;
    }
    return (std::exp(kI * c * b) - std::exp(kI * c * a)) / (kI * c);
}

}  // namespace

std::vector<ComplexSample> sample_time(const StepFunction& f, const std::vector<double>& xs) {
    struct FlatPiece { double lo, hi, v; };
    std::vector<FlatPiece> flat;
    flat.reserve(f.pieces().size());
    for (const auto& p : f.pieces())
        flat.push_back({p.where.lo.to_double(), p.where.hi.to_double(), p.value.to_double()});

    std::vector<ComplexSample> out;
    out.reserve(xs.size());
    for (double x : xs) {
        std::complex<double> acc;
        for (const auto& p : flat) acc += p.v * exp_integral(p.lo, p.hi, x);
        out.push_back({x, acc / (2.0 * std::numbers::pi)});
    }
    return out;
}

std::complex<double> inner_product(const StepFunction& f, BasisIndex a, BasisIndex b) {
    const auto [j1, k1] = a;
    const auto [j2, k2] = b;
    // phase frequency 2^-j1 k1 - 2^-j2 k2, exact until the last moment
    const Rational c_exact = pow2(-j1) * Rational(k1, 1) - pow2(-j2) * Rational(k2, 1);
    const double c = to_double(c_exact);
    const Rational s1 = pow2(j1), s2 = pow2(j2);

    std::complex<double> acc;
    for (const auto& pa : f.pieces()) {
        Interval ia = pa.where.scaled(s1);
        for (const auto& pb : f.pieces()) {
            auto hit = ia.intersect(pb.where.scaled(s2));
            if (!hit) continue;
            const double lo = hit->lo.to_double();
            const double hi = hit->hi.to_double();
            const double vv = pa.value.to_double() * pb.value.to_double();
            if (c_exact == 0)
                acc += vv * (hi - lo);
            else
                acc += vv * exp_integral(lo, hi, -c);
        }
    }
    const double scale = std::pow(2.0, -(j1 + j2) / 2.0) / (2.0 * std::numbers::pi);
    return scale * acc;
}

GramReport gram(const StepFunction& f, int j_min, int j_max, long k_min, long k_max) {
    if (j_min > j_max || k_min > k_max)
        throw std::invalid_argument("gram: empty index ranges");
    GramReport rep;
    for (int j = j_min; j <= j_max; ++j)
        for (long k = k_min; k <= k_max; ++k) rep.index_grid.push_back({j, k});

    for (std::size_t p = 0; p < rep.index_grid.size(); ++p) {
        for (std::size_t q = p; q < rep.index_grid.size(); ++q) {
            const std::complex<double> g =
                inner_product(f, rep.index_grid[p], rep.index_grid[q]);
            if (p == q)
                rep.max_diag_err = std::max(rep.max_diag_err, std::abs(g - 1.0));
            else
                rep.max_offdiag = std::max(rep.max_offdiag, std::abs(g));
        }
    }
    return rep;
}

std::vector<std::pair<PiScalar, bool>> origin_probe(const IntervalSet& s,
                                                    const std::vector<PiScalar>& deltas) {
    std::vector<std::pair<PiScalar, bool>> out;
    out.reserve(deltas.size());
    for (const auto& delta : deltas) {
        if (!(PiScalar::zero() < delta))
            throw std::invalid_argument("origin_probe: deltas must be positive");
        IntervalSet window = IntervalSet::of({PiScalar::zero(), delta});
        out.push_back({delta, !set_intersect(s, window).measure().is_zero()});
    }
    return out;
}

}  // namespace h2wav
