#include "zhvdp/sweep.hpp"

#include "zhvdp/errors.hpp"

namespace zhvdp {

namespace {

void check_spec(const SweepSpec& s) {
    if (s.n1 < 1 || s.n2 < 1) throw config_error("sweep: grid sizes must be >= 1");
    if (static_cast<long long>(s.n1) * s.n2 > 1000000LL) {
        throw config_error("sweep: grid exceeds 10^6 points");
    }
}

// endpoint-weighted form: exactly sign-symmetric on symmetric ranges
double lerp_at(double lo, double hi, int i, int n) {
    if (n == 1) return lo;
    return (lo * static_cast<double>(n - 1 - i) + hi * static_cast<double>(i)) / (n - 1);
}

} // namespace

std::vector<RegionReport> sweep_classify_serial(const NormalFormCoefficients& coeffs,
                                                const UnfoldingCoefficients& unf,
                                                const SweepSpec& spec) {
    check_spec(spec);
    std::vector<RegionReport> rows(static_cast<std::size_t>(spec.n1) * spec.n2);
    for (int i2 = 0; i2 < spec.n2; ++i2) {
        for (int i1 = 0; i1 < spec.n1; ++i1) {
            const double mu1 = lerp_at(spec.mu1_lo, spec.mu1_hi, i1, spec.n1);
            const double mu2 = lerp_at(spec.mu2_lo, spec.mu2_hi, i2, spec.n2);
            rows[static_cast<std::size_t>(i2) * spec.n1 + i1] = classify(mu1, mu2, coeffs, unf);
        }
    }
    return rows;
}

std::vector<RegionReport> sweep_classify(const NormalFormCoefficients& coeffs,
                                         const UnfoldingCoefficients& unf,
                                         const SweepSpec& spec) {
    check_spec(spec);
    std::vector<RegionReport> rows(static_cast<std::size_t>(spec.n1) * spec.n2);
    const long long total = static_cast<long long>(spec.n1) * spec.n2;
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < total; ++idx) {
        const int i2 = static_cast<int>(idx / spec.n1);
        const int i1 = static_cast<int>(idx % spec.n1);
        const double mu1 = lerp_at(spec.mu1_lo, spec.mu1_hi, i1, spec.n1);
        const double mu2 = lerp_at(spec.mu2_lo, spec.mu2_hi, i2, spec.n2);
        rows[static_cast<std::size_t>(idx)] = classify(mu1, mu2, coeffs, unf);
    }
    return rows;
}

} // namespace zhvdp
