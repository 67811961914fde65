#pragma once

#include <vector>

#include "zhvdp/bifurcation.hpp"

namespace zhvdp {

struct SweepSpec {
    double mu1_lo = 0.0, mu1_hi = 0.0;
    int n1 = 1;
    double mu2_lo = 0.0, mu2_hi = 0.0;
    int n2 = 1;
};

// classify() at every grid point, row-major over (i2, i1). The OpenMP kernel
// and the serial reference produce identical rows (each point is independent
// and written to its own slot).
std::vector<RegionReport> sweep_classify_serial(const NormalFormCoefficients& coeffs,
                                                const UnfoldingCoefficients& unf,
                                                const SweepSpec& spec);
std::vector<RegionReport> sweep_classify(const NormalFormCoefficients& coeffs,
                                         const UnfoldingCoefficients& unf,
                                         const SweepSpec& spec);

} // namespace zhvdp
