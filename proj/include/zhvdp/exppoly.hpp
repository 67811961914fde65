#pragma once

#include <vector>

#include "zhvdp/basis.hpp"

namespace zhvdp {

// Vector-valued exponential polynomial on theta in [-1, 0]:
//   h(theta) = sum_j c_j theta^{k_j} e^{alpha_j theta},  k_j in {0, 1}.
// Closed under differentiation; the bilinear pairing against the adjoint rows
// has closed-form moments, so residuals come out at machine precision.
struct EpTerm {
    cvec2 c{};
    cd alpha{};
    int k = 0;
};

struct ExpPoly {
    std::vector<EpTerm> terms;

    cvec2 eval(double theta) const;
    ExpPoly deriv() const;
    void add(const cvec2& c, cd alpha, int k);
};

// <psi_row, h> with the exact integral (no quadrature).
cd pair_exact(int psi_row, const ExpPoly& h, const CenterBasis& basis);

// Boundary functional h'(0) - L h with L h = A h(0) + B h(-1).
cvec2 boundary_residual_vec(const ExpPoly& h, const CenterBasis& basis);

} // namespace zhvdp
