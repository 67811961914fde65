#pragma once

#include <array>
#include <complex>
#include <vector>

#include "zhvdp/model.hpp"
#include "zhvdp/spectrum.hpp"

namespace zhvdp {

using cvec2 = std::array<cd, 2>;
using mat2 = std::array<std::array<double, 2>, 2>;

// Center/adjoint eigenbases of the scaled linearization at the Zero-Hopf point.
//
// Forward basis (theta in [-1,0]):
//   phi1(theta) = (1, i w0)^T e^{i Omega theta},  phi2 = (1, 0)^T, Omega = w0 tau0.
// Adjoint basis (s in [0,1]):
//   psi1(s) = D (1, sigma) e^{i Omega s},  psi2 = D1 (eps + a, -1),
// normalized so that <Psi, Phi> = I with Psi rows (psi1_bar, psi1, psi2).
struct CenterBasis {
    double omega0 = 0.0, tau0 = 0.0, epsilon = 0.0, a = 0.0;
    double Omega = 0.0; // w0 * tau0
    cd sigma;
    cd Dfac;
    double D1fac = 0.0;
    mat2 matA{}; // [[0, tau0], [-tau0, eps*tau0]]
    mat2 matB{}; // [[0, 0], [tau0, a*tau0]]
    std::array<cvec2, 3> Psi0{}; // rows of Psi(0): psi1_bar, psi1, psi2

    // adjoint row i evaluated at s in [0,1]
    cvec2 psi_row(int i, double s) const;
    // forward basis column j (0: phi1, 1: phi1_bar, 2: phi2) at theta in [-1,0]
    cvec2 phi_col(int j, double theta) const;
    // scaled-system characteristic matrix lambda I - A - B e^{-lambda}
    std::array<cvec2, 2> char_matrix(cd lambda) const;
};

// History segment on the scaled interval theta in [-1,0], uniformly sampled;
// sample count is N+1 with N even (composite Simpson).
struct Segment {
    std::vector<State2> samples;
    int intervals() const { return static_cast<int>(samples.size()) - 1; }
};

// Complex segment used by tests that pair against complex eigenfunctions.
struct CSegment {
    std::vector<cvec2> samples;
    int intervals() const { return static_cast<int>(samples.size()) - 1; }
};

struct CenterCoords {
    cd x1;            // coefficient of phi1 (x2 = conj(x1) implicitly)
    double x3 = 0.0;  // coefficient of phi2
    double r = 0.0;   // |x1|
    double z = 0.0;   // = x3
    double xi = 0.0;  // phase, from x1 = w1 - i w2, xi = atan2(w2, w1)
    double x3_imag_residual = 0.0;
};

CenterBasis build_basis(const ZeroHopfPoint& zh);

// Bilinear pairing <psi_row_i, seg> = psi(0) seg(0) + int_{-1}^{0} psi(xi+1) B seg(xi) dxi
// with the integral by composite Simpson on the sample grid.
cd bilinear(int psi_row, const Segment& seg, const CenterBasis& basis);
cd bilinear(int psi_row, const CSegment& seg, const CenterBasis& basis);

CenterCoords project(const Segment& seg, const CenterBasis& basis);

// Gram matrix <Psi, Phi> computed by quadrature with n Simpson intervals;
// identity to 1e-8 is the basis health check.
std::array<std::array<cd, 3>, 3> gram_matrix(const CenterBasis& basis, int n);

// Segment lying exactly on the center subspace: Phi * (x1, conj x1, x3).
// Real-valued by construction; used to seed simulations and in round-trip tests.
Segment center_segment(const CenterBasis& basis, cd x1, double x3, int n);

} // namespace zhvdp
