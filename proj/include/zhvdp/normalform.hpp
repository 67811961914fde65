#pragma once

#include <array>

#include "zhvdp/basis.hpp"
#include "zhvdp/exppoly.hpp"
#include "zhvdp/model.hpp"

namespace zhvdp {

// Monomial coefficients of F2(Phi x, 0): second components of the vector
// coefficients of x1^2, x2^2, x1 x2, x1 x3, x2 x3, x3^2 (first components
// vanish at mu = 0).
struct QuadraticForcing {
    cvec2 A200{}, A020{}, A110{}, A101{}, A011{}, A002{};
};

// One solved h_p with its audit trail.
struct HEntry {
    ExpPoly h;
    cvec2 at_m1{}; // h(-1)
    cvec2 at_0{};  // h(0)
    double ode_residual = 0.0;
    double bc_residual = 0.0;
    double orth_residual = 0.0;         // max_i |<psi_i, h>|
    double solvability_residual = 0.0;  // unconstrained LS residual (Fredholm witness)
};

struct HSolution {
    HEntry h200, h110, h101, h002; // h020 = conj(h200), h011 = conj(h101)
    double max_ode_residual() const;
    double max_bc_residual() const;
    double max_orth_residual() const;
};

// Cubic normal-form coefficients; the second complex row consists of conjugates
// of row-1 and are never stored. a22 = 0 identically.
struct NormalFormCoefficients {
    cd a11, a12, a13;
    double a21 = 0.0, a22 = 0.0, a23 = 0.0, a24 = 0.0;
    cd b11, b12, c11, c12, d11, d12, e11, e12, m11, m12, n11, n12;
    double b21 = 0.0, b22 = 0.0, c21 = 0.0, c22 = 0.0, d21 = 0.0, d22 = 0.0;
    double e21 = 0.0, e22 = 0.0, m21 = 0.0, m22 = 0.0, n21 = 0.0, n22 = 0.0;
};

// Polar/cylindrical reduction of the cubic normal form.
struct CylindricalCoefficients {
    double re_a11 = 0.0, im_a11 = 0.0, re_a12 = 0.0, im_a12 = 0.0; // alpha1 and xi'
    double a21 = 0.0, a22 = 0.0;                                   // alpha2
    double beta11 = 0.0, beta30 = 0.0, beta12 = 0.0;
    double gamma20 = 0.0, gamma02 = 0.0, gamma21 = 0.0, gamma03 = 0.0;
};

// Invariants of the quadratic Zero-Hopf unfolding r' = chi1 r + A r z,
// z' = chi2 + B r^2 - z^2.
struct UnfoldingCoefficients {
    double A = 0.0;
    int B = 0; // -sgn(a23 a24), +-1
    double chi1_mu1 = 0.0, chi1_mu2 = 0.0; // chi1 = eta1 linear form
    double chi2_mu1sq = 0.0;               // chi2 = (a21^2/4) mu1^2
    double eta2_mu1sq = 0.0;               // eta2 = -(a21^2/(4 a24)) mu1^2
    double delta_mu1 = 0.0;                // leading slope of delta(mu)
};

// a11..a24 of the second-order kernel projection.
NormalFormCoefficients second_order(const CenterBasis& basis, const OscillatorConfig& cfg);

QuadraticForcing quadratic_forcing(const CenterBasis& basis, const OscillatorConfig& cfg);

// Solves the four h BVPs in closed form (exponential ansatz; singular boundary
// systems handled by least squares with the Q-orthogonality constraints).
HSolution solve_h(const CenterBasis& basis, const QuadraticForcing& qf);

// Fills the b/c/d/e/m/n blocks into coeffs (closed forms in the eigenbasis constants).
void third_order(const CenterBasis& basis, const OscillatorConfig& cfg,
                 const QuadraticForcing& qf, const HSolution& h,
                 NormalFormCoefficients& coeffs);

NormalFormCoefficients compute_normal_form(const CenterBasis& basis,
                                           const OscillatorConfig& cfg,
                                           HSolution* h_out = nullptr);

CylindricalCoefficients cylindrical(const NormalFormCoefficients& coeffs);

// Requires Hypothesis 4.1: |Re a13|, |a23|, |a24| all > 1e-10.
UnfoldingCoefficients unfolding(const CylindricalCoefficients& cyl);

} // namespace zhvdp
