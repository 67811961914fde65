#include "zhvdp/normalform.hpp"

#include <algorithm>
#include <cmath>

#include "zhvdp/errors.hpp"
#include "zhvdp/spectrum.hpp"

namespace zhvdp {

namespace {

constexpr cd I(0.0, 1.0);

double real_checked(cd v, const char* what) {
    if (std::abs(v.imag()) > 1e-8 * (1.0 + std::abs(v.real()))) {
        throw numeric_error(std::string("coefficient expected real: ") + what);
    }
    return v.real();
}

cvec2 sub(const cvec2& p, const cvec2& q) { return {p[0] - q[0], p[1] - q[1]}; }

double norm2(const cvec2& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

// Solve one BVP  h' - kappa h = Phi(theta) Psi0 Ap,  h'(0) - L h = Ap,
// kappa = i * mult * Omega. For mult = 2 the boundary matrix is the invertible
// characteristic matrix at 2 i Omega; for mult = 1 and 0 it is singular
// (i omega0 resp. 0 are characteristic roots) and the system is solved by
// least squares with the Q-orthogonality constraint appended. The
// unconstrained residual is kept as the Fredholm solvability witness.
HEntry solve_one(const CenterBasis& b, const cvec2& Ap, int mult) {
    const cd kap = I * static_cast<double>(mult) * b.Omega;
    std::array<cd, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = b.Psi0[i][0] * Ap[0] + b.Psi0[i][1] * Ap[1];

    struct Mode {
        cvec2 v;
        cd alpha;
    };
    const std::array<Mode, 3> forcing = {{{{c[0], I * b.omega0 * c[0]}, I * b.Omega},
                                          {{c[1], -I * b.omega0 * c[1]}, -I * b.Omega},
                                          {{c[2], cd(0.0)}, cd(0.0)}}};
    HEntry out;
    ExpPoly& h = out.h;
    for (const auto& f : forcing) {
        if (std::abs(f.alpha - kap) > 1e-12 * (1.0 + b.Omega)) {
            h.add({f.v[0] / (f.alpha - kap), f.v[1] / (f.alpha - kap)}, f.alpha, 0);
        } else {
            h.add(f.v, f.alpha, 1); // resonant: particular term theta e^{kappa theta}
        }
    }

    const cvec2 rhs = sub(Ap, boundary_residual_vec(h, b));
    const auto M = b.char_matrix(kap);
    cvec2 w;
    if (mult == 2) {
        if (std::abs(eval_delta(cd(0.0, 2.0 * b.omega0), b.tau0, b.epsilon, b.a, 1.0)) <= 1e-8) {
            throw numeric_error("solve_h: resonance |Delta(2 i omega0)| <= 1e-8");
        }
        const cd det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
        w = {(rhs[0] * M[1][1] - rhs[1] * M[0][1]) / det,
             (rhs[1] * M[0][0] - rhs[0] * M[1][0]) / det};
        h.add(w, kap, 0);
    } else {
        const int crow = (mult == 1) ? 0 : 2;
        cvec2 q;
        for (int j = 0; j < 2; ++j) {
            ExpPoly unit;
            cvec2 e{cd(0.0), cd(0.0)};
            e[j] = 1.0;
            unit.add(e, kap, 0);
            q[j] = pair_exact(crow, unit, b);
        }
        const cd rhs_c = -pair_exact(crow, h, b);
        const double scale =
            (std::abs(M[0][0]) + std::abs(M[0][1]) + std::abs(M[1][0]) + std::abs(M[1][1])) /
            (std::abs(q[0]) + std::abs(q[1]) + 1e-300);
        // normal equations of the stacked system [M; scale*q] w = [rhs; scale*rhs_c]
        std::array<cvec2, 3> rows = {M[0], M[1], cvec2{scale * q[0], scale * q[1]}};
        std::array<cd, 3> bvec = {rhs[0], rhs[1], scale * rhs_c};
        cd a00 = 0, a01 = 0, a11 = 0, b0 = 0, b1 = 0;
        for (int r = 0; r < 3; ++r) {
            a00 += std::conj(rows[r][0]) * rows[r][0];
            a01 += std::conj(rows[r][0]) * rows[r][1];
            a11 += std::conj(rows[r][1]) * rows[r][1];
            b0 += std::conj(rows[r][0]) * bvec[r];
            b1 += std::conj(rows[r][1]) * bvec[r];
        }
        const cd det = a00 * a11 - a01 * std::conj(a01);
        w = {(b0 * a11 - b1 * a01) / det, (b1 * a00 - b0 * std::conj(a01)) / det};
        const cvec2 mw{M[0][0] * w[0] + M[0][1] * w[1], M[1][0] * w[0] + M[1][1] * w[1]};
        out.solvability_residual = norm2(sub(mw, rhs));
        h.add(w, kap, 0);
    }

    out.at_m1 = h.eval(-1.0);
    out.at_0 = h.eval(0.0);
    const ExpPoly dh = h.deriv();
    double ode_max = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double theta = -1.0 + k / 20.0;
        cvec2 f{cd(0.0), cd(0.0)};
        for (int j = 0; j < 3; ++j) {
            const cvec2 ph = b.phi_col(j, theta);
            f[0] += c[j] * ph[0];
            f[1] += c[j] * ph[1];
        }
        const cvec2 hv = h.eval(theta);
        const cvec2 dv = dh.eval(theta);
        const cvec2 res{dv[0] - kap * hv[0] - f[0], dv[1] - kap * hv[1] - f[1]};
        ode_max = std::max(ode_max, norm2(res));
    }
    out.ode_residual = ode_max;
    out.bc_residual = norm2(sub(boundary_residual_vec(h, b), Ap));
    double orth = 0.0;
    for (int i = 0; i < 3; ++i) orth = std::max(orth, std::abs(pair_exact(i, h, b)));
    out.orth_residual = orth;
    return out;
}

} // namespace

double HSolution::max_ode_residual() const {
    return std::max({h200.ode_residual, h110.ode_residual, h101.ode_residual, h002.ode_residual});
}
double HSolution::max_bc_residual() const {
    return std::max({h200.bc_residual, h110.bc_residual, h101.bc_residual, h002.bc_residual});
}
double HSolution::max_orth_residual() const {
    return std::max({h200.orth_residual, h110.orth_residual, h101.orth_residual,
                     h002.orth_residual, h200.solvability_residual, h110.solvability_residual,
                     h101.solvability_residual, h002.solvability_residual});
}

NormalFormCoefficients second_order(const CenterBasis& b, const OscillatorConfig& cfg) {
    NormalFormCoefficients nf;
    const cd E = std::exp(-I * b.Omega);
    const cd Dbsb = std::conj(b.Dfac) * std::conj(b.sigma);
    nf.a11 = b.tau0 * Dbsb * E;
    nf.a12 = std::conj(b.Dfac) * (I * b.omega0 - std::conj(b.sigma) * b.omega0 * b.omega0);
    nf.a13 = b.tau0 * Dbsb * (cfg.g11 * E + I * b.omega0 * cfg.g12 * E);
    nf.a21 = b.tau0 / (b.tau0 - b.epsilon - b.a);
    nf.a22 = 0.0;
    nf.a23 = nf.a21 * (cfg.g11 + b.omega0 * b.omega0 * cfg.g22);
    nf.a24 = 0.5 * nf.a21 * cfg.g11;
    return nf;
}

QuadraticForcing quadratic_forcing(const CenterBasis& b, const OscillatorConfig& cfg) {
    QuadraticForcing qf;
    const double w = b.omega0, t0 = b.tau0;
    const cd p1 = std::exp(-I * b.Omega); // u1(-1) coefficient of x1
    qf.A200 = {cd(0.0), t0 * p1 * p1 * (0.5 * cfg.g11 + I * w * cfg.g12 - 0.5 * w * w * cfg.g22)};
    qf.A020 = {cd(0.0), std::conj(qf.A200[1])};
    qf.A110 = {cd(0.0), cd(t0 * (cfg.g11 + w * w * cfg.g22))};
    qf.A101 = {cd(0.0), t0 * p1 * (cfg.g11 + I * w * cfg.g12)};
    qf.A011 = {cd(0.0), std::conj(qf.A101[1])};
    qf.A002 = {cd(0.0), cd(t0 * 0.5 * cfg.g11)};
    return qf;
}

HSolution solve_h(const CenterBasis& basis, const QuadraticForcing& qf) {
    HSolution hs;
    hs.h200 = solve_one(basis, qf.A200, 2);
    hs.h101 = solve_one(basis, qf.A101, 1);
    hs.h110 = solve_one(basis, qf.A110, 0);
    hs.h002 = solve_one(basis, qf.A002, 0);
    return hs;
}

void third_order(const CenterBasis& bas, const OscillatorConfig& cfg,
                 const QuadraticForcing& /*qf*/, const HSolution& hs,
                 NormalFormCoefficients& nf) {
    const double w = bas.omega0, t0 = bas.tau0, eps = bas.epsilon;
    const double w2 = w * w, w3 = w2 * w, w4 = w2 * w2;
    const double g11 = cfg.g11, g12 = cfg.g12, g22 = cfg.g22;
    const double g11s = g11 * g11, g12s = g12 * g12, g22s = g22 * g22;
    const double g111 = cfg.g111, g112 = cfg.g112, g122 = cfg.g122, g222 = cfg.g222;
    const cd E = std::exp(-I * bas.Omega), Ep = std::exp(I * bas.Omega);
    const cd Dbsb = std::conj(bas.Dfac) * std::conj(bas.sigma);
    const cd Ds = bas.Dfac * bas.sigma;
    const double D1 = bas.D1fac;

    // (i) Proj f3
    nf.b11 = t0 * Dbsb * E *
             (-2.0 * I * eps * w * Ep + g111 / 3.0 + 0.5 * g112 * (2.0 * w2 - I * w) +
              0.5 * g122 * (2.0 * w2 + I * w) - I * w3 / 3.0 * g222);
    nf.b12 = t0 * Dbsb * E * (-I * eps * w * Ep + g111 / 3.0 + 0.5 * I * w * g112);
    nf.b21 = -t0 * D1 * (g111 + (2.0 * w2 / 3.0) * g122);
    nf.b22 = -(t0 / 6.0) * D1 * g111;

    // (ii) D_x f2 * U2^1
    nf.c11 = (-t0 * t0 * Dbsb / (3.0 * I * w)) *
             (6.0 * Dbsb * E * E *
                  (g11s - w4 * g22s + 2.0 * I * w3 * g12 * g22 + 2.0 * I * w * g11 * g12) +
              2.0 * Ds * (-7.0 * g11s - 10.0 * w2 * g11 * g22 - 4.0 * w2 * g12s - 7.0 * w2 * g22s) +
              3.0 * D1 * E *
                  (g11s + I * w * g11 * g12 + I * w3 * g12 * g22 - w2 * g11 * g22 +
                   2.0 * w2 * g12s));
    nf.c12 = (-2.0 * t0 * Dbsb / (I * w)) *
             (Dbsb * E * E * (g11s + 2.0 * I * w * g11 * g12 - w2 * g11 * g22) +
              Ds * (-2.0 * g11s - w2 * g11 * g22 - w2 * g12s) +
              D1 * E * (g11s + 2.0 * I * w * g11 * g12));
    nf.c21 = real_checked(
        (2.0 * t0 * t0 * D1 / (I * w)) *
            (Dbsb * E *
                 (3.0 * g11s + 3.0 * I * w * g11 * g12 + 2.0 * w2 * g12s + w2 * g11 * g22 +
                  3.0 * I * w3 * g12 * g22) +
             Ds * Ep *
                 (-3.0 * g11s + 3.0 * I * w * g11 * g12 - 2.0 * w2 * g12s - w2 * g11 * g22 +
                  3.0 * I * w3 * g12 * g22)),
        "c21");
    nf.c22 = real_checked((2.0 * t0 * D1 * g11 / (I * w)) *
                              (Dbsb * E * (g11 + I * w * g12) + Ds * Ep * (-g11 + I * w * g12)),
                          "c22");

    // (iii) D_y f2 * h, via h_p(-1)
    const cvec2 h200 = hs.h200.at_m1;
    const cvec2 h110 = hs.h110.at_m1;
    const cvec2 h101 = hs.h101.at_m1;
    const cvec2 h002 = hs.h002.at_m1;
    const cvec2 h011{std::conj(h101[0]), std::conj(h101[1])};
    nf.d11 = (t0 * Dbsb / 2.0) *
             (g11 * (Ep * h200[0] + E * h110[0]) +
              g12 * (Ep * h200[1] + E * h110[1] + I * w * E * h110[0] - I * w * Ep * h200[0]) +
              I * w * g22 * (E * h110[1] - Ep * h200[1]));
    nf.d12 = (t0 * Dbsb / 2.0) *
             (g11 * (E * h002[0] + h101[0]) + I * w * g22 * E * h002[1] +
              g12 * (E * h002[1] + h101[1] + I * w * E * h002[0]));
    nf.d21 = real_checked(
        (-t0 * D1 / 2.0) *
            (g11 * (E * h011[0] + Ep * h101[0] + h110[0]) +
             I * w * g22 * (E * h011[1] - Ep * h101[1]) +
             g12 * (E * h011[1] + Ep * h101[1] + h110[1] + I * w * E * h011[0] -
                    I * w * Ep * h101[0])),
        "d21");
    nf.d22 = real_checked((-t0 * D1 / 2.0) * (g11 * h002[0] + g12 * h002[1]), "d22");

    // (iv) the three U2^1 blocks
    nf.e11 = (-2.0 * t0 * t0 * Dbsb / (9.0 * I * w)) *
             (Dbsb * E *
                  (27.0 * g11s * E - 27.0 * w4 * g22s * E + 18.0 * I * w * g11 * g12 * E +
                   18.0 * I * w3 * g12 * g22 * E + 36.0 * I * w * g11 * g12 +
                   36.0 * I * w3 * g12 * g22) +
              Ds * (-19.0 * g11s - 34.0 * w2 * g11 * g22 - 19.0 * w4 * g22s - 4.0 * w2 * g12s));
    nf.e12 = (-t0 * t0 * Dbsb / (I * w)) *
             (Dbsb * E * (2.0 * g11s * E + 4.0 * I * w * g11 * g12 - 2.0 * w2 * g11 * g22 * E) +
              Ds * (-3.0 * g11s - 2.0 * w2 * g11 * g22 - w2 * g12s));
    nf.e21 = real_checked(
        (t0 * t0 * D1 / (I * w)) *
            (Dbsb * E *
                 (5.0 * g11s + 3.0 * w2 * g11 * g22 + 5.0 * I * w3 * g12 * g22 +
                  5.0 * I * w * g11 * g12 + 2.0 * w2 * g12s) -
             Ds * Ep *
                 (5.0 * g11s + 3.0 * w2 * g11 * g22 - 5.0 * I * w3 * g12 * g22 -
                  5.0 * I * w * g11 * g12 + 2.0 * w2 * g12s)),
        "e21");
    nf.e22 = real_checked((2.0 * t0 * t0 * D1 * g11 / (I * w)) *
                              (Dbsb * E * (g11 + I * w * g12) - Ds * Ep * (g11 - I * w * g12)),
                          "e22");

    nf.m11 = (-t0 * t0 * Dbsb / (3.0 * I * w)) *
             (Dbsb * E *
                  (-6.0 * g11s * E + 12.0 * I * w * g11 * g12 * E + 6.0 * w4 * g22s * E +
                   12.0 * I * w3 * g12 * g22 * E - 24.0 * I * w3 * g12 * g22 -
                   24.0 * I * w * g11 * g12) +
              Ds * (14.0 * g11s + 20.0 * w2 * g11 * g22 + 14.0 * w4 * g22s + 8.0 * w2 * g12s) +
              D1 * E *
                  (-3.0 * g11s - 3.0 * I * w * g12 * g22 + 3.0 * w2 * g11 * g22 -
                   3.0 * I * w * g11 * g12 - 6.0 * w * g12s));
    nf.m12 = (2.0 * t0 * Dbsb / (I * w)) *
             (Dbsb * E * (g11s * E + 2.0 * I * w * g11 * g12 - w2 * g11 * g22 * E) +
              Ds * (-2.0 * g11s - w2 * g11 * g22 - w2 * g12s) +
              D1 * E * (2.0 * g11s + 2.0 * I * w * g11 * g12));
    nf.m21 = real_checked(
        (-2.0 * t0 * t0 * D1 / (I * w)) *
            (Dbsb * E *
                 (3.0 * g11s + w2 * g11 * g22 + 3.0 * I * w3 * g12 * g22 + 2.0 * w2 * g12s +
                  3.0 * I * w * g11 * g12) -
             Ds * Ep *
                 (3.0 * g11s + w2 * g11 * g22 - 3.0 * I * w3 * g12 * g22 + 2.0 * w2 * g12s -
                  3.0 * I * w * g11 * g12)),
        "m21");
    nf.m22 = real_checked((-2.0 * t0 * t0 * D1 * g11 / (I * w)) *
                              (Dbsb * E * (g11 + I * w * g12) - Ds * Ep * (g11 - I * w * g12)),
                          "m22");

    nf.n11 = (-t0 * t0 * Dbsb / (9.0 * I * w)) *
             (Dbsb * E *
                  (36.0 * g11s * E + 72.0 * I * w * g11 * g12 + 72.0 * I * w3 * g12 * g22 -
                   36.0 * w4 * g22s * E) +
              Ds * (4.0 * g11s - 8.0 * w2 * g11 * g22 + 4.0 * w4 * g22s + 16.0 * w2 * g12s) +
              D1 * E *
                  (-9.0 * g11s - 9.0 * I * w * g11 * g12 + 9.0 * w2 * g11 * g22 -
                   9.0 * I * w3 * g12 * g22 - 18.0 * w2 * g12s));
    nf.n12 = (t0 * t0 * Dbsb / (I * w)) *
             (Ds * (g11s + w2 * g12s) + D1 * g11 * E * (-4.0 * g11 - 4.0 * I * w * g12));
    nf.n21 = real_checked(
        (-t0 * t0 * D1 / (I * w)) *
            (Dbsb * E *
                 (g11s + I * w * g11 * g12 - w2 * g11 * g22 + I * w3 * g12 * g22 +
                  2.0 * w2 * g12s) -
             Ds * Ep *
                 (g11s - I * w * g11 * g12 - w2 * g11 * g22 - I * w3 * g12 * g22 +
                  2.0 * w2 * g12s)),
        "n21");
    nf.n22 = 0.0;
}

NormalFormCoefficients compute_normal_form(const CenterBasis& basis, const OscillatorConfig& cfg,
                                           HSolution* h_out) {
    NormalFormCoefficients nf = second_order(basis, cfg);
    const QuadraticForcing qf = quadratic_forcing(basis, cfg);
    HSolution hs = solve_h(basis, qf);
    third_order(basis, cfg, qf, hs, nf);
    if (h_out) *h_out = std::move(hs);
    return nf;
}

CylindricalCoefficients cylindrical(const NormalFormCoefficients& c) {
    CylindricalCoefficients cy;
    cy.re_a11 = c.a11.real();
    cy.im_a11 = c.a11.imag();
    cy.re_a12 = c.a12.real();
    cy.im_a12 = c.a12.imag();
    cy.a21 = c.a21;
    cy.a22 = c.a22;
    cy.beta11 = c.a13.real();
    cy.beta30 = (c.b11 + c.c11 + c.d11 - c.e11 - c.m11 + c.n11).real();
    cy.beta12 = (c.b12 + c.c12 + c.d12 - c.e12 - c.m12 + c.n12).real();
    cy.gamma20 = c.a23;
    cy.gamma02 = c.a24;
    cy.gamma21 = c.b21 + c.c21 + c.d21 - c.e21 - c.m21 + c.n21;
    cy.gamma03 = c.b22 + c.c22 + c.d22 - c.e22 - c.m22 + c.n22;
    return cy;
}

UnfoldingCoefficients unfolding(const CylindricalCoefficients& cy) {
    if (std::abs(cy.beta11) <= 1e-10 || std::abs(cy.gamma20) <= 1e-10 ||
        std::abs(cy.gamma02) <= 1e-10) {
        throw hypothesis_error(
            "Hypothesis 4.1 violated: Re[a13], a23, a24 must all be nonzero");
    }
    UnfoldingCoefficients u;
    u.A = -cy.beta11 / cy.gamma02;
    u.B = (cy.gamma20 * cy.gamma02 > 0.0) ? -1 : +1;
    u.chi1_mu1 = cy.re_a11 - (cy.a21 / (2.0 * cy.gamma02)) * cy.beta11;
    u.chi1_mu2 = cy.re_a12;
    u.chi2_mu1sq = 0.25 * cy.a21 * cy.a21;
    u.eta2_mu1sq = -0.25 * cy.a21 * cy.a21 / cy.gamma02;
    u.delta_mu1 = -cy.a21 / (2.0 * cy.gamma02);
    return u;
}

} // namespace zhvdp
