#include "zhvdp/basis.hpp"

#include <cmath>

#include "zhvdp/errors.hpp"

namespace zhvdp {

cvec2 CenterBasis::psi_row(int i, double s) const {
    const cd I(0.0, 1.0);
    switch (i) {
        case 0: {
            const cd e = std::exp(-I * Omega * s);
            return {std::conj(Dfac) * e, std::conj(Dfac) * std::conj(sigma) * e};
        }
        case 1: {
            const cd e = std::exp(I * Omega * s);
            return {Dfac * e, Dfac * sigma * e};
        }
        default:
            return {cd(D1fac * (epsilon + a), 0.0), cd(-D1fac, 0.0)};
    }
}

cvec2 CenterBasis::phi_col(int j, double theta) const {
    const cd I(0.0, 1.0);
    switch (j) {
        case 0: {
            const cd e = std::exp(I * Omega * theta);
            return {e, I * omega0 * e};
        }
        case 1: {
            const cd e = std::exp(-I * Omega * theta);
            return {e, -I * omega0 * e};
        }
        default:
            return {cd(1.0, 0.0), cd(0.0, 0.0)};
    }
}

std::array<cvec2, 2> CenterBasis::char_matrix(cd lambda) const {
    const cd e = std::exp(-lambda);
    std::array<cvec2, 2> M;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            M[i][j] = (i == j ? lambda : cd(0.0)) - matA[i][j] - matB[i][j] * e;
    return M;
}

CenterBasis build_basis(const ZeroHopfPoint& zh) {
    CenterBasis b;
    b.omega0 = zh.omega0;
    b.tau0 = zh.tau0;
    b.epsilon = zh.epsilon;
    b.a = zh.a;
    b.Omega = zh.omega0 * zh.tau0;
    if (std::abs(zh.epsilon + zh.a - zh.tau0) < 1e-12) {
        throw hypothesis_error("build_basis: D1 singular (tau0 = eps + a)");
    }
    const cd I(0.0, 1.0);
    const cd eiO = std::exp(I * b.Omega);
    b.sigma = I * b.omega0 / (1.0 - eiO);
    b.Dfac = 1.0 / (1.0 - I * b.sigma * b.omega0
                    + b.tau0 * b.sigma * eiO * (1.0 - I * b.a * b.omega0));
    b.D1fac = 1.0 / (zh.epsilon + zh.a - zh.tau0);
    b.matA = {{{0.0, b.tau0}, {-b.tau0, b.epsilon * b.tau0}}};
    b.matB = {{{0.0, 0.0}, {b.tau0, b.a * b.tau0}}};
    b.Psi0 = {b.psi_row(0, 0.0), b.psi_row(1, 0.0), b.psi_row(2, 0.0)};
    return b;
}

namespace {

template <class Seg, class Value>
cd bilinear_impl(int row, const Seg& seg, const CenterBasis& basis, Value value) {
    const int n = seg.intervals();
    if (n < 2 || n % 2 != 0) throw numeric_error("bilinear: segment must have even N >= 2");
    const double hstep = 1.0 / n;
    const auto dot = [](const cvec2& p, const cvec2& q) { return p[0] * q[0] + p[1] * q[1]; };
    const auto bmul = [&](const cvec2& u) -> cvec2 {
        return {basis.matB[0][0] * u[0] + basis.matB[0][1] * u[1],
                basis.matB[1][0] * u[0] + basis.matB[1][1] * u[1]};
    };
    cd integral = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double xi = -1.0 + k * hstep;
        const double w = (k == 0 || k == n) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        integral += w * dot(basis.psi_row(row, xi + 1.0), bmul(value(seg.samples[k])));
    }
    integral *= hstep / 3.0;
    return dot(basis.psi_row(row, 0.0), value(seg.samples.back())) + integral;
}

} // namespace

cd bilinear(int psi_row, const Segment& seg, const CenterBasis& basis) {
    return bilinear_impl(psi_row, seg, basis,
                         [](const State2& s) -> cvec2 { return {cd(s.u1), cd(s.u2)}; });
}

cd bilinear(int psi_row, const CSegment& seg, const CenterBasis& basis) {
    return bilinear_impl(psi_row, seg, basis, [](const cvec2& s) { return s; });
}

CenterCoords project(const Segment& seg, const CenterBasis& basis) {
    CenterCoords out;
    out.x1 = bilinear(0, seg, basis);
    const cd x3c = bilinear(2, seg, basis);
    out.x3_imag_residual = std::abs(x3c.imag());
    if (out.x3_imag_residual >= 1e-6) {
        throw numeric_error("project: imaginary residual on x3 exceeds 1e-6 (mis-scaled segment?)");
    }
    out.x3 = x3c.real();
    const double w1 = out.x1.real();
    const double w2 = -out.x1.imag(); // x1 = w1 - i w2
    out.r = std::hypot(w1, w2);
    out.z = out.x3;
    out.xi = std::atan2(w2, w1);
    return out;
}

std::array<std::array<cd, 3>, 3> gram_matrix(const CenterBasis& basis, int n) {
    std::array<std::array<cd, 3>, 3> G;
    for (int j = 0; j < 3; ++j) {
        CSegment col;
        col.samples.resize(n + 1);
        for (int k = 0; k <= n; ++k) {
            col.samples[k] = basis.phi_col(j, -1.0 + static_cast<double>(k) / n);
        }
        for (int i = 0; i < 3; ++i) G[i][j] = bilinear(i, col, basis);
    }
    return G;
}

Segment center_segment(const CenterBasis& basis, cd x1, double x3, int n) {
    Segment seg;
    seg.samples.resize(n + 1);
    const cd I(0.0, 1.0);
    for (int k = 0; k <= n; ++k) {
        const double theta = -1.0 + static_cast<double>(k) / n;
        const cd e = std::exp(I * basis.Omega * theta);
        seg.samples[k].u1 = 2.0 * (x1 * e).real() + x3;
        seg.samples[k].u2 = -2.0 * basis.omega0 * (x1 * e).imag();
    }
    return seg;
}

} // namespace zhvdp
