#include "zhvdp/exppoly.hpp"

#include <cmath>

namespace zhvdp {

namespace {

// int_{-1}^{0} theta^k e^{gamma theta} dtheta for k = 0, 1
cd moment0(cd g) {
    if (std::abs(g) < 1e-14) return cd(1.0);
    return (1.0 - std::exp(-g)) / g;
}
cd moment1(cd g) {
    if (std::abs(g) < 1e-14) return cd(-0.5);
    return std::exp(-g) / g - moment0(g) / g;
}

} // namespace

cvec2 ExpPoly::eval(double theta) const {
    cvec2 out{cd(0.0), cd(0.0)};
    for (const auto& t : terms) {
        const cd f = (t.k == 0 ? cd(1.0) : cd(theta)) * std::exp(t.alpha * theta);
        out[0] += t.c[0] * f;
        out[1] += t.c[1] * f;
    }
    return out;
}

ExpPoly ExpPoly::deriv() const {
    ExpPoly d;
    for (const auto& t : terms) {
        d.add({t.c[0] * t.alpha, t.c[1] * t.alpha}, t.alpha, t.k);
        if (t.k == 1) d.add(t.c, t.alpha, 0);
    }
    return d;
}

void ExpPoly::add(const cvec2& c, cd alpha, int k) {
    terms.push_back({c, alpha, k});
}

cd pair_exact(int psi_row, const ExpPoly& h, const CenterBasis& basis) {
    // psi_row(s) = psi_c e^{beta s}; integrand psi(xi+1) B h(xi)
    const cd beta = psi_row == 0 ? cd(0.0, -basis.Omega)
                  : psi_row == 1 ? cd(0.0, basis.Omega)
                                 : cd(0.0);
    const cvec2 psi_c = basis.psi_row(psi_row, 0.0);
    const auto dot = [](const cvec2& p, const cvec2& q) { return p[0] * q[0] + p[1] * q[1]; };
    const auto bmul = [&](const cvec2& u) -> cvec2 {
        return {basis.matB[0][0] * u[0] + basis.matB[0][1] * u[1],
                basis.matB[1][0] * u[0] + basis.matB[1][1] * u[1]};
    };
    cd integral = 0.0;
    const cd ebeta = std::exp(beta);
    for (const auto& t : h.terms) {
        const cd g = t.alpha + beta;
        integral += ebeta * dot(psi_c, bmul(t.c)) * (t.k == 0 ? moment0(g) : moment1(g));
    }
    return dot(psi_c, h.eval(0.0)) + integral;
}

cvec2 boundary_residual_vec(const ExpPoly& h, const CenterBasis& basis) {
    const cvec2 d0 = h.deriv().eval(0.0);
    const cvec2 h0 = h.eval(0.0);
    const cvec2 hm1 = h.eval(-1.0);
    cvec2 out;
    for (int i = 0; i < 2; ++i) {
        out[i] = d0[i];
        for (int j = 0; j < 2; ++j) {
            out[i] -= basis.matA[i][j] * h0[j] + basis.matB[i][j] * hm1[j];
        }
    }
    return out;
}

} // namespace zhvdp
