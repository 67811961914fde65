#pragma once

#include <complex>
#include <optional>

namespace zhvdp {

using cd = std::complex<double>;

// Critical pair of the Zero-Hopf point: simple zero root plus +-i omega0.
struct ZeroHopfPoint {
    double omega0 = 0.0;
    double tau0 = 0.0;
    double epsilon = 0.0;
    double a = 0.0;
};

enum class ZeroRootTag { None, Simple, Double, Triple, Quadruple, ZeroHopf };

struct ZeroRootClass {
    ZeroRootTag tag = ZeroRootTag::None;
    std::optional<ZeroHopfPoint> detail;
};

// Characteristic function Delta(lambda, tau) = lambda^2 - eps lambda + 1
//                                              - (a lambda + b) e^{-lambda tau}.
cd eval_delta(cd lambda, double tau, double eps, double a, double b);
cd eval_delta_dlambda(cd lambda, double tau, double eps, double a, double b);

// Unique positive root of 6e - 2e^3 +- 2(e^2-2)sqrt(e^2-2); both branches are
// scanned on [1.5, 1.7] and the one with a sign change is bisected.
double epsilon0();

// omega0 = sqrt(2 - eps^2 + a^2), tau0 from the arccos formula (principal
// branch, residual-checked, 2*pi-complement fallback). Requires eps^2 - a^2 < 2.
ZeroHopfPoint zero_hopf_point(double eps, double a);

// Multiplicity classification of the zero root at b = 1 (tolerance 1e-10);
// reports ZeroHopf with the critical pair when tau sits at tau0.
ZeroRootClass classify_zero_eigenvalue(double eps, double a, double b, double tau);

// Newton refinement of a characteristic root from a starting guess.
cd refine_root(cd guess, double tau, double eps, double a, double b);

} // namespace zhvdp
