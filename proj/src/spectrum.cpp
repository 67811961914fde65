#include "zhvdp/spectrum.hpp"

#include <cmath>

#include "zhvdp/errors.hpp"

namespace zhvdp {

namespace {
constexpr double kClassTol = 1e-10;
constexpr double kResidTol = 1e-10;
} // namespace

cd eval_delta(cd lambda, double tau, double eps, double a, double b) {
    return lambda * lambda - eps * lambda + 1.0 - (a * lambda + b) * std::exp(-lambda * tau);
}

cd eval_delta_dlambda(cd lambda, double tau, double eps, double a, double b) {
    const cd e = std::exp(-lambda * tau);
    return 2.0 * lambda - eps - a * e + tau * (a * lambda + b) * e;
}

double epsilon0() {
    const auto branch = [](double sign) {
        return [sign](double e) {
            const double s = e * e - 2.0;
            return 6.0 * e - 2.0 * e * e * e + sign * 2.0 * s * std::sqrt(s);
        };
    };
    for (double sgn : {-1.0, +1.0}) {
        auto f = branch(sgn);
        double lo = 1.5, hi = 1.7;
        double flo = f(lo), fhi = f(hi);
        if (flo == 0.0) return lo;
        if (fhi == 0.0) return hi;
        if (flo * fhi > 0.0) continue;
        for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if (fm == 0.0) return mid;
            if (flo * fm < 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        const double root = 0.5 * (lo + hi);
        if (std::abs(f(root)) < 1e-13) return root;
        throw numeric_error("epsilon0 bisection failed to converge");
    }
    throw numeric_error("epsilon0: neither sign branch changes sign on [1.5, 1.7]");
}

ZeroHopfPoint zero_hopf_point(double eps, double a) {
    if (!(eps * eps - a * a < 2.0)) {
        throw hypothesis_error("zero_hopf_point requires eps^2 - a^2 < 2");
    }
    const double w0 = std::sqrt(2.0 - eps * eps + a * a);
    double arg = (1.0 - (1.0 + eps * a) * w0 * w0) / (a * a * w0 * w0 + 1.0);
    if (arg > 1.0 && arg < 1.0 + 1e-12) arg = 1.0;
    if (arg < -1.0 && arg > -1.0 - 1e-12) arg = -1.0;
    const double acosv = std::acos(arg);
    double tau0 = acosv / w0;
    if (std::abs(eval_delta(cd(0.0, w0), tau0, eps, a, 1.0)) >= kResidTol) {
        tau0 = (2.0 * M_PI - acosv) / w0;
        if (std::abs(eval_delta(cd(0.0, w0), tau0, eps, a, 1.0)) >= kResidTol) {
            throw numeric_error("zero_hopf_point: no arccos branch satisfies the residual check");
        }
    }
    return {w0, tau0, eps, a};
}

ZeroRootClass classify_zero_eigenvalue(double eps, double a, double b, double tau) {
    if (std::abs(b - 1.0) > kClassTol) return {ZeroRootTag::None, std::nullopt};
    if (std::abs(tau - (eps + a)) > kClassTol) {
        // simple zero root; additionally Zero-Hopf when tau sits at tau0
        if (eps * eps - a * a < 2.0 - kClassTol) {
            const ZeroHopfPoint zh = zero_hopf_point(eps, a);
            if (std::abs(tau - zh.tau0) <= kClassTol && std::abs(zh.tau0 - (eps + a)) > kClassTol) {
                return {ZeroRootTag::ZeroHopf, zh};
            }
        }
        return {ZeroRootTag::Simple, std::nullopt};
    }
    if (std::abs(eps * eps - a * a - 2.0) > kClassTol) return {ZeroRootTag::Double, std::nullopt};
    if (std::abs(eps - epsilon0()) > kClassTol) return {ZeroRootTag::Triple, std::nullopt};
    return {ZeroRootTag::Quadruple, std::nullopt};
}

cd refine_root(cd guess, double tau, double eps, double a, double b) {
    cd lam = guess;
    for (int it = 0; it < 50; ++it) {
        const cd f = eval_delta(lam, tau, eps, a, b);
        if (std::abs(f) < 1e-12) return lam;
        const cd df = eval_delta_dlambda(lam, tau, eps, a, b);
        if (std::abs(df) < 1e-8) throw numeric_error("refine_root: derivative singularity");
        lam -= f / df;
    }
    if (std::abs(eval_delta(lam, tau, eps, a, b)) < 1e-12) return lam;
    throw numeric_error("refine_root: Newton iteration did not converge");
}

} // namespace zhvdp
