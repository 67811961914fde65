#pragma once

#include <cmath>

#include "zhvdp/errors.hpp"

namespace zhvdp {

// Delayed-feedback van der Pol oscillator
//
//   x'' + eps (x^2 - 1) x' + x = g(x'(t - tau), x(t - tau))
//
// with g given exactly by its cubic Maclaurin polynomial. Partials are named
// by the first-order system convention u1 = position, u2 = velocity:
// a = g_{u2}(0,0), b = g_{u1}(0,0), g11 = g_{u1 u1}(0,0), g12 = g_{u1 u2}(0,0),
// and so on. g(0,0) = 0 is implicit.
struct OscillatorConfig {
    double epsilon = 0.0;
    double a = 0.0;
    double b = 1.0;
    double tau = 1.0;
    double g11 = 0.0, g12 = 0.0, g22 = 0.0;
    double g111 = 0.0, g112 = 0.0, g122 = 0.0, g222 = 0.0;
};

struct State2 {
    double u1 = 0.0; // position x
    double u2 = 0.0; // velocity x'
};

inline State2 operator+(State2 p, State2 q) { return {p.u1 + q.u1, p.u2 + q.u2}; }
inline State2 operator*(double s, State2 p) { return {s * p.u1, s * p.u2}; }

inline void validate(const OscillatorConfig& cfg) {
    if (!(cfg.epsilon > 0.0)) throw config_error("epsilon must be > 0");
    if (!(cfg.tau > 0.0)) throw config_error("tau must be > 0");
    for (double v : {cfg.epsilon, cfg.a, cfg.b, cfg.tau, cfg.g11, cfg.g12, cfg.g22,
                     cfg.g111, cfg.g112, cfg.g122, cfg.g222}) {
        if (!std::isfinite(v)) throw config_error("oscillator parameters must be finite");
    }
}

// Cubic Maclaurin polynomial of g evaluated at the delayed state (u1d, u2d).
inline double taylor_g(double u1d, double u2d, const OscillatorConfig& c) {
    return c.a * u2d + c.b * u1d
         + 0.5 * c.g11 * u1d * u1d + c.g12 * u1d * u2d + 0.5 * c.g22 * u2d * u2d
         + (1.0 / 6.0) * c.g111 * u1d * u1d * u1d
         + 0.5 * c.g112 * u1d * u1d * u2d
         + 0.5 * c.g122 * u1d * u2d * u2d
         + (1.0 / 6.0) * c.g222 * u2d * u2d * u2d;
}

// First-order system right-hand side:
//   u1' = u2
//   u2' = -u1 - eps (u1^2 - 1) u2 + g(u2(t-tau), u1(t-tau))
inline State2 rhs(State2 now, State2 delayed, const OscillatorConfig& c) {
    return {now.u2,
            -now.u1 - c.epsilon * (now.u1 * now.u1 - 1.0) * now.u2
                + taylor_g(delayed.u1, delayed.u2, c)};
}

} // namespace zhvdp
