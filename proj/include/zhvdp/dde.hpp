#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "zhvdp/basis.hpp"
#include "zhvdp/model.hpp"
#include "zhvdp/spectrum.hpp"

namespace zhvdp {

// Constant initial history on [-tau, 0].
struct HistorySpec {
    double x0 = 0.0;
    double v0 = 0.0;
};

// Fixed-grid method-of-steps trajectory: states at t0 + k h, with N h = tau
// exactly so that delayed main-step lookups land on grid indices.
struct Trajectory {
    double t0 = 0.0;
    double step = 0.0;
    double delay = 0.0;
    int stepsPerDelay = 0;
    std::vector<State2> states; // index 0 is t = t0 - tau (history start)
    bool blown = false;
    double blow_time = 0.0;

    double time_of(std::size_t k) const { return t0 - delay + static_cast<double>(k) * step; }
    std::size_t index_of_t0() const { return static_cast<std::size_t>(stepsPerDelay); }
};

// Cubic Hermite on one grid interval; m0, m1 are slopes already scaled by the
// step. At s = 0 and s = 1 the basis is exact (weights 1/0), so evaluating at
// the nodes reproduces the stored states bitwise.
template <class State>
State hermite_at(double s, const State& p0, const State& p1, const State& m0, const State& m1) {
    const double h00 = (2.0 * s - 3.0) * s * s + 1.0;
    const double h10 = ((s - 2.0) * s + 1.0) * s;
    const double h01 = (3.0 - 2.0 * s) * s * s;
    const double h11 = (s - 1.0) * s * s;
    return h00 * p0 + h01 * p1 + h10 * m0 + h11 * m1;
}

// Classical RK4 over one fixed-delay system; delayed values at stage time
// t + h/2 via cubic Hermite between grid points. History is supplied as N+1
// samples on [-tau, 0] together with their derivatives; the derivative jump
// at t = 0 is respected by keeping the history-side derivatives separate from
// the RHS-side ones. The State type needs operator+ and double*State.
// Deterministic: fixed step, no adaptivity.
//
// rhs(now, delayed) -> State; norm_of(state) -> double feeds the blow-up guard
// (pass +inf to disable).
struct DdeRun {
    bool blown = false;
    std::size_t blow_index = 0;
};

template <class State, class Rhs, class Norm>
DdeRun integrate_fixed_delay(Rhs&& rhs, Norm&& norm_of, const std::vector<State>& history,
                             const std::vector<State>& history_derivs, double tau, int N,
                             std::size_t total_steps, double blow_threshold,
                             std::vector<State>& S) {
    DdeRun out;
    const double h = tau / N;
    const auto nidx = static_cast<std::size_t>(N);
    S.resize(nidx + 1 + total_steps);
    std::vector<State> D(S.size()); // right-limit derivatives for Hermite
    for (std::size_t k = 0; k <= nidx; ++k) S[k] = history[k];
    for (std::size_t k = 0; k <= nidx; ++k) D[k] = history_derivs[k];
    for (std::size_t k = nidx; k < nidx + total_steps; ++k) {
        const State& y = S[k];
        const State& d0 = S[k - nidx];
        const State& d1 = S[k - nidx + 1];
        State dh;
        if (k - nidx + 1 <= nidx) {
            // interval fully inside the history: use the history derivatives
            const std::size_t j = k - nidx;
            dh = hermite_at(0.5, history[j], history[j + 1], h * history_derivs[j],
                            h * history_derivs[j + 1]);
        } else {
            dh = hermite_at(0.5, d0, d1, h * D[k - nidx], h * D[k - nidx + 1]);
        }
        const State k1 = rhs(y, d0);
        const State k2 = rhs(y + (0.5 * h) * k1, dh);
        const State k3 = rhs(y + (0.5 * h) * k2, dh);
        const State k4 = rhs(y + h * k3, d1);
        S[k + 1] = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        D[k] = k1;
        if (norm_of(S[k + 1]) > blow_threshold) {
            out.blown = true;
            out.blow_index = k + 1;
            S.resize(k + 2);
            return out;
        }
    }
    return out;
}

// Integrates the unfolded oscillator: b = 1 + mu1, tau = tau0(eps, a) + mu2.
Trajectory simulate(const OscillatorConfig& cfg, double mu1, double mu2, HistorySpec hist,
                    double tEnd, int N);

// Grid samples on [t - tau, t] as a scaled-theta segment for basis::project.
Segment segment_at(const Trajectory& traj, double t);

enum class Verdict { DecaysToZero, Periodic, Growing, Undetermined };

std::string to_string(Verdict v);

struct AmplitudeMetrics {
    double steadyAmplitude = 0.0;
    double period = std::numeric_limits<double>::quiet_NaN();
    Verdict verdict = Verdict::Undetermined;
    int peaks = 0;
    double final_x = 0.0; // x at the last sample, for steady-state checks
};

// Trailing-window amplitude/period summary: DecaysToZero if the window
// amplitude is below 1e-4, Growing if the trailing max exceeds twice the
// mid-run max, Periodic if >= 5 peaks agree in height (<2%) and spacing (<1%).
AmplitudeMetrics amplitude_metrics(const Trajectory& traj, double tailFraction);

} // namespace zhvdp
