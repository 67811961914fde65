#include "zhvdp/dde.hpp"

#include <algorithm>
#include <limits>

#include "zhvdp/errors.hpp"

namespace zhvdp {

Trajectory simulate(const OscillatorConfig& cfg, double mu1, double mu2, HistorySpec hist,
                    double tEnd, int N) {
    validate(cfg);
    if (N < 40 || N % 2 != 0) {
        throw config_error("simulate: steps per delay must be even and >= 40");
    }
    if (!(tEnd > 0.0)) throw config_error("simulate: tEnd must be > 0");
    const ZeroHopfPoint zh = zero_hopf_point(cfg.epsilon, cfg.a);
    const double tau = zh.tau0 + mu2;
    if (!(tau > 0.0)) throw config_error("simulate: tau0 + mu2 must be > 0");
    const double b_eff = 1.0 + mu1;

    OscillatorConfig run = cfg;
    run.b = b_eff;
    run.tau = tau;
    const auto f = [&run](const State2& now, const State2& delayed) {
        return rhs(now, delayed, run);
    };
    const auto nrm = [](const State2& s) { return std::max(std::abs(s.u1), std::abs(s.u2)); };

    const double h = tau / N;
    const auto steps = static_cast<std::size_t>(std::ceil(tEnd / h - 1e-12));
    const std::vector<State2> history(static_cast<std::size_t>(N) + 1, State2{hist.x0, hist.v0});
    const std::vector<State2> history_derivs(history.size(), State2{0.0, 0.0});

    Trajectory traj;
    traj.t0 = 0.0;
    traj.step = h;
    traj.delay = tau;
    traj.stepsPerDelay = N;
    const DdeRun res =
        integrate_fixed_delay(f, nrm, history, history_derivs, tau, N, steps, 1e6, traj.states);
    traj.blown = res.blown;
    traj.blow_time = res.blown ? traj.time_of(res.blow_index) : 0.0;
    return traj;
}

Segment segment_at(const Trajectory& traj, double t) {
    const double pos = (t - traj.t0 + traj.delay) / traj.step;
    const auto k = static_cast<long long>(std::llround(pos));
    if (std::abs(pos - static_cast<double>(k)) > 1e-6) {
        throw numeric_error("segment_at: t is not on the trajectory grid");
    }
    const int N = traj.stepsPerDelay;
    if (k < N || k >= static_cast<long long>(traj.states.size())) {
        throw numeric_error("segment_at: t out of range (need t0 <= t - tau)");
    }
    Segment seg;
    seg.samples.assign(traj.states.begin() + (k - N), traj.states.begin() + (k + 1));
    return seg;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::DecaysToZero: return "DecaysToZero";
        case Verdict::Periodic: return "Periodic";
        case Verdict::Growing: return "Growing";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

AmplitudeMetrics amplitude_metrics(const Trajectory& traj, double tailFraction) {
    if (!(tailFraction > 0.0 && tailFraction <= 0.5)) {
        throw config_error("amplitude_metrics: tailFraction must be in (0, 0.5]");
    }
    AmplitudeMetrics m;
    const auto& S = traj.states;
    const std::size_t n = S.size();
    m.final_x = S.back().u1;
    if (traj.blown) {
        m.verdict = Verdict::Growing;
        m.steadyAmplitude = std::numeric_limits<double>::infinity();
        return m;
    }
    const auto tail_begin = static_cast<std::size_t>(static_cast<double>(n) * (1.0 - tailFraction));
    double tail_max = 0.0;
    for (std::size_t k = tail_begin; k < n; ++k) tail_max = std::max(tail_max, std::abs(S[k].u1));
    m.steadyAmplitude = tail_max;

    double mid_max = 0.0;
    for (std::size_t k = n / 3; k < 2 * n / 3; ++k) mid_max = std::max(mid_max, std::abs(S[k].u1));

    if (tail_max < 1e-4) {
        m.verdict = Verdict::DecaysToZero;
        return m;
    }
    if (tail_max > 2.0 * mid_max) {
        m.verdict = Verdict::Growing;
        return m;
    }

    // maxima of x(t) in the tail window, quadratic subgrid interpolation
    std::vector<double> peak_t, peak_x;
    for (std::size_t k = std::max<std::size_t>(tail_begin, 1); k + 1 < n; ++k) {
        const double a = S[k - 1].u1, b = S[k].u1, c = S[k + 1].u1;
        if (b >= a && b > c) {
            const double denom = a - 2.0 * b + c;
            const double frac = (std::abs(denom) > 1e-300) ? 0.5 * (a - c) / denom : 0.0;
            peak_t.push_back(traj.time_of(k) + frac * traj.step);
            peak_x.push_back(b - 0.25 * (a - c) * frac);
        }
    }
    m.peaks = static_cast<int>(peak_t.size());
    if (m.peaks < 5) {
        m.verdict = Verdict::Undetermined;
        return m;
    }
    double hmin = peak_x[0], hmax = peak_x[0];
    for (double v : peak_x) {
        hmin = std::min(hmin, v);
        hmax = std::max(hmax, v);
    }
    std::vector<double> gaps(peak_t.size() - 1);
    for (std::size_t i = 0; i + 1 < peak_t.size(); ++i) gaps[i] = peak_t[i + 1] - peak_t[i];
    double gmin = gaps[0], gmax = gaps[0], gsum = 0.0;
    for (double g : gaps) {
        gmin = std::min(gmin, g);
        gmax = std::max(gmax, g);
        gsum += g;
    }
    m.period = gsum / static_cast<double>(gaps.size());
    const double href = std::max(std::abs(hmax), 1e-300);
    const bool heights_ok = (hmax - hmin) <= 0.02 * href;
    const bool periods_ok = (gmax - gmin) <= 0.01 * std::abs(m.period);
    m.verdict = (heights_ok && periods_ok) ? Verdict::Periodic : Verdict::Undetermined;
    return m;
}

} // namespace zhvdp
