#include <doctest.h>

#include <cmath>
#include <vector>

#include "test_rng.hpp"
#include "zhvdp/dde.hpp"
#include "zhvdp/errors.hpp"
#include "zhvdp/io.hpp"

using namespace zhvdp;
using zhvdp_test::TestRng;

namespace {

OscillatorConfig case_one() {
    OscillatorConfig c;
    c.epsilon = 0.3;
    c.a = 0.1;
    c.b = 1.0;
    c.g11 = -0.4;
    c.g12 = 0.2;
    c.g22 = 0.4;
    c.tau = 2.06;
    return c;
}

// Exact method-of-steps solution of x' = -x(t-1), x = 1 on [-1, 0]:
// piecewise polynomials, integrated segment by segment in exact arithmetic
// over doubles (degree <= horizon).
struct Poly {
    std::vector<double> c; // c[i] * t^i
    double eval(double t) const {
        double v = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * t + c[i];
        return v;
    }
};

Poly shift_minus_one(const Poly& p) {
    // q(t) = p(t - 1) via binomial expansion
    Poly q;
    q.c.assign(p.c.size(), 0.0);
    for (std::size_t n = 0; n < p.c.size(); ++n) {
        double binom = 1.0, sign = 1.0;
        for (std::size_t k = 0; k <= n; ++k) {
            // coefficient of t^k in (t - 1)^n
            q.c[k] += p.c[n] * binom * ((n - k) % 2 == 0 ? 1.0 : -1.0);
            binom = binom * static_cast<double>(n - k) / static_cast<double>(k + 1);
            (void)sign;
        }
    }
    return q;
}

Poly antideriv(const Poly& p) {
    Poly q;
    q.c.assign(p.c.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.c.size(); ++i) q.c[i + 1] = p.c[i] / static_cast<double>(i + 1);
    return q;
}

// segments[k] is valid on [k, k+1], with segments[-1] represented as constant 1
std::vector<Poly> exact_segments(int horizon) {
    std::vector<Poly> segs;
    Poly prev;
    prev.c = {1.0}; // history
    double left_value = 1.0;
    for (int k = 0; k < horizon; ++k) {
        const Poly forcing = shift_minus_one(prev); // x(t-1) on [k, k+1]
        const Poly F = antideriv(forcing);
        Poly cur = F;
        for (double& cc : cur.c) cc = -cc;
        cur.c[0] += left_value + F.eval(static_cast<double>(k));
        left_value = cur.eval(static_cast<double>(k + 1));
        segs.push_back(cur);
        prev = cur;
    }
    return segs;
}

double exact_solution(const std::vector<Poly>& segs, double t) {
    if (t <= 0.0) return 1.0;
    auto k = static_cast<std::size_t>(t);
    if (k >= segs.size()) k = segs.size() - 1;
    if (t < static_cast<double>(k)) --k;
    return segs[k].eval(t);
}

double linear_dde_max_error(int N, const std::vector<Poly>& segs) {
    const auto f = [](double /*now*/, double delayed) { return -delayed; };
    const auto nrm = [](double v) { return std::abs(v); };
    const std::vector<double> hist(static_cast<std::size_t>(N) + 1, 1.0);
    const std::vector<double> histd(hist.size(), 0.0);
    std::vector<double> S;
    integrate_fixed_delay(f, nrm, hist, histd, 1.0, N, static_cast<std::size_t>(5) * N, 1e12, S);
    double err = 0.0;
    const double h = 1.0 / N;
    for (std::size_t k = N; k < S.size(); ++k) {
        const double t = (static_cast<double>(k) - N) * h;
        err = std::max(err, std::abs(S[k] - exact_solution(segs, t)));
    }
    return err;
}

} // namespace

TEST_CASE("hermite basis is exact at the nodes") {
    TestRng rng(61);
    for (int it = 0; it < 50; ++it) {
        const double p0 = rng.uniform(-2, 2), p1 = rng.uniform(-2, 2);
        const double m0 = rng.uniform(-2, 2), m1 = rng.uniform(-2, 2);
        CHECK(hermite_at(0.0, p0, p1, m0, m1) == p0);
        CHECK(hermite_at(1.0, p0, p1, m0, m1) == p1);
    }
}

TEST_CASE("linear oracle: closed-form values and fourth-order convergence") {
    const auto segs = exact_segments(5);
    CHECK(exact_solution(segs, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(exact_solution(segs, 2.0) == doctest::Approx(-0.5).epsilon(1e-15));

    const double e20 = linear_dde_max_error(20, segs);
    const double e40 = linear_dde_max_error(40, segs);
    const double e80 = linear_dde_max_error(80, segs);
    const double e160 = linear_dde_max_error(160, segs);
    CHECK(e20 / e40 >= 14.0);
    CHECK(e40 / e80 >= 14.0);
    CHECK(e80 / e160 >= 14.0);

    // x(2) = -0.5 to the discretization error of the finest run
    const auto f = [](double, double delayed) { return -delayed; };
    const auto nrm = [](double v) { return std::abs(v); };
    const int N = 160;
    const std::vector<double> hist(N + 1, 1.0), histd(N + 1, 0.0);
    std::vector<double> S;
    integrate_fixed_delay(f, nrm, hist, histd, 1.0, N, static_cast<std::size_t>(5) * N, 1e12, S);
    CHECK(std::abs(S[3 * N] - (-0.5)) <= e160 + 1e-15);
}

TEST_CASE("zero history stays exactly at the origin") {
    const Trajectory traj = simulate(case_one(), -0.0018, 0.0032, {0.0, 0.0}, 50.0, 64);
    for (const State2& s : traj.states) {
        CHECK(s.u1 == 0.0);
        CHECK(s.u2 == 0.0);
    }
    CHECK_FALSE(traj.blown);
}

TEST_CASE("simulation is deterministic") {
    const Trajectory a = simulate(case_one(), -0.0018, 0.0032, {0.1, 0.0}, 80.0, 128);
    const Trajectory b = simulate(case_one(), -0.0018, 0.0032, {0.1, 0.0}, 80.0, 128);
    CHECK(trajectory_hash(a) == trajectory_hash(b));
    CHECK(a.states.size() == b.states.size());
}

TEST_CASE("blow-up is flagged with a truncated trajectory") {
    OscillatorConfig c;
    c.epsilon = 0.3;
    c.a = -0.2;
    c.b = 1.0;
    c.g11 = -0.4;
    c.g12 = -0.2;
    c.g22 = -0.4;
    c.tau = 1.76;
    const Trajectory traj = simulate(c, 0.0019, -0.003, {-0.5, 0.0}, 2000.0, 128);
    CHECK(traj.blown);
    CHECK(traj.states.size() < 2000.0 / traj.step);
    const AmplitudeMetrics m = amplitude_metrics(traj, 0.3);
    CHECK(m.verdict == Verdict::Growing);
}

TEST_CASE("segment_at contracts") {
    const Trajectory traj = simulate(case_one(), 0.0, 0.0, {0.0, 0.0}, 30.0, 64);
    const Segment seg = segment_at(traj, traj.delay);
    CHECK(seg.samples.size() == 65);
    for (const State2& s : seg.samples) CHECK(s.u1 == 0.0);
    CHECK_THROWS_AS(segment_at(traj, traj.delay + 0.3 * traj.step), numeric_error);
    CHECK_THROWS_AS(segment_at(traj, -0.5), numeric_error);
    CHECK_THROWS_AS(segment_at(traj, 1e9), numeric_error);
}

TEST_CASE("center-seeded run drifts less than 1e-3 over one delay at criticality") {
    const OscillatorConfig cfg = [] {
        OscillatorConfig c = case_one();
        c.tau = zero_hopf_point(c.epsilon, c.a).tau0;
        return c;
    }();
    const CenterBasis bas = build_basis(zero_hopf_point(cfg.epsilon, cfg.a));
    const int N = 1024;
    const double t0 = bas.tau0;
    const cd x10(0.012, -0.007);
    const double x30 = 0.015;
    std::vector<State2> hist(N + 1), histd(N + 1);
    for (int k = 0; k <= N; ++k) {
        const double th = -1.0 + static_cast<double>(k) / N;
        const cd e = std::exp(cd(0.0, bas.Omega * th));
        hist[k] = {2.0 * (x10 * e).real() + x30, -2.0 * bas.omega0 * (x10 * e).imag()};
        histd[k] = {2.0 * (x10 * cd(0.0, bas.Omega) * e).real() / t0,
                    -2.0 * bas.omega0 * (x10 * cd(0.0, bas.Omega) * e).imag() / t0};
    }
    const auto f = [&](const State2& now, const State2& dly) { return rhs(now, dly, cfg); };
    const auto nrm = [](const State2& s) { return std::max(std::abs(s.u1), std::abs(s.u2)); };
    std::vector<State2> S;
    integrate_fixed_delay(f, nrm, hist, histd, t0, N, static_cast<std::size_t>(N), 1e6, S);
    Segment seg;
    seg.samples.assign(S.begin() + N, S.begin() + 2 * N + 1);
    const CenterCoords cc = project(seg, bas);
    // the linearized center flow advances x1 by e^{i Omega} per delay, x3 not at all
    CHECK(std::abs(cc.x1 - x10 * std::exp(cd(0.0, bas.Omega))) < 1e-3);
    CHECK(std::abs(cc.x3 - x30) < 1e-3);
}

TEST_CASE("amplitude metrics on synthetic signals") {
    const auto synth = [](double (*fx)(double), double tEnd, double h) {
        Trajectory t;
        t.step = h;
        t.delay = 1.0;
        t.stepsPerDelay = static_cast<int>(1.0 / h);
        const auto n = static_cast<std::size_t>(tEnd / h);
        t.states.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            t.states[k] = {fx(static_cast<double>(k) * h), 0.0};
        }
        return t;
    };

    // all-zero signal
    const Trajectory zero = synth([](double) { return 0.0; }, 200.0, 0.01);
    const AmplitudeMetrics mz = amplitude_metrics(zero, 0.3);
    CHECK(mz.verdict == Verdict::DecaysToZero);
    CHECK(mz.steadyAmplitude == 0.0);
    CHECK(std::isnan(mz.period));

    // clean periodic signal, period 2*pi/1.3
    const Trajectory per = synth([](double t) { return 0.02 * std::sin(1.3 * t); }, 400.0, 0.01);
    const AmplitudeMetrics mp = amplitude_metrics(per, 0.3);
    CHECK(mp.verdict == Verdict::Periodic);
    CHECK(mp.period == doctest::Approx(2.0 * M_PI / 1.3).epsilon(1e-4));

    // exponential growth
    const Trajectory grw =
        synth([](double t) { return 1e-3 * std::exp(0.01 * t) * std::sin(1.3 * t); }, 400.0, 0.01);
    CHECK(amplitude_metrics(grw, 0.2).verdict == Verdict::Growing);

    // too few peaks in the window
    const Trajectory slow = synth([](double t) { return 0.02 * std::sin(0.01 * t); }, 100.0, 0.01);
    CHECK(amplitude_metrics(slow, 0.3).verdict == Verdict::Undetermined);

    CHECK_THROWS_AS(amplitude_metrics(zero, 0.0), config_error);
    CHECK_THROWS_AS(amplitude_metrics(zero, 0.7), config_error);
}

TEST_CASE("simulate input gates") {
    CHECK_THROWS_AS(simulate(case_one(), 0.0, 0.0, {0.1, 0.0}, 10.0, 30), config_error);
    CHECK_THROWS_AS(simulate(case_one(), 0.0, 0.0, {0.1, 0.0}, 10.0, 65), config_error);
    CHECK_THROWS_AS(simulate(case_one(), 0.0, -5.0, {0.1, 0.0}, 10.0, 64), config_error);
    CHECK_THROWS_AS(simulate(case_one(), 0.0, 0.0, {0.1, 0.0}, -1.0, 64), config_error);
}
