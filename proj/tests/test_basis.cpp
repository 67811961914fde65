#include <doctest.h>

#include <cmath>

#include "test_rng.hpp"
#include "zhvdp/basis.hpp"
#include "zhvdp/errors.hpp"

using namespace zhvdp;
using zhvdp_test::TestRng;

namespace {

CenterBasis case_one_basis() { return build_basis(zero_hopf_point(0.3, 0.1)); }

double gram_residual(const CenterBasis& b, int n) {
    const auto G = gram_matrix(b, n);
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r = std::max(r, std::abs(G[i][j] - (i == j ? cd(1.0) : cd(0.0))));
    return r;
}

} // namespace

TEST_CASE("structural constants of the basis") {
    const CenterBasis b = case_one_basis();
    // matrix shapes are fixed by the linearization
    CHECK(b.matB[0][0] == 0.0);
    CHECK(b.matB[0][1] == 0.0);
    CHECK(b.matB[1][0] == b.tau0);
    CHECK(b.matB[1][1] == b.a * b.tau0);
    CHECK(b.matA[0][1] == b.tau0);
    CHECK(b.matA[1][0] == -b.tau0);
    CHECK(b.matA[1][1] == b.epsilon * b.tau0);

    // sigma by its defining formula and by the independent eigen-route
    const cd eiO = std::exp(cd(0.0, b.Omega));
    CHECK(std::abs(b.sigma - cd(0.0, b.omega0) / (1.0 - eiO)) < 1e-12);
    const cd sigma_alt = -1.0 / (b.epsilon + b.a * eiO + cd(0.0, b.omega0));
    CHECK(std::abs(b.sigma - sigma_alt) < 1e-12);

    // D1 = 1/(eps + a - tau0), about -0.602 here
    CHECK(b.D1fac == doctest::Approx(1.0 / (0.4 - b.tau0)).epsilon(1e-15));
    CHECK(b.D1fac == doctest::Approx(-0.60228453333351373).epsilon(1e-12));
}

TEST_CASE("D1 singularity guard") {
    // tau0 = eps + a is excluded by the simple-root hypothesis
    ZeroHopfPoint zh = zero_hopf_point(0.3, 0.1);
    zh.tau0 = zh.epsilon + zh.a;
    CHECK_THROWS_AS(build_basis(zh), hypothesis_error);
}

TEST_CASE("bilinear normalization and orthogonality") {
    const CenterBasis b = case_one_basis();
    const int n = 2000;
    CSegment phi1, phi2;
    phi1.samples.resize(n + 1);
    phi2.samples.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        const double th = -1.0 + static_cast<double>(k) / n;
        phi1.samples[k] = b.phi_col(0, th);
        phi2.samples[k] = b.phi_col(2, th);
    }
    CHECK(std::abs(bilinear(0, phi1, b) - cd(1.0)) < 1e-8);
    CHECK(std::abs(bilinear(2, phi1, b)) < 1e-8);
    CHECK(std::abs(bilinear(2, phi2, b) - cd(1.0)) < 1e-8);
    CHECK(std::abs(bilinear(1, phi2, b)) < 1e-8);
}

TEST_CASE("Gram identity and Simpson convergence order") {
    const CenterBasis b = case_one_basis();
    CHECK(gram_residual(b, 2000) < 1e-8);
    // truncation-dominated regime: halving the step gains at least 8x
    const double r8 = gram_residual(b, 8);
    const double r16 = gram_residual(b, 16);
    const double r32 = gram_residual(b, 32);
    CHECK(r8 / r16 >= 8.0);
    CHECK(r16 / r32 >= 8.0);
}

TEST_CASE("Gram identity across random valid parameters") {
    TestRng rng(31);
    int tested = 0;
    while (tested < 12) {
        const double eps = rng.uniform(0.05, 1.3);
        const double a = rng.uniform(-0.9, 0.9);
        if (eps * eps - a * a >= 1.95) continue;
        const ZeroHopfPoint zh = zero_hopf_point(eps, a);
        if (std::abs(zh.tau0 - (eps + a)) < 1e-3) continue;
        CHECK(gram_residual(build_basis(zh), 1024) < 1e-8);
        ++tested;
    }
}

TEST_CASE("projection of the zero-eigenfunction segment") {
    const CenterBasis b = case_one_basis();
    Segment seg;
    seg.samples.assign(257, State2{1.0, 0.0}); // phi2 is the constant (1, 0)
    const CenterCoords cc = project(seg, b);
    CHECK(std::abs(cc.x1) < 1e-8);
    CHECK(cc.x3 == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(cc.r < 1e-8);
    CHECK(cc.z == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("project round-trips center-subspace segments") {
    TestRng rng(32);
    for (int it = 0; it < 40; ++it) {
        const double eps = rng.uniform(0.1, 1.0);
        const double a = rng.uniform(-0.6, 0.6);
        if (eps * eps - a * a >= 1.9) continue;
        const CenterBasis b = build_basis(zero_hopf_point(eps, a));
        const cd x1(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
        const double x3 = rng.uniform(-0.5, 0.5);
        const Segment seg = center_segment(b, x1, x3, 1024);
        const CenterCoords cc = project(seg, b);
        CHECK(std::abs(cc.x1 - x1) < 1e-7);
        CHECK(std::abs(cc.x3 - x3) < 1e-7);
        CHECK(cc.r == doctest::Approx(std::abs(x1)).epsilon(1e-6));
    }
    // the documented example triple
    const CenterBasis b = case_one_basis();
    const Segment seg = center_segment(b, cd(0.3, 0.1), 0.5, 1024);
    const CenterCoords cc = project(seg, b);
    CHECK(std::abs(cc.x1 - cd(0.3, 0.1)) < 1e-7);
    CHECK(cc.x3 == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("polar convention x1 = w1 - i w2") {
    const CenterBasis b = case_one_basis();
    const cd x1(0.2, -0.15); // w1 = 0.2, w2 = 0.15
    const Segment seg = center_segment(b, x1, 0.0, 1024);
    const CenterCoords cc = project(seg, b);
    CHECK(cc.r == doctest::Approx(std::abs(x1)).epsilon(1e-7));
    CHECK(cc.xi == doctest::Approx(std::atan2(0.15, 0.2)).epsilon(1e-6));
}

TEST_CASE("segment sanity checks") {
    const CenterBasis b = case_one_basis();
    Segment odd;
    odd.samples.assign(4, State2{0.0, 0.0}); // N = 3, not Simpson-compatible
    CHECK_THROWS_AS(bilinear(0, odd, b), numeric_error);
}
