#include <doctest.h>

#include "zhvdp/analysis.hpp"
#include "zhvdp/errors.hpp"
#include "zhvdp/sweep.hpp"

using namespace zhvdp;

namespace {

AnalysisReport rep_one() {
    OscillatorConfig c;
    c.epsilon = 0.3;
    c.a = 0.1;
    c.b = 1.0;
    c.tau = 2.06;
    c.g11 = -0.4;
    c.g12 = 0.2;
    c.g22 = 0.4;
    return run_analysis(c);
}

} // namespace

TEST_CASE("parallel sweep matches the serial reference exactly") {
    const AnalysisReport r = rep_one();
    const SweepSpec spec{-0.004, 0.004, 37, -0.004, 0.004, 29};
    const auto a = sweep_classify_serial(r.nf, r.unf, spec);
    const auto b = sweep_classify(r.nf, r.unf, spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].mu1 == b[i].mu1);
        CHECK(a[i].mu2 == b[i].mu2);
        CHECK(a[i].chi1 == b[i].chi1);
        CHECK(a[i].chi2 == b[i].chi2);
        CHECK(a[i].prediction == b[i].prediction);
        CHECK(a[i].side_hb1 == b[i].side_hb1);
        CHECK(a[i].side_het == b[i].side_het);
    }
}

TEST_CASE("3x3 grid rows agree with pointwise classification") {
    const AnalysisReport r = rep_one();
    const SweepSpec spec{-0.002, 0.002, 3, -0.002, 0.002, 3};
    const auto rows = sweep_classify(r.nf, r.unf, spec);
    REQUIRE(rows.size() == 9);
    for (const auto& row : rows) {
        const RegionReport single = classify(row.mu1, row.mu2, r.nf, r.unf);
        CHECK(row.prediction == single.prediction);
        CHECK(row.chi1 == single.chi1);
    }
    // center row is the origin with all-zero side signs
    const RegionReport& origin = rows[4];
    CHECK(origin.mu1 == 0.0);
    CHECK(origin.mu2 == 0.0);
    CHECK(origin.side_hb1 == 0.0);
    CHECK(origin.side_hb2 == 0.0);
    CHECK(origin.side_tb == 0.0);
    CHECK(origin.side_het == 0.0);
}

TEST_CASE("chi2 column is even in mu1 on a symmetric grid") {
    const AnalysisReport r = rep_one();
    const SweepSpec spec{-0.003, 0.003, 11, -0.001, 0.001, 3};
    const auto rows = sweep_classify(r.nf, r.unf, spec);
    for (int i2 = 0; i2 < spec.n2; ++i2) {
        for (int i1 = 0; i1 < spec.n1; ++i1) {
            const auto& left = rows[static_cast<std::size_t>(i2) * spec.n1 + i1];
            const auto& right =
                rows[static_cast<std::size_t>(i2) * spec.n1 + (spec.n1 - 1 - i1)];
            CHECK(left.chi2 == right.chi2);
        }
    }
}

TEST_CASE("grid size gate") {
    const AnalysisReport r = rep_one();
    CHECK_THROWS_AS(sweep_classify(r.nf, r.unf, SweepSpec{0, 1, 2000, 0, 1, 2000}),
                    config_error);
    CHECK_THROWS_AS(sweep_classify(r.nf, r.unf, SweepSpec{0, 1, 0, 0, 1, 3}), config_error);
}
