#include "zhvdp/bifurcation.hpp"

#include <cmath>

#include "zhvdp/errors.hpp"

namespace zhvdp {

namespace {

// Region outcome table for the standard Zero-Hopf unfolding restricted to the
// attainable half-plane chi2 >= 0 (the chi2 < 0 half is unreachable because
// chi2 = (a21^2/4) mu1^2). Regions are keyed by the amplitude-system facts
// computed in classify(): whether the r>0 equilibrium exists, whether it is
// stable or a saddle, which side of the torus/heteroclinic pair chi1 sits on,
// and which of the two z-axis points is the trivial equilibrium of the DDE.
struct RegionRule {
    bool pstar_exists;
    int pstar_kind; // 0: none, 1: stable focus/node, 2: unstable focus, 3: saddle
    int het_side;   // only for kind 2: 0: between TB and HET (cycle), 1: beyond
    int trivial;    // 0: trivial is the z-attracting point, 1: the z-repelling one, -1: any
    Prediction out;
};

constexpr RegionRule kRegionTable[] = {
    {true, 1, -1, -1, Prediction::NontrivialEquilibrium},
    {true, 3, -1, -1, Prediction::SaddleStructure},
    {true, 2, 0, -1, Prediction::TorusCandidate},
    {true, 2, 1, -1, Prediction::SourceBeyondHET},
    {false, 0, -1, 0, Prediction::TrivialStable},   // refined by the r-eigenvalue below
    {false, 0, -1, 1, Prediction::TrivialUnstable},
};

Prediction lookup(bool pexists, int pkind, int het_side, int trivial) {
    for (const auto& r : kRegionTable) {
        if (r.pstar_exists != pexists) continue;
        if (r.pstar_kind != pkind) continue;
        if (r.het_side >= 0 && r.het_side != het_side) continue;
        if (r.trivial >= 0 && r.trivial != trivial) continue;
        return r.out;
    }
    return Prediction::TrivialUnstable;
}

} // namespace

std::string to_string(Prediction p) {
    switch (p) {
        case Prediction::TrivialStable: return "TrivialStable";
        case Prediction::TrivialUnstable: return "TrivialUnstable";
        case Prediction::NontrivialEquilibrium: return "NontrivialEquilibrium";
        case Prediction::SaddleStructure: return "SaddleStructure";
        case Prediction::TorusCandidate: return "TorusCandidate";
        case Prediction::SourceBeyondHET: return "SourceBeyondHET";
    }
    return "?";
}

std::string to_string(CaseTag t) {
    switch (t) {
        case CaseTag::I: return "I";
        case CaseTag::II: return "II";
        case CaseTag::III: return "III";
        case CaseTag::IV: return "IV";
    }
    return "?";
}

CurveSet curves(const NormalFormCoefficients& c) {
    const double rA11 = c.a11.real(), rA12 = c.a12.real(), rA13 = c.a13.real();
    if (std::abs(rA13) <= 1e-10 || std::abs(c.a23) <= 1e-10 || std::abs(c.a24) <= 1e-10) {
        throw hypothesis_error("curves: Hypothesis 4.1 violated");
    }
    CurveSet cs;
    cs.hb1 = {rA11, rA12};
    cs.hb2 = {c.a21 * rA13 - c.a24 * rA11, -c.a24 * rA12};
    cs.tb = {rA11 - (c.a21 / (2.0 * c.a24)) * rA13, rA12};
    cs.het_linear = cs.tb;
    const double den = 8.0 * c.a24 + 12.0 * rA13;
    if (std::abs(den) <= 1e-12) {
        throw hypothesis_error("curves: HET denominator 8 a24 + 12 Re[a13] vanishes");
    }
    cs.het_q = c.a21 * c.a21 * rA13 / den;
    return cs;
}

RegionReport classify(double mu1, double mu2, const NormalFormCoefficients& c,
                      const UnfoldingCoefficients& u) {
    RegionReport rep;
    rep.mu1 = mu1;
    rep.mu2 = mu2;
    rep.warn_large_mu = std::hypot(mu1, mu2) > 0.05;
    rep.caseTag = (u.A < 0.0) ? (u.B > 0 ? CaseTag::I : CaseTag::II)
                              : (u.B > 0 ? CaseTag::IV : CaseTag::III);
    rep.chi1 = u.chi1_mu1 * mu1 + u.chi1_mu2 * mu2;
    rep.chi2 = u.chi2_mu1sq * mu1 * mu1;

    const CurveSet cs = curves(c);
    rep.side_hb1 = cs.hb1.c1 * mu1 + cs.hb1.c2 * mu2;
    rep.side_hb2 = cs.hb2.c1 * mu1 + cs.hb2.c2 * mu2;
    rep.side_tb = cs.tb.c1 * mu1 + cs.tb.c2 * mu2;
    rep.side_het = cs.tb.c1 * mu1 + cs.tb.c2 * mu2 - cs.het_q * mu1 * mu1;

    const double A = u.A;
    const double S = std::sqrt(rep.chi2);
    const double lam_up = rep.chi1 + A * S; // r-eigenvalue at the z-attracting point
    rep.trivial_is_upper = (c.a21 * mu1 < 0.0);

    if (rep.chi2 == 0.0) {
        // mu1 = 0: the two z-axis points merge with the trivial equilibrium
        rep.trivial_is_upper = true;
        rep.trivial_stable = rep.chi1 < 0.0;
        rep.companion_stable = rep.trivial_stable;
        rep.prediction = rep.trivial_stable ? Prediction::TrivialStable
                                            : Prediction::TrivialUnstable;
        return rep;
    }

    rep.pstar_exists = (u.B > 0) ? (rep.chi1 * rep.chi1 > A * A * rep.chi2)
                                 : (rep.chi1 * rep.chi1 < A * A * rep.chi2);
    const bool up_stable = lam_up < 0.0; // z-direction already attracting there
    rep.trivial_stable = rep.trivial_is_upper ? up_stable : false;
    rep.companion_stable = rep.trivial_is_upper ? false : up_stable;

    int pkind = 0, het_side = 0;
    if (rep.pstar_exists) {
        const bool det_pos = (A * u.B < 0.0);
        if (!det_pos) {
            pkind = 3; // saddle
            rep.pstar_stable = false;
        } else if (rep.chi1 / A < 0.0) {
            pkind = 1;
            rep.pstar_stable = true;
        } else {
            pkind = 2;
            rep.pstar_stable = false;
            // torus/heteroclinic structure exists only on the B = -1 side
            const double q_chi = (std::abs(c.a21) > 0.0) ? 4.0 * cs.het_q / (c.a21 * c.a21) : 0.0;
            const bool in_cycle_band = (u.B < 0) && (q_chi > 0.0) && (rep.chi1 < q_chi * rep.chi2);
            het_side = in_cycle_band ? 0 : 1;
            if (u.B > 0) {
                // unstable focus with B=+1: no cycle in chi2>=0; attractor is a z-axis point
                rep.prediction = rep.trivial_is_upper && up_stable
                                     ? Prediction::TrivialStable
                                     : Prediction::TrivialUnstable;
                return rep;
            }
        }
    }
    rep.prediction = lookup(rep.pstar_exists, pkind, het_side, rep.trivial_is_upper ? 0 : 1);
    // the z-attracting point still needs its r-eigenvalue checked for the trivial tag
    if (!rep.pstar_exists && rep.trivial_is_upper && !up_stable) {
        rep.prediction = Prediction::TrivialUnstable;
    }
    return rep;
}

std::vector<std::pair<double, double>> sample_curve(const LinearCurve& curve, double quad_q,
                                                    double mu1_lo, double mu1_hi, int samples) {
    if (samples < 2) throw config_error("sample_curve: samples must be >= 2");
    if (std::abs(curve.c2) < 1e-300) {
        throw numeric_error("sample_curve: curve has no mu2(mu1) parametrization");
    }
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double mu1 = (mu1_lo * static_cast<double>(samples - 1 - i) +
                            mu1_hi * static_cast<double>(i)) /
                           (samples - 1);
        pts.emplace_back(mu1, (quad_q * mu1 * mu1 - curve.c1 * mu1) / curve.c2);
    }
    return pts;
}

std::pair<double, double> het_band(const NormalFormCoefficients& c, double mu2) {
    const CurveSet cs = curves(c);
    const double K = cs.tb.c1, R = cs.tb.c2, q = cs.het_q;
    if (std::abs(K) <= 1e-14) throw numeric_error("het_band: TB curve has no mu1 crossing");
    const double mu1_tb = -R * mu2 / K;
    // K mu1 + R mu2 = q mu1^2, root near mu1_tb
    double mu1_het = mu1_tb;
    if (std::abs(q) > 1e-14) {
        const double disc = K * K - 4.0 * q * (-R * mu2);
        if (disc < 0.0) throw numeric_error("het_band: no HET crossing for this mu2");
        const double sq = std::sqrt(disc);
        const double r1 = (K + sq) / (2.0 * q);
        const double r2 = (K - sq) / (2.0 * q);
        mu1_het = (std::abs(r1 - mu1_tb) < std::abs(r2 - mu1_tb)) ? r1 : r2;
    }
    return {std::min(mu1_tb, mu1_het), std::max(mu1_tb, mu1_het)};
}

} // namespace zhvdp
