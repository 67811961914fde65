#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zhvdp/normalform.hpp"

namespace zhvdp {

// Leading-order local bifurcation curves in the (mu1, mu2) plane.
// Linear curves are c1*mu1 + c2*mu2 = 0; HET is c1*mu1 + c2*mu2 = q*mu1^2.
struct LinearCurve {
    double c1 = 0.0, c2 = 0.0;
};

struct CurveSet {
    LinearCurve hb1, hb2, tb;
    LinearCurve het_linear; // identical to tb (tangency at the origin)
    double het_q = 0.0;
    double validity_radius = 0.05; // |mu| beyond which the truncation is untrusted
};

enum class CaseTag { I, II, III, IV }; // (sgn A, B): I: A<0,B=+1 ... IV: A>0,B=+1

enum class Prediction {
    TrivialStable,
    TrivialUnstable,
    NontrivialEquilibrium, // r>0 amplitude equilibrium => periodic orbit of the DDE
    SaddleStructure,
    TorusCandidate,
    SourceBeyondHET,
};

std::string to_string(Prediction p);
std::string to_string(CaseTag t);

struct RegionReport {
    double mu1 = 0.0, mu2 = 0.0;
    CaseTag caseTag = CaseTag::I;
    double chi1 = 0.0, chi2 = 0.0;
    // signed values of the defining forms, for auditability
    double side_hb1 = 0.0, side_hb2 = 0.0, side_tb = 0.0, side_het = 0.0;
    Prediction prediction = Prediction::TrivialStable;
    bool pstar_exists = false;
    bool pstar_stable = false;
    bool trivial_is_upper = false; // trivial equilibrium sits at z = +sqrt(chi2)
    bool trivial_stable = false;
    bool companion_stable = false; // the other z-axis equilibrium
    bool warn_large_mu = false;    // |mu| above the validity radius
};

CurveSet curves(const NormalFormCoefficients& coeffs);

RegionReport classify(double mu1, double mu2, const NormalFormCoefficients& coeffs,
                      const UnfoldingCoefficients& unf);

// For fixed mu2, the mu1 interval between the TB crossing and the HET crossing.
std::pair<double, double> het_band(const NormalFormCoefficients& coeffs, double mu2);

// (mu1, mu2) samples of a curve over [mu1_lo, mu1_hi] for external plotting.
std::vector<std::pair<double, double>> sample_curve(const LinearCurve& curve, double quad_q,
                                                    double mu1_lo, double mu1_hi, int samples);

} // namespace zhvdp
