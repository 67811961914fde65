#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zhvdp/bifurcation.hpp"
#include "zhvdp/normalform.hpp"

namespace zhvdp {

// Everything the analyze pipeline produces for one oscillator at criticality.
struct AnalysisReport {
    ZeroHopfPoint zh;
    cd sigma;
    cd Dfac;
    double D1fac = 0.0;
    NormalFormCoefficients nf;
    CylindricalCoefficients cyl;
    UnfoldingCoefficients unf;
    CurveSet curveset;
    CaseTag caseTag = CaseTag::I;
    // diagnostics
    double gram_residual = 0.0;
    double h_ode_residual = 0.0;
    double h_bc_residual = 0.0;
    double h_orth_residual = 0.0;
    double delta_residual = 0.0; // |Delta(i w0, tau0)|
};

// spectrum -> basis -> normalform -> bifurcation. Requires b = 1.
AnalysisReport run_analysis(const OscillatorConfig& cfg);

// Flat dotted key/value view of the report, 17 significant digits.
std::vector<std::pair<std::string, std::string>> report_kv(const AnalysisReport& rep);

// Human-readable report text.
std::string report_text(const AnalysisReport& rep);

} // namespace zhvdp
