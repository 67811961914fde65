#include "zhvdp/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "zhvdp/errors.hpp"

namespace zhvdp {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void push(std::vector<std::pair<std::string, std::string>>& kv, const std::string& key, double v) {
    kv.emplace_back(key, fmt17(v));
}

void push_c(std::vector<std::pair<std::string, std::string>>& kv, const std::string& key, cd v) {
    push(kv, key + ".re", v.real());
    push(kv, key + ".im", v.imag());
}

} // namespace

AnalysisReport run_analysis(const OscillatorConfig& cfg) {
    validate(cfg);
    if (std::abs(cfg.b - 1.0) > 1e-12) {
        throw config_error("criticality requires b = 1");
    }
    AnalysisReport rep;
    rep.zh = zero_hopf_point(cfg.epsilon, cfg.a);
    rep.delta_residual =
        std::abs(eval_delta(cd(0.0, rep.zh.omega0), rep.zh.tau0, cfg.epsilon, cfg.a, 1.0));
    const CenterBasis basis = build_basis(rep.zh);
    rep.sigma = basis.sigma;
    rep.Dfac = basis.Dfac;
    rep.D1fac = basis.D1fac;

    const auto G = gram_matrix(basis, 2000);
    double gerr = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            gerr = std::max(gerr, std::abs(G[i][j] - (i == j ? cd(1.0) : cd(0.0))));
    rep.gram_residual = gerr;

    HSolution hs;
    rep.nf = compute_normal_form(basis, cfg, &hs);
    rep.h_ode_residual = hs.max_ode_residual();
    rep.h_bc_residual = hs.max_bc_residual();
    rep.h_orth_residual = hs.max_orth_residual();

    rep.cyl = cylindrical(rep.nf);
    rep.unf = unfolding(rep.cyl);
    rep.curveset = curves(rep.nf);
    rep.caseTag = (rep.unf.A < 0.0) ? (rep.unf.B > 0 ? CaseTag::I : CaseTag::II)
                                    : (rep.unf.B > 0 ? CaseTag::IV : CaseTag::III);
    return rep;
}

std::vector<std::pair<std::string, std::string>> report_kv(const AnalysisReport& r) {
    std::vector<std::pair<std::string, std::string>> kv;
    push(kv, "zerohopf.omega0", r.zh.omega0);
    push(kv, "zerohopf.tau0", r.zh.tau0);
    push(kv, "zerohopf.epsilon", r.zh.epsilon);
    push(kv, "zerohopf.a", r.zh.a);
    push_c(kv, "basis.sigma", r.sigma);
    push_c(kv, "basis.D", r.Dfac);
    push(kv, "basis.D1", r.D1fac);
    push_c(kv, "nf.a11", r.nf.a11);
    push_c(kv, "nf.a12", r.nf.a12);
    push_c(kv, "nf.a13", r.nf.a13);
    push(kv, "nf.a21", r.nf.a21);
    push(kv, "nf.a22", r.nf.a22);
    push(kv, "nf.a23", r.nf.a23);
    push(kv, "nf.a24", r.nf.a24);
    push_c(kv, "nf.b11", r.nf.b11);
    push_c(kv, "nf.b12", r.nf.b12);
    push_c(kv, "nf.c11", r.nf.c11);
    push_c(kv, "nf.c12", r.nf.c12);
    push_c(kv, "nf.d11", r.nf.d11);
    push_c(kv, "nf.d12", r.nf.d12);
    push_c(kv, "nf.e11", r.nf.e11);
    push_c(kv, "nf.e12", r.nf.e12);
    push_c(kv, "nf.m11", r.nf.m11);
    push_c(kv, "nf.m12", r.nf.m12);
    push_c(kv, "nf.n11", r.nf.n11);
    push_c(kv, "nf.n12", r.nf.n12);
    push(kv, "nf.b21", r.nf.b21);
    push(kv, "nf.b22", r.nf.b22);
    push(kv, "nf.c21", r.nf.c21);
    push(kv, "nf.c22", r.nf.c22);
    push(kv, "nf.d21", r.nf.d21);
    push(kv, "nf.d22", r.nf.d22);
    push(kv, "nf.e21", r.nf.e21);
    push(kv, "nf.e22", r.nf.e22);
    push(kv, "nf.m21", r.nf.m21);
    push(kv, "nf.m22", r.nf.m22);
    push(kv, "nf.n21", r.nf.n21);
    push(kv, "nf.n22", r.nf.n22);
    push(kv, "cyl.beta11", r.cyl.beta11);
    push(kv, "cyl.beta30", r.cyl.beta30);
    push(kv, "cyl.beta12", r.cyl.beta12);
    push(kv, "cyl.gamma20", r.cyl.gamma20);
    push(kv, "cyl.gamma02", r.cyl.gamma02);
    push(kv, "cyl.gamma21", r.cyl.gamma21);
    push(kv, "cyl.gamma03", r.cyl.gamma03);
    push(kv, "unfolding.A", r.unf.A);
    kv.emplace_back("unfolding.B", r.unf.B > 0 ? "1" : "-1");
    push(kv, "unfolding.chi1_mu1", r.unf.chi1_mu1);
    push(kv, "unfolding.chi1_mu2", r.unf.chi1_mu2);
    push(kv, "unfolding.chi2_mu1sq", r.unf.chi2_mu1sq);
    push(kv, "unfolding.eta2_mu1sq", r.unf.eta2_mu1sq);
    push(kv, "unfolding.delta_mu1", r.unf.delta_mu1);
    kv.emplace_back("unfolding.case", to_string(r.caseTag));
    push(kv, "curves.hb1.c1", r.curveset.hb1.c1);
    push(kv, "curves.hb1.c2", r.curveset.hb1.c2);
    push(kv, "curves.hb2.c1", r.curveset.hb2.c1);
    push(kv, "curves.hb2.c2", r.curveset.hb2.c2);
    push(kv, "curves.tb.c1", r.curveset.tb.c1);
    push(kv, "curves.tb.c2", r.curveset.tb.c2);
    push(kv, "curves.het.q", r.curveset.het_q);
    push(kv, "diagnostics.delta_residual", r.delta_residual);
    push(kv, "diagnostics.gram_residual", r.gram_residual);
    push(kv, "diagnostics.h_ode_residual", r.h_ode_residual);
    push(kv, "diagnostics.h_bc_residual", r.h_bc_residual);
    push(kv, "diagnostics.h_orth_residual", r.h_orth_residual);
    return kv;
}

std::string report_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "Zero-Hopf analysis\n"
       << "  critical point: omega0 = " << fmt17(r.zh.omega0) << ", tau0 = " << fmt17(r.zh.tau0)
       << "\n"
       << "  |Delta(i omega0, tau0)| = " << r.delta_residual << "\n"
       << "  Gram residual = " << r.gram_residual << ", h residuals (ode/bc/orth) = "
       << r.h_ode_residual << " / " << r.h_bc_residual << " / " << r.h_orth_residual << "\n"
       << "  unfolding: A = " << fmt17(r.unf.A) << ", B = " << r.unf.B << " (case "
       << to_string(r.caseTag) << ")\n"
       << "  chi1 = " << fmt17(r.unf.chi1_mu1) << " mu1 + " << fmt17(r.unf.chi1_mu2) << " mu2, "
       << "chi2 = " << fmt17(r.unf.chi2_mu1sq) << " mu1^2\n"
       << "  curves: HB1 " << fmt17(r.curveset.hb1.c1) << " mu1 + " << fmt17(r.curveset.hb1.c2)
       << " mu2 = 0\n"
       << "          HB2 " << fmt17(r.curveset.hb2.c1) << " mu1 + " << fmt17(r.curveset.hb2.c2)
       << " mu2 = 0\n"
       << "          TB  " << fmt17(r.curveset.tb.c1) << " mu1 + " << fmt17(r.curveset.tb.c2)
       << " mu2 = 0\n"
       << "          HET tb-form = " << fmt17(r.curveset.het_q) << " mu1^2\n";
    return os.str();
}

} // namespace zhvdp
