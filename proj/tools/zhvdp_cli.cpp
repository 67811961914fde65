#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zhvdp/analysis.hpp"
#include "zhvdp/errors.hpp"
#include "zhvdp/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using namespace zhvdp;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    double t_end = -1.0;
    int steps_per_delay = -1;
    std::string format;
    double mu1 = 0.0, mu2 = 0.0;
    bool mu1_set = false, mu2_set = false;
};

RunConfig load_with_overrides(const CommonOpts& o) {
    RunConfig rc = load_run_config(o.config_path);
    if (!o.out_dir.empty()) rc.outputs = o.out_dir;
    if (o.t_end > 0.0) rc.t_end = o.t_end;
    if (o.steps_per_delay > 0) rc.steps_per_delay = o.steps_per_delay;
    if (!o.format.empty()) rc.format = o.format;
    if (o.mu1_set) rc.mu1 = o.mu1;
    if (o.mu2_set) rc.mu2 = o.mu2;
    return rc;
}

fs::path ensure_outdir(const RunConfig& rc) {
    fs::path dir(rc.outputs);
    if (!dir.empty()) fs::create_directories(dir);
    return dir;
}

int cmd_analyze(const CommonOpts& opts) {
    const RunConfig rc = load_with_overrides(opts);
    const AnalysisReport rep = run_analysis(rc.oscillator);
    const auto kv = report_kv(rep);
    std::cout << report_text(rep);
    if (rc.format == "kv") {
        for (const auto& [k, v] : kv) std::cout << k << '=' << v << '\n';
    }
    const fs::path dir = ensure_outdir(rc);
    write_kv(dir / "analysis.kv", kv);
    std::ofstream txt(dir / "analysis.txt");
    txt << report_text(rep);
    return 0;
}

int cmd_classify(const CommonOpts& opts) {
    const RunConfig rc = load_with_overrides(opts);
    const AnalysisReport rep = run_analysis(rc.oscillator);
    const RegionReport r = classify(rc.mu1, rc.mu2, rep.nf, rep.unf);
    std::cout << "mu = (" << format_g17(r.mu1) << ", " << format_g17(r.mu2) << ")\n"
              << "case " << to_string(r.caseTag) << ", prediction " << to_string(r.prediction)
              << "\n"
              << "chi1 = " << format_g17(r.chi1) << ", chi2 = " << format_g17(r.chi2) << "\n"
              << "sides: HB1 " << format_g17(r.side_hb1) << "  HB2 " << format_g17(r.side_hb2)
              << "  TB " << format_g17(r.side_tb) << "  HET " << format_g17(r.side_het) << "\n"
              << "trivial " << (r.trivial_stable ? "stable" : "unstable")
              << (r.trivial_is_upper ? " (z-attracting branch)" : " (z-repelling branch)")
              << ", companion " << (r.companion_stable ? "stable" : "unstable") << "\n";
    if (r.pstar_exists) {
        std::cout << "r>0 equilibrium exists, " << (r.pstar_stable ? "stable" : "unstable")
                  << "\n";
    }
    if (r.warn_large_mu) std::cout << "warning: |mu| > 0.05, outside the trusted radius\n";
    return 0;
}

int cmd_curves(const CommonOpts& opts) {
    const RunConfig rc = load_with_overrides(opts);
    const AnalysisReport rep = run_analysis(rc.oscillator);
    const CurveSet cs = rep.curveset;
    const fs::path dir = ensure_outdir(rc);
    const int n = rc.curves_samples;
    write_curve_csv(dir / "hb1.csv", sample_curve(cs.hb1, 0.0, rc.curves_mu1_lo,
                                                  rc.curves_mu1_hi, n));
    write_curve_csv(dir / "hb2.csv", sample_curve(cs.hb2, 0.0, rc.curves_mu1_lo,
                                                  rc.curves_mu1_hi, n));
    write_curve_csv(dir / "tb.csv", sample_curve(cs.tb, 0.0, rc.curves_mu1_lo,
                                                 rc.curves_mu1_hi, n));
    write_curve_csv(dir / "het.csv", sample_curve(cs.het_linear, cs.het_q, rc.curves_mu1_lo,
                                                  rc.curves_mu1_hi, n));
    std::cout << "wrote hb1.csv hb2.csv tb.csv het.csv to " << dir.string() << "\n";
    return 0;
}

int cmd_sweep(const CommonOpts& opts) {
    const RunConfig rc = load_with_overrides(opts);
    const AnalysisReport rep = run_analysis(rc.oscillator);
    const auto rows = sweep_classify(rep.nf, rep.unf, rc.sweep);
    const fs::path dir = ensure_outdir(rc);
    write_sweep_csv(dir / "sweep.csv", rows);
    std::cout << "wrote sweep.csv (" << rows.size() << " rows) to " << dir.string() << "\n";
    return 0;
}

int cmd_simulate(const CommonOpts& opts) {
    RunConfig rc = load_with_overrides(opts);
    if (rc.histories.empty()) throw config_error("simulate: at least one history required");
    const AnalysisReport rep = run_analysis(rc.oscillator);
    const CenterBasis basis = build_basis(rep.zh);
    const fs::path dir = ensure_outdir(rc);

    std::vector<SimulationOutcome> outcomes(rc.histories.size());
    std::vector<std::string> errors(rc.histories.size());
    const auto nh = static_cast<long long>(rc.histories.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < nh; ++i) {
        SimulationOutcome& oc = outcomes[static_cast<std::size_t>(i)];
        oc.history_index = static_cast<int>(i);
        try {
            const Trajectory traj = simulate(rc.oscillator, rc.mu1, rc.mu2,
                                             rc.histories[static_cast<std::size_t>(i)], rc.t_end,
                                             rc.steps_per_delay);
            oc.blown = traj.blown;
            oc.blow_time = traj.blow_time;
            oc.hash = trajectory_hash(traj);
            char name[64];
            std::snprintf(name, sizeof(name), "traj_%lld.csv", i);
            oc.trajectory_file = name;
            write_trajectory_csv(dir / name, traj, rc.output_stride);
            std::snprintf(name, sizeof(name), "proj_%lld.csv", i);
            oc.projected_file = name;
            ProjectedPath path = project_trajectory(traj, basis, rc.output_stride);
            if (!traj.blown && path.t.size() >= 3 &&
                path.t.back() - path.t.front() > 3.0 * 2.0 * M_PI / basis.omega0) {
                path = smooth(path, rc.smooth_window_periods);
            }
            write_projected_csv(dir / name, path);
        } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(i)] = e.what();
        }
    }
    for (const auto& err : errors) {
        if (!err.empty()) throw numeric_error("simulate batch: " + err);
    }
    write_manifest(dir / "manifest.json", rc, outcomes);
    for (const auto& oc : outcomes) {
        std::cout << "history " << oc.history_index << ": "
                  << (oc.blown ? "BLOWUP (flagged)" : "ok") << ", files " << oc.trajectory_file
                  << " " << oc.projected_file << "\n";
    }
    std::cout << "wrote manifest.json to " << dir.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero-Hopf analysis of the delayed-feedback van der Pol oscillator"};
    app.require_subcommand(1);

    CommonOpts opts;
    const auto add_common = [&](CLI::App* sub, bool with_mu) {
        sub->add_option("--config", opts.config_path, "run configuration (JSON)")->required();
        sub->add_option("--out", opts.out_dir, "output directory");
        sub->add_option("--t-end", opts.t_end, "integration horizon override");
        sub->add_option("--steps-per-delay", opts.steps_per_delay, "grid resolution override");
        sub->add_option("--format", opts.format, "csv or kv")
            ->check(CLI::IsMember({"csv", "kv"}));
        if (with_mu) {
            sub->add_option("--mu1", opts.mu1, "unfolding parameter mu1 override")
                ->each([&](const std::string&) { opts.mu1_set = true; });
            sub->add_option("--mu2", opts.mu2, "unfolding parameter mu2 override")
                ->each([&](const std::string&) { opts.mu2_set = true; });
        }
    };

    auto* analyze = app.add_subcommand("analyze", "normal-form coefficient table");
    add_common(analyze, false);
    auto* simulate_cmd = app.add_subcommand("simulate", "integrate and project trajectories");
    add_common(simulate_cmd, true);
    auto* classify_cmd = app.add_subcommand("classify", "region prediction at (mu1, mu2)");
    add_common(classify_cmd, true);
    auto* curves_cmd = app.add_subcommand("curves", "sampled bifurcation curves");
    add_common(curves_cmd, false);
    auto* sweep_cmd = app.add_subcommand("sweep", "classification grid");
    add_common(sweep_cmd, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(opts);
        if (app.got_subcommand(simulate_cmd)) return cmd_simulate(opts);
        if (app.got_subcommand(classify_cmd)) return cmd_classify(opts);
        if (app.got_subcommand(curves_cmd)) return cmd_curves(opts);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(opts);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const hypothesis_error& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return 3;
    } catch (const numeric_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
