#include "zhvdp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "zhvdp/errors.hpp"

namespace zhvdp {

using nlohmann::json;

namespace {

double num_at(const json& j, const char* key, double fallback, bool required = false) {
    if (!j.contains(key)) {
        if (required) throw config_error(std::string("config: missing field '") + key + "'");
        return fallback;
    }
    if (!j.at(key).is_number()) {
        throw config_error(std::string("config: field '") + key + "' must be a number");
    }
    const double v = j.at(key).get<double>();
    if (!std::isfinite(v)) {
        throw config_error(std::string("config: field '") + key + "' must be finite");
    }
    return v;
}

} // namespace

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw config_error(std::string("config: JSON parse error: ") + e.what());
    }
    RunConfig rc;
    if (!j.contains("oscillator") || !j["oscillator"].is_object()) {
        throw config_error("config: missing 'oscillator' object");
    }
    const json& o = j["oscillator"];
    OscillatorConfig& c = rc.oscillator;
    c.epsilon = num_at(o, "epsilon", 0.0, true);
    c.a = num_at(o, "a", 0.0, true);
    c.b = num_at(o, "b", 1.0);
    c.g11 = num_at(o, "g11", 0.0);
    c.g12 = num_at(o, "g12", 0.0);
    c.g22 = num_at(o, "g22", 0.0);
    c.g111 = num_at(o, "g111", 0.0);
    c.g112 = num_at(o, "g112", 0.0);
    c.g122 = num_at(o, "g122", 0.0);
    c.g222 = num_at(o, "g222", 0.0);
    if (o.contains("tau")) {
        c.tau = num_at(o, "tau", 0.0);
    } else if (c.epsilon * c.epsilon - c.a * c.a < 2.0) {
        c.tau = zero_hopf_point(c.epsilon, c.a).tau0;
    }
    validate(c);

    rc.mu1 = num_at(j, "mu1", 0.0);
    rc.mu2 = num_at(j, "mu2", 0.0);
    rc.t_end = num_at(j, "t_end", rc.t_end);
    rc.steps_per_delay = static_cast<int>(num_at(j, "steps_per_delay", rc.steps_per_delay));
    rc.output_stride = static_cast<int>(num_at(j, "output_stride", rc.output_stride));
    rc.smooth_window_periods = num_at(j, "smooth_window_periods", rc.smooth_window_periods);
    if (j.contains("outputs")) rc.outputs = j["outputs"].get<std::string>();
    if (j.contains("format")) {
        rc.format = j["format"].get<std::string>();
        if (rc.format != "csv" && rc.format != "kv") {
            throw config_error("config: format must be 'csv' or 'kv'");
        }
    }
    if (j.contains("histories")) {
        if (!j["histories"].is_array()) throw config_error("config: histories must be an array");
        for (const auto& h : j["histories"]) {
            if (!h.is_array() || h.size() != 2 || !h[0].is_number() || !h[1].is_number()) {
                throw config_error("config: each history must be [x0, v0]");
            }
            const double x0 = h[0].get<double>(), v0 = h[1].get<double>();
            if (!std::isfinite(x0) || !std::isfinite(v0)) {
                throw config_error("config: history values must be finite");
            }
            rc.histories.push_back({x0, v0});
        }
    }
    if (j.contains("curves")) {
        const json& cv = j["curves"];
        rc.curves_mu1_lo = num_at(cv, "mu1_lo", rc.curves_mu1_lo);
        rc.curves_mu1_hi = num_at(cv, "mu1_hi", rc.curves_mu1_hi);
        rc.curves_samples = static_cast<int>(num_at(cv, "samples", rc.curves_samples));
    }
    if (j.contains("sweep")) {
        const json& sw = j["sweep"];
        rc.sweep.mu1_lo = num_at(sw, "mu1_lo", rc.sweep.mu1_lo);
        rc.sweep.mu1_hi = num_at(sw, "mu1_hi", rc.sweep.mu1_hi);
        rc.sweep.n1 = static_cast<int>(num_at(sw, "n1", rc.sweep.n1));
        rc.sweep.mu2_lo = num_at(sw, "mu2_lo", rc.sweep.mu2_lo);
        rc.sweep.mu2_hi = num_at(sw, "mu2_hi", rc.sweep.mu2_hi);
        rc.sweep.n2 = static_cast<int>(num_at(sw, "n2", rc.sweep.n2));
    }
    return rc;
}

std::string run_config_to_json(const RunConfig& rc) {
    json o;
    o["epsilon"] = rc.oscillator.epsilon;
    o["a"] = rc.oscillator.a;
    o["b"] = rc.oscillator.b;
    o["tau"] = rc.oscillator.tau;
    o["g11"] = rc.oscillator.g11;
    o["g12"] = rc.oscillator.g12;
    o["g22"] = rc.oscillator.g22;
    o["g111"] = rc.oscillator.g111;
    o["g112"] = rc.oscillator.g112;
    o["g122"] = rc.oscillator.g122;
    o["g222"] = rc.oscillator.g222;
    json j;
    j["oscillator"] = o;
    j["mu1"] = rc.mu1;
    j["mu2"] = rc.mu2;
    j["t_end"] = rc.t_end;
    j["steps_per_delay"] = rc.steps_per_delay;
    j["output_stride"] = rc.output_stride;
    j["smooth_window_periods"] = rc.smooth_window_periods;
    j["outputs"] = rc.outputs;
    j["format"] = rc.format;
    json hs = json::array();
    for (const auto& h : rc.histories) hs.push_back(json::array({h.x0, h.v0}));
    j["histories"] = hs;
    return j.dump(2);
}

void write_trajectory_csv(const std::filesystem::path& file, const Trajectory& traj, int stride) {
    std::ofstream out(file);
    if (!out) throw config_error("cannot write " + file.string());
    out << "t,x,xdot\n";
    for (std::size_t k = 0; k < traj.states.size(); k += static_cast<std::size_t>(stride)) {
        out << format_g17(traj.time_of(k)) << ',' << format_g17(traj.states[k].u1) << ','
            << format_g17(traj.states[k].u2) << '\n';
    }
}

void write_projected_csv(const std::filesystem::path& file, const ProjectedPath& p) {
    std::ofstream out(file);
    if (!out) throw config_error("cannot write " + file.string());
    out << "t,r,z,xi,r_smooth,z_smooth,x1_re,x1_im,x3\n";
    for (std::size_t k = 0; k < p.t.size(); ++k) {
        const double rs = p.has_smoothed() ? p.r_smooth[k] : p.r[k];
        const double zs = p.has_smoothed() ? p.z_smooth[k] : p.z[k];
        out << format_g17(p.t[k]) << ',' << format_g17(p.r[k]) << ',' << format_g17(p.z[k]) << ','
            << format_g17(p.xi[k]) << ',' << format_g17(rs) << ',' << format_g17(zs) << ','
            << format_g17(p.x1_re[k]) << ',' << format_g17(p.x1_im[k]) << ','
            << format_g17(p.x3[k]) << '\n';
    }
}

void write_curve_csv(const std::filesystem::path& file,
                     const std::vector<std::pair<double, double>>& pts) {
    std::ofstream out(file);
    if (!out) throw config_error("cannot write " + file.string());
    out << "mu1,mu2\n";
    for (const auto& [m1, m2] : pts) out << format_g17(m1) << ',' << format_g17(m2) << '\n';
}

void write_sweep_csv(const std::filesystem::path& file, const std::vector<RegionReport>& rows) {
    std::ofstream out(file);
    if (!out) throw config_error("cannot write " + file.string());
    out << "mu1,mu2,case,prediction,chi1,chi2,side_hb1,side_hb2,side_tb,side_het\n";
    for (const auto& r : rows) {
        out << format_g17(r.mu1) << ',' << format_g17(r.mu2) << ',' << to_string(r.caseTag) << ','
            << to_string(r.prediction) << ',' << format_g17(r.chi1) << ',' << format_g17(r.chi2)
            << ',' << format_g17(r.side_hb1) << ',' << format_g17(r.side_hb2) << ','
            << format_g17(r.side_tb) << ',' << format_g17(r.side_het) << '\n';
    }
}

void write_kv(const std::filesystem::path& file,
              const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ofstream out(file);
    if (!out) throw config_error("cannot write " + file.string());
    for (const auto& [k, v] : kv) out << k << '=' << v << '\n';
}

std::uint64_t trajectory_hash(const Trajectory& traj) {
    std::uint64_t h = 1469598103934665603ULL;
    const auto mix = [&h](const void* p, std::size_t n) {
        const auto* b = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= b[i];
            h *= 1099511628211ULL;
        }
    };
    for (const auto& s : traj.states) {
        mix(&s.u1, sizeof(double));
        mix(&s.u2, sizeof(double));
    }
    return h;
}

void write_manifest(const std::filesystem::path& file, const RunConfig& cfg,
                    const std::vector<SimulationOutcome>& outcomes) {
    json j = json::parse(run_config_to_json(cfg));
    json runs = json::array();
    for (const auto& o : outcomes) {
        json r;
        r["history_index"] = o.history_index;
        r["blown"] = o.blown;
        if (o.blown) r["blow_time"] = o.blow_time;
        char hx[32];
        std::snprintf(hx, sizeof(hx), "%016llx", static_cast<unsigned long long>(o.hash));
        r["determinism_hash"] = hx;
        r["trajectory_file"] = o.trajectory_file;
        r["projected_file"] = o.projected_file;
        runs.push_back(r);
    }
    j["runs"] = runs;
    std::ofstream out(file);
    if (!out) throw config_error("cannot write " + file.string());
    out << j.dump(2) << '\n';
}

} // namespace zhvdp
