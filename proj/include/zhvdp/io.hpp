#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "zhvdp/analysis.hpp"
#include "zhvdp/dde.hpp"
#include "zhvdp/smoothing.hpp"
#include "zhvdp/sweep.hpp"

namespace zhvdp {

// One structured config document drives every subcommand. See README for the
// schema; numerics are all named fields, never positional.
struct RunConfig {
    OscillatorConfig oscillator;
    double mu1 = 0.0;
    double mu2 = 0.0;
    std::vector<HistorySpec> histories;
    double t_end = 1000.0;
    int steps_per_delay = 2048;
    int output_stride = 128;
    double smooth_window_periods = 1.0;
    std::string outputs = ".";
    std::string format = "csv"; // csv | kv
    // curves emission
    double curves_mu1_lo = -0.005, curves_mu1_hi = 0.005;
    int curves_samples = 101;
    // sweep grid
    SweepSpec sweep{-0.004, 0.004, 41, -0.004, 0.004, 41};
};

RunConfig load_run_config(const std::filesystem::path& path);
std::string run_config_to_json(const RunConfig& cfg);

std::string format_g17(double v);

// Fixed, versioned CSV schemas (header row mandatory):
//   trajectory: t,x,xdot
//   projected:  t,r,z,xi,r_smooth,z_smooth,x1_re,x1_im,x3
void write_trajectory_csv(const std::filesystem::path& file, const Trajectory& traj, int stride);
void write_projected_csv(const std::filesystem::path& file, const ProjectedPath& path);
void write_curve_csv(const std::filesystem::path& file,
                     const std::vector<std::pair<double, double>>& pts);
void write_sweep_csv(const std::filesystem::path& file, const std::vector<RegionReport>& rows);
void write_kv(const std::filesystem::path& file,
              const std::vector<std::pair<std::string, std::string>>& kv);

// FNV-1a over the raw state bytes; identical inputs give identical trajectories,
// so the hash doubles as the determinism witness in run manifests.
std::uint64_t trajectory_hash(const Trajectory& traj);

struct SimulationOutcome {
    int history_index = 0;
    bool blown = false;
    double blow_time = 0.0;
    std::uint64_t hash = 0;
    std::string trajectory_file;
    std::string projected_file;
};

void write_manifest(const std::filesystem::path& file, const RunConfig& cfg,
                    const std::vector<SimulationOutcome>& outcomes);

} // namespace zhvdp
