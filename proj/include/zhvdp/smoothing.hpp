#pragma once

#include <vector>

#include "zhvdp/basis.hpp"
#include "zhvdp/dde.hpp"

namespace zhvdp {

// Center-subspace image of a trajectory, sampled on a uniform time grid.
struct ProjectedPath {
    double omega0 = 0.0;
    std::vector<double> t, r, z, xi, x1_re, x1_im, x3;
    std::vector<double> r_smooth, z_smooth; // filled by smooth()
    bool has_smoothed() const { return !r_smooth.empty(); }
};

// Centered moving average of r and z with window length
// windowPeriods * (2 pi / omega0) in trajectory time; endpoints use shrinking
// symmetric windows, so the output is a convex combination of inputs.
ProjectedPath smooth(const ProjectedPath& path, double windowPeriods);

// Projects every stride-th grid segment of a trajectory onto center
// coordinates (starting at t = t0 + tau, the first full segment).
ProjectedPath project_trajectory(const Trajectory& traj, const CenterBasis& basis, int stride);

} // namespace zhvdp
