#include "zhvdp/smoothing.hpp"

#include <algorithm>
#include <cmath>

#include "zhvdp/errors.hpp"

namespace zhvdp {

namespace {

std::vector<double> moving_average(const std::vector<double>& v, long half) {
    const long n = static_cast<long>(v.size());
    std::vector<double> out(v.size());
    std::vector<double> prefix(v.size() + 1, 0.0);
    for (long i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + v[i];
    for (long i = 0; i < n; ++i) {
        const long hw = std::min({half, i, n - 1 - i});
        out[i] = (prefix[i + hw + 1] - prefix[i - hw]) / static_cast<double>(2 * hw + 1);
    }
    return out;
}

} // namespace

ProjectedPath project_trajectory(const Trajectory& traj, const CenterBasis& basis, int stride) {
    if (stride < 1) throw config_error("project_trajectory: stride must be >= 1");
    ProjectedPath path;
    path.omega0 = basis.omega0;
    const std::size_t n = traj.states.size();
    const auto N = static_cast<std::size_t>(traj.stepsPerDelay);
    for (std::size_t k = N; k < n; k += static_cast<std::size_t>(stride)) {
        Segment seg;
        seg.samples.assign(traj.states.begin() + (k - N), traj.states.begin() + (k + 1));
        const CenterCoords cc = project(seg, basis);
        path.t.push_back(traj.time_of(k));
        path.r.push_back(cc.r);
        path.z.push_back(cc.z);
        path.xi.push_back(cc.xi);
        path.x1_re.push_back(cc.x1.real());
        path.x1_im.push_back(cc.x1.imag());
        path.x3.push_back(cc.x3);
    }
    return path;
}

ProjectedPath smooth(const ProjectedPath& path, double windowPeriods) {
    if (!(windowPeriods > 0.0)) throw config_error("smooth: windowPeriods must be > 0");
    if (path.t.size() < 3) throw config_error("smooth: path too short");
    const double duration = path.t.back() - path.t.front();
    const double fast_period = 2.0 * M_PI / path.omega0;
    if (duration < 3.0 * fast_period) throw config_error("smooth: path too short");
    const double dt = (path.t.back() - path.t.front()) / static_cast<double>(path.t.size() - 1);
    const double window = windowPeriods * fast_period;
    // 2*half + 1 samples span the window as closely as the grid allows
    const long half = std::max<long>(1, std::lround((window / dt - 1.0) / 2.0));

    ProjectedPath out = path;
    out.r_smooth = moving_average(path.r, half);
    out.z_smooth = moving_average(path.z, half);
    return out;
}

} // namespace zhvdp
