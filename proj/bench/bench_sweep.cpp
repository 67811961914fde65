// Timing comparison of the OpenMP kernels against their serial references:
// the classification sweep and a multi-history simulation batch.

#include <chrono>
#include <cstdio>
#include <vector>

#include "zhvdp/analysis.hpp"
#include "zhvdp/dde.hpp"
#include "zhvdp/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace zhvdp;
namespace chrono = std::chrono;

namespace {

double ms_since(chrono::steady_clock::time_point t0) {
    return chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    OscillatorConfig cfg;
    cfg.epsilon = 0.3;
    cfg.a = 0.1;
    cfg.b = 1.0;
    cfg.tau = 2.06;
    cfg.g11 = -0.4;
    cfg.g12 = 0.2;
    cfg.g22 = 0.4;
    const AnalysisReport rep = run_analysis(cfg);

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both paths run serially\n");
#endif

    {
        const SweepSpec spec{-0.004, 0.004, 700, -0.004, 0.004, 700};
        auto t0 = chrono::steady_clock::now();
        const auto serial = sweep_classify_serial(rep.nf, rep.unf, spec);
        const double t_serial = ms_since(t0);
        t0 = chrono::steady_clock::now();
        const auto parallel = sweep_classify(rep.nf, rep.unf, spec);
        const double t_parallel = ms_since(t0);
        std::size_t mismatches = 0;
        for (std::size_t i = 0; i < serial.size(); ++i) {
            if (serial[i].prediction != parallel[i].prediction ||
                serial[i].chi1 != parallel[i].chi1) {
                ++mismatches;
            }
        }
        std::printf("sweep %zux%zu: serial %.1f ms, parallel %.1f ms, speedup %.2fx, "
                    "mismatches %zu\n",
                    static_cast<std::size_t>(spec.n1), static_cast<std::size_t>(spec.n2),
                    t_serial, t_parallel, t_serial / t_parallel, mismatches);
    }

    {
        const std::vector<HistorySpec> hists = {{0.1, 0.0}, {0.05, 0.05}, {0.02, -0.08},
                                                {0.06, -0.02}, {-0.05, 0.02}, {0.03, 0.03},
                                                {0.08, -0.01}, {0.01, 0.07}};
        auto t0 = chrono::steady_clock::now();
        std::vector<Trajectory> serial(hists.size());
        for (std::size_t i = 0; i < hists.size(); ++i) {
            serial[i] = simulate(cfg, -0.0018, 0.0032, hists[i], 400.0, 1024);
        }
        const double t_serial = ms_since(t0);
        t0 = chrono::steady_clock::now();
        std::vector<Trajectory> parallel(hists.size());
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(hists.size()); ++i) {
            parallel[static_cast<std::size_t>(i)] =
                simulate(cfg, -0.0018, 0.0032, hists[static_cast<std::size_t>(i)], 400.0, 1024);
        }
        const double t_parallel = ms_since(t0);
        std::size_t mismatches = 0;
        for (std::size_t i = 0; i < hists.size(); ++i) {
            if (serial[i].states.back().u1 != parallel[i].states.back().u1) ++mismatches;
        }
        std::printf("simulate batch of %zu: serial %.1f ms, parallel %.1f ms, speedup %.2fx, "
                    "mismatches %zu\n",
                    hists.size(), t_serial, t_parallel, t_serial / t_parallel, mismatches);
    }
    return 0;
}
