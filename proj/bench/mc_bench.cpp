// Compares the serial reference trial loop against the OpenMP kernel and
// checks that both emit the same bytes.

#include <chrono>
#include <cstdio>
#include <vector>

#include "rislab/montecarlo.hpp"

using namespace rislab;

namespace {

double run_once(const LinkStatistics& stats, const SnrContext& ctx,
                const SimulationPlan& plan, ExecMode mode, std::vector<double>& out)
{
    const auto start = std::chrono::steady_clock::now();
    out = simulate_snr_samples(stats, ctx, plan, mode);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

int main()
{
    Geometry geom;
    geom.element_count = 64;
    const auto stats = derive_link_statistics(geom);
    const auto ctx = SnrContext::from_budget_dbm(13.0, -94.0);

    SimulationPlan plan;
    plan.sample_count = 200000;
    plan.base_seed = 1;

    std::printf("%-12s %12s %12s %9s %10s\n", "design", "serial [s]", "openmp [s]",
                "speedup", "identical");
    for (const auto design : {DesignTag::short_term, DesignTag::long_term,
                              DesignTag::equal, DesignTag::random}) {
        plan.design = design;
        std::vector<double> serial_out, parallel_out;
        const double t_serial = run_once(stats, ctx, plan, ExecMode::serial, serial_out);
        const double t_parallel =
            run_once(stats, ctx, plan, ExecMode::openmp, parallel_out);
        std::printf("%-12s %12.3f %12.3f %8.2fx %10s\n",
                    std::string(to_string(design)).c_str(), t_serial, t_parallel,
                    t_serial / t_parallel,
                    serial_out == parallel_out ? "yes" : "NO");
    }
    return 0;
}
