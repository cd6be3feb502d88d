#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rislab/channel.hpp"
#include "rislab/phase_design.hpp"

namespace rislab {

// Trial loops exist in two variants: a plain serial reference and the OpenMP
// kernel. Both write trial i from the substream addressed by (seed, i), so
// their outputs are bit-identical; the serial path is kept as the reference
// the parallel kernel is tested and benchmarked against.
enum class ExecMode { serial, openmp };

struct SimulationPlan {
    std::uint64_t sample_count = 100000;
    std::uint64_t base_seed = 1;
    int worker_count = 0; // 0: all available, capped by RIS_LAB_THREADS
    DesignTag design = DesignTag::short_term;
    bool redraw_random_phases = true;
    bool los_only = false;
};

struct EstimateWithCI {
    double value = 0.0;
    double half_width_95 = 0.0; // value +/- half_width covers the 95% interval
    std::uint64_t n_effective = 0;
};

struct MomentEstimates {
    double second = 0.0;
    double fourth = 0.0;
    std::uint64_t n_effective = 0;
};

struct PairedSnrSamples {
    std::vector<double> short_term;
    std::vector<double> long_term;
    std::vector<double> equal;
    std::vector<double> random;
};

// Requested worker count resolved against the machine and the
// RIS_LAB_THREADS environment cap.
int resolve_worker_count(int requested);

// The profile a draw-once random design uses for every trial.
PhaseProfile fixed_random_profile(int element_count, std::uint64_t base_seed);

// Per-trial SNR values gamma_i. Trial i samples its realization from
// substream (base_seed, i); the emitted vector is a pure function of
// (plan, stats, ctx) regardless of mode and worker count.
std::vector<double> simulate_snr_samples(const LinkStatistics& stats, const SnrContext& ctx,
                                         const SimulationPlan& plan,
                                         ExecMode mode = ExecMode::openmp);

// All four designs evaluated on the same realization per trial.
PairedSnrSamples simulate_paired_snr(const LinkStatistics& stats, const SnrContext& ctx,
                                     const SimulationPlan& plan,
                                     ExecMode mode = ExecMode::openmp);

// Fraction of samples with log2(1+gamma) > xi, with a Wilson 95% interval.
EstimateWithCI empirical_coverage(std::span<const double> snr_samples, double target_rate);

// Mean of log2(1+gamma) with a normal-approximation 95% interval.
EstimateWithCI empirical_ergodic_rate(std::span<const double> snr_samples);

// Sample second and fourth moments of |h_sr^H Phi h_rd|^2 under a fixed
// profile.
MomentEstimates empirical_cascade_moments(const LinkStatistics& stats,
                                          const PhaseProfile& profile,
                                          std::uint64_t sample_count,
                                          std::uint64_t base_seed,
                                          ExecMode mode = ExecMode::openmp,
                                          int worker_count = 0);

} // namespace rislab
