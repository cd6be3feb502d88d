#include "rislab/montecarlo.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace rislab {

namespace {

constexpr double kZ95 = 1.959963984540054;

template <typename Body>
void run_trials(std::uint64_t n, int workers, ExecMode mode, const Body& body)
{
    const auto count = static_cast<std::int64_t>(n);
    if (mode == ExecMode::serial) {
        for (std::int64_t i = 0; i < count; ++i)
            body(static_cast<std::uint64_t>(i));
        return;
    }
#pragma omp parallel for schedule(static) num_threads(workers)
    for (std::int64_t i = 0; i < count; ++i)
        body(static_cast<std::uint64_t>(i));
}

// Profile shared by every trial of a design, or nullopt when the profile is
// realization- or trial-dependent.
std::optional<PhaseProfile> shared_profile(const LinkStatistics& stats,
                                           const SimulationPlan& plan)
{
    switch (plan.design) {
    case DesignTag::long_term:
        return long_term_phases(stats);
    case DesignTag::equal:
        return equal_phases(stats.element_count());
    case DesignTag::random:
        if (!plan.redraw_random_phases)
            return fixed_random_profile(stats.element_count(), plan.base_seed);
        return std::nullopt;
    case DesignTag::short_term:
        return std::nullopt;
    }
    throw std::invalid_argument("unknown design");
}

double trial_snr(const ChannelRealization& ch, DesignTag design,
                 const std::optional<PhaseProfile>& fixed, const SnrContext& ctx,
                 std::uint64_t base_seed, std::uint64_t trial)
{
    if (fixed)
        return snr(ch, *fixed, ctx);
    if (design == DesignTag::short_term)
        return snr(ch, short_term_phases(ch), ctx);
    RandomStream phase_stream(base_seed, trial, kPhaseSubstream);
    return snr(ch, random_phases(static_cast<int>(ch.h_sr.size()), phase_stream), ctx);
}

} // namespace

int resolve_worker_count(int requested)
{
    int workers = requested > 0 ? requested : omp_get_max_threads();
    if (const char* cap_text = std::getenv("RIS_LAB_THREADS")) {
        try {
            const int cap = std::stoi(cap_text);
            if (cap > 0)
                workers = std::min(workers, cap);
        } catch (const std::exception&) {
            // unparsable cap: ignore
        }
    }
    return std::max(1, workers);
}

PhaseProfile fixed_random_profile(int element_count, std::uint64_t base_seed)
{
    RandomStream stream(base_seed, 0, kPhaseSubstream);
    return random_phases(element_count, stream);
}

std::vector<double> simulate_snr_samples(const LinkStatistics& stats, const SnrContext& ctx,
                                         const SimulationPlan& plan, ExecMode mode)
{
    if (plan.sample_count < 1)
        throw std::invalid_argument("simulate_snr_samples: need at least one trial");

    const auto fixed = shared_profile(stats, plan);
    std::vector<double> samples(plan.sample_count);
    const int workers = resolve_worker_count(plan.worker_count);
    run_trials(plan.sample_count, workers, mode, [&](std::uint64_t i) {
        RandomStream channel_stream(plan.base_seed, i, kChannelSubstream);
        const auto ch = sample_realization(stats, channel_stream, plan.los_only);
        samples[i] = trial_snr(ch, plan.design, fixed, ctx, plan.base_seed, i);
    });
    return samples;
}

PairedSnrSamples simulate_paired_snr(const LinkStatistics& stats, const SnrContext& ctx,
                                     const SimulationPlan& plan, ExecMode mode)
{
    if (plan.sample_count < 1)
        throw std::invalid_argument("simulate_paired_snr: need at least one trial");

    const auto profile_lt = long_term_phases(stats);
    const auto profile_eq = equal_phases(stats.element_count());
    std::optional<PhaseProfile> fixed_random;
    if (!plan.redraw_random_phases)
        fixed_random = fixed_random_profile(stats.element_count(), plan.base_seed);

    PairedSnrSamples out;
    out.short_term.resize(plan.sample_count);
    out.long_term.resize(plan.sample_count);
    out.equal.resize(plan.sample_count);
    out.random.resize(plan.sample_count);

    const int workers = resolve_worker_count(plan.worker_count);
    run_trials(plan.sample_count, workers, mode, [&](std::uint64_t i) {
        RandomStream channel_stream(plan.base_seed, i, kChannelSubstream);
        const auto ch = sample_realization(stats, channel_stream, plan.los_only);
        out.short_term[i] = snr(ch, short_term_phases(ch), ctx);
        out.long_term[i] = snr(ch, profile_lt, ctx);
        out.equal[i] = snr(ch, profile_eq, ctx);
        if (fixed_random) {
            out.random[i] = snr(ch, *fixed_random, ctx);
        } else {
            RandomStream phase_stream(plan.base_seed, i, kPhaseSubstream);
            out.random[i] =
                snr(ch, random_phases(stats.element_count(), phase_stream), ctx);
        }
    });
    return out;
}

EstimateWithCI empirical_coverage(std::span<const double> snr_samples, double target_rate)
{
    if (snr_samples.empty())
        throw std::invalid_argument("empirical_coverage: empty sample stream");
    if (snr_samples.size() < 100)
        throw std::invalid_argument("empirical_coverage: need at least 100 samples");
    if (target_rate < 0.0)
        throw std::domain_error("empirical_coverage: target rate must be nonnegative");

    std::uint64_t hits = 0;
    for (const double gamma : snr_samples)
        if (std::log1p(gamma) / std::numbers::ln2 > target_rate)
            ++hits;

    const double n = static_cast<double>(snr_samples.size());
    const double p = static_cast<double>(hits) / n;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double radius =
        kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    // Half-width around the plain fraction, wide enough to cover the Wilson
    // interval [center - radius, center + radius].
    return {p, radius + std::fabs(center - p), snr_samples.size()};
}

EstimateWithCI empirical_ergodic_rate(std::span<const double> snr_samples)
{
    if (snr_samples.empty())
        throw std::invalid_argument("empirical_ergodic_rate: empty sample stream");
    if (snr_samples.size() < 100)
        throw std::invalid_argument("empirical_ergodic_rate: need at least 100 samples");

    const double n = static_cast<double>(snr_samples.size());
    double sum = 0.0;
    for (const double gamma : snr_samples)
        sum += std::log1p(gamma) / std::numbers::ln2;
    const double mean = sum / n;

    double sum_sq = 0.0;
    for (const double gamma : snr_samples) {
        const double d = std::log1p(gamma) / std::numbers::ln2 - mean;
        sum_sq += d * d;
    }
    const double std_err = std::sqrt(sum_sq / (n * std::max(n - 1.0, 1.0)));
    return {mean, kZ95 * std_err, snr_samples.size()};
}

MomentEstimates empirical_cascade_moments(const LinkStatistics& stats,
                                          const PhaseProfile& profile,
                                          std::uint64_t sample_count,
                                          std::uint64_t base_seed, ExecMode mode,
                                          int worker_count)
{
    if (sample_count < 10000)
        throw std::invalid_argument("empirical_cascade_moments: need at least 1e4 samples");
    if (static_cast<int>(profile.theta.size()) != stats.element_count())
        throw std::invalid_argument("empirical_cascade_moments: dimensions disagree");

    std::vector<double> power(sample_count);
    const int workers = resolve_worker_count(worker_count);
    run_trials(sample_count, workers, mode, [&](std::uint64_t i) {
        RandomStream channel_stream(base_seed, i, kChannelSubstream);
        const auto ch = sample_realization(stats, channel_stream);
        std::complex<double> cascade{0.0, 0.0};
        for (std::size_t m = 0; m < ch.h_sr.size(); ++m)
            cascade +=
                std::conj(ch.h_sr[m]) * std::polar(1.0, profile.theta[m]) * ch.h_rd[m];
        power[i] = std::norm(cascade);
    });

    double second = 0.0;
    double fourth = 0.0;
    for (const double p : power) {
        second += p;
        fourth += p * p;
    }
    const double n = static_cast<double>(sample_count);
    return {second / n, fourth / n, sample_count};
}

} // namespace rislab
