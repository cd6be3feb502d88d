#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "rislab/channel.hpp"
#include "rislab/rng.hpp"

namespace rislab {

enum class DesignTag { short_term, long_term, equal, random };

std::string_view to_string(DesignTag tag);
DesignTag design_from_string(std::string_view name);

// Element phases theta_1..theta_M, each wrapped to [-pi, pi].
struct PhaseProfile {
    std::vector<double> theta;
    DesignTag design = DesignTag::equal;

    int size() const { return static_cast<int>(theta.size()); }
};

// Linear SNR budget nu = transmit power / noise power.
struct SnrContext {
    double nu = 1.0;

    static SnrContext from_budget_dbm(double tx_power_dbm, double noise_dbm);
};

double wrap_angle(double theta); // into [-pi, pi]

// Per-realization optimum: theta_m = arg(h_sd) - arg(h_sr_m^*) - arg(h_rd_m).
// Zero-magnitude entries use arg = 0.
PhaseProfile short_term_phases(const ChannelRealization& realization);

// Statistical optimum, built from LoS components only:
// theta_m = -arg(hbar_sr_m^*) - arg(hbar_rd_m). Requires LoS on both hops.
PhaseProfile long_term_phases(const LinkStatistics& stats);

PhaseProfile equal_phases(int element_count); // all pi/4

PhaseProfile random_phases(int element_count, RandomStream& stream); // i.i.d. U[-pi, pi]

// h_sd + sum_m h_sr_m^* e^{j theta_m} h_rd_m
std::complex<double> effective_gain(const ChannelRealization& realization,
                                    const PhaseProfile& profile);

// gamma = nu |effective gain|^2. For the short-term design this is evaluated
// in the coherently-aligned form nu (|h_sd| + sum_m |h_sr_m||h_rd_m|)^2.
double snr(const ChannelRealization& realization, const PhaseProfile& profile,
           const SnrContext& ctx);

} // namespace rislab
