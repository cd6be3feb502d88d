#include "rislab/phase_design.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rislab {

std::string_view to_string(DesignTag tag)
{
    switch (tag) {
    case DesignTag::short_term: return "short_term";
    case DesignTag::long_term: return "long_term";
    case DesignTag::equal: return "equal";
    case DesignTag::random: return "random";
    }
    throw std::invalid_argument("unknown design tag");
}

DesignTag design_from_string(std::string_view name)
{
    if (name == "short_term") return DesignTag::short_term;
    if (name == "long_term") return DesignTag::long_term;
    if (name == "equal") return DesignTag::equal;
    if (name == "random") return DesignTag::random;
    throw std::invalid_argument("unknown design name: " + std::string(name));
}

SnrContext SnrContext::from_budget_dbm(double tx_power_dbm, double noise_dbm)
{
    return {std::pow(10.0, (tx_power_dbm - noise_dbm) / 10.0)};
}

double wrap_angle(double theta) { return std::remainder(theta, 2.0 * std::numbers::pi); }

PhaseProfile short_term_phases(const ChannelRealization& realization)
{
    const std::size_t m_count = realization.h_sr.size();
    if (realization.h_rd.size() != m_count)
        throw std::invalid_argument("short_term_phases: hop dimensions disagree");

    const double arg_sd = std::arg(realization.h_sd);
    PhaseProfile profile{std::vector<double>(m_count), DesignTag::short_term};
    for (std::size_t m = 0; m < m_count; ++m) {
        const double t = arg_sd - std::arg(std::conj(realization.h_sr[m])) -
                         std::arg(realization.h_rd[m]);
        profile.theta[m] = wrap_angle(t);
    }
    return profile;
}

PhaseProfile long_term_phases(const LinkStatistics& stats)
{
    const std::size_t m_count = stats.hbar_sr.size();
    if (stats.hbar_rd.size() != m_count)
        throw std::invalid_argument("long_term_phases: hop dimensions disagree");
    if (m_count > 0 && !(stats.K_sr > 0.0 && stats.K_rd > 0.0))
        throw std::domain_error("long_term_phases: needs LoS on both hops "
                                "(K_sr, K_rd > 0); use another design otherwise");

    PhaseProfile profile{std::vector<double>(m_count), DesignTag::long_term};
    for (std::size_t m = 0; m < m_count; ++m) {
        const double t =
            -std::arg(std::conj(stats.hbar_sr[m])) - std::arg(stats.hbar_rd[m]);
        profile.theta[m] = wrap_angle(t);
    }
    return profile;
}

PhaseProfile equal_phases(int element_count)
{
    if (element_count < 0)
        throw std::invalid_argument("equal_phases: negative element count");
    return {std::vector<double>(static_cast<std::size_t>(element_count),
                                std::numbers::pi / 4.0),
            DesignTag::equal};
}

PhaseProfile random_phases(int element_count, RandomStream& stream)
{
    if (element_count < 0)
        throw std::invalid_argument("random_phases: negative element count");
    PhaseProfile profile{std::vector<double>(static_cast<std::size_t>(element_count)),
                         DesignTag::random};
    for (auto& t : profile.theta)
        t = stream.next_angle();
    return profile;
}

std::complex<double> effective_gain(const ChannelRealization& realization,
                                    const PhaseProfile& profile)
{
    const std::size_t m_count = realization.h_sr.size();
    if (realization.h_rd.size() != m_count || profile.theta.size() != m_count)
        throw std::invalid_argument("effective_gain: dimensions disagree");

    std::complex<double> gain = realization.h_sd;
    for (std::size_t m = 0; m < m_count; ++m)
        gain += std::conj(realization.h_sr[m]) * std::polar(1.0, profile.theta[m]) *
                realization.h_rd[m];
    return gain;
}

double snr(const ChannelRealization& realization, const PhaseProfile& profile,
           const SnrContext& ctx)
{
    if (!(ctx.nu > 0.0))
        throw std::domain_error("snr: nu must be positive");

    if (profile.design == DesignTag::short_term) {
        double amplitude = std::abs(realization.h_sd);
        const std::size_t m_count = realization.h_sr.size();
        if (realization.h_rd.size() != m_count)
            throw std::invalid_argument("snr: hop dimensions disagree");
        for (std::size_t m = 0; m < m_count; ++m)
            amplitude += std::abs(realization.h_sr[m]) * std::abs(realization.h_rd[m]);
        return ctx.nu * amplitude * amplitude;
    }
    return ctx.nu * std::norm(effective_gain(realization, profile));
}

} // namespace rislab
