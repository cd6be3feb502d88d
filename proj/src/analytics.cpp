#include "rislab/analytics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rislab {

namespace {

double sq(double x) { return x * x; }

CascadedMoments moments_from_alpha(const LinkStatistics& stats, double alpha_sq,
                                   std::complex<double> alpha_bar, int element_count)
{
    CascadedMoments m;
    m.element_count = element_count;
    m.alpha_bar = alpha_bar;
    m.omega = (stats.K_sr + 1.0) * (stats.K_rd + 1.0);
    m.mu = stats.beta_sr * stats.beta_rd / m.omega;
    m.K_tilde = stats.K_sr + stats.K_rd + 1.0;
    m.K_hat = 1.0 + 2.0 * stats.K_sr + 2.0 * stats.K_rd;

    const double M = static_cast<double>(element_count);
    m.delta = alpha_sq + M * m.mu * m.K_tilde;
    m.excess = 2.0 * M * alpha_sq * m.mu * m.K_tilde + sq(M * m.mu * m.K_tilde) +
               2.0 * M * sq(m.mu) * m.K_hat + 8.0 * alpha_sq * m.mu;
    m.fourth = sq(m.delta) + m.excess;
    return m;
}

ShortTermIntermediates short_term_core(const LinkStatistics& stats, int element_count)
{
    const double M = static_cast<double>(element_count);
    const double omega = (stats.K_sr + 1.0) * (stats.K_rd + 1.0);
    ShortTermIntermediates s;
    s.t_sr = kummer_half(stats.K_sr);
    s.t_rd = kummer_half(stats.K_rd);
    s.c1 = 0.5 * std::sqrt(std::numbers::pi * stats.beta_sd);
    s.c2 = 0.25 * M * std::numbers::pi * s.t_sr * s.t_rd / std::sqrt(omega);
    s.c3 = (4.0 - std::numbers::pi) / 4.0 * stats.beta_sd;
    s.c4 = M - M * sq(std::numbers::pi) / 16.0 * sq(s.t_sr) * sq(s.t_rd) / omega;

    const double bb = stats.beta_sr * stats.beta_rd;
    const double mean = s.c1 + s.c2 * std::sqrt(bb);
    const double var = s.c3 + s.c4 * bb;
    s.k_c = sq(mean) / var;
    s.w_c = var / mean;
    return s;
}

} // namespace

CascadedMoments cascaded_moments(const LinkStatistics& stats, const PhaseProfile& profile)
{
    const std::size_t m_count = stats.hbar_sr.size();
    if (stats.hbar_rd.size() != m_count || profile.theta.size() != m_count)
        throw std::invalid_argument("cascaded_moments: dimensions disagree");

    std::complex<double> alpha{0.0, 0.0};
    for (std::size_t m = 0; m < m_count; ++m)
        alpha += std::conj(stats.hbar_sr[m]) * std::polar(1.0, profile.theta[m]) *
                 stats.hbar_rd[m];
    return moments_from_alpha(stats, std::norm(alpha), alpha,
                              static_cast<int>(m_count));
}

CascadedMoments cascaded_moments_phase_averaged(const LinkStatistics& stats,
                                                int element_count)
{
    const double omega = (stats.K_sr + 1.0) * (stats.K_rd + 1.0);
    const double mu = stats.beta_sr * stats.beta_rd / omega;
    const double alpha_sq = element_count * stats.K_sr * stats.K_rd * mu;
    return moments_from_alpha(stats, alpha_sq, std::sqrt(alpha_sq), element_count);
}

GammaApprox gamma_params_generic(double beta_sd, const CascadedMoments& moments, double nu,
                                 DesignTag design)
{
    if (!(beta_sd >= 0.0) || !(nu > 0.0) || moments.delta < 0.0)
        throw std::domain_error("gamma_params_generic: inputs must be positive");
    const double mean = beta_sd + moments.delta;
    if (!(mean > 0.0))
        throw std::domain_error("gamma_params_generic: zero mean SNR");
    const double variance = sq(beta_sd) + 2.0 * beta_sd * moments.delta + moments.excess;

    GammaApprox approx;
    approx.design = design;
    approx.shape = sq(mean) / variance;
    approx.scale = nu * variance / mean;
    // K_sr K_rd = omega - K~, so the unit-modulus eta is recoverable.
    const double kk_mu = (moments.omega - moments.K_tilde) * moments.mu;
    const double bb = moments.mu * moments.omega;
    approx.long_term = LongTermIntermediates{
        kk_mu > 0.0 ? std::norm(moments.alpha_bar) / kk_mu : 0.0,
        bb > 0.0 ? moments.delta / bb : 0.0, bb > 0.0 ? moments.excess / sq(bb) : 0.0};
    return approx;
}

GammaApprox gamma_params_long_term(const LinkStatistics& stats, int element_count,
                                   double nu)
{
    if (!(nu > 0.0))
        throw std::domain_error("gamma_params_long_term: nu must be positive");
    const double M = static_cast<double>(element_count);
    const double omega = (stats.K_sr + 1.0) * (stats.K_rd + 1.0);
    const double K_tilde = stats.K_sr + stats.K_rd + 1.0;
    const double eta = M * M;
    const double o1 = (stats.K_sr * stats.K_rd * eta + K_tilde * M) / omega;
    const double o2 = (2.0 * eta * stats.K_sr * stats.K_rd * (M * K_tilde + 4.0) +
                       sq(M * K_tilde) + 2.0 * M * (2.0 * K_tilde - 1.0)) /
                      sq(omega);

    const double bsd = stats.beta_sd;
    const double bb = stats.beta_sr * stats.beta_rd;
    GammaApprox approx;
    approx.design = DesignTag::long_term;
    approx.shape = sq(bsd + o1 * bb) / (sq(bsd) + o2 * sq(bb) + 2.0 * bsd * o1 * bb);
    approx.scale = (nu * sq(bsd) + sq(nu) * o2 * sq(bb) + 2.0 * nu * bsd * o1 * bb) /
                   (bsd + o1 * bb);
    approx.long_term = LongTermIntermediates{eta, o1, o2};
    return approx;
}

GammaApprox gamma_params_short_term(const LinkStatistics& stats, int element_count,
                                    double nu)
{
    if (!(nu > 0.0))
        throw std::domain_error("gamma_params_short_term: nu must be positive");
    const auto s = short_term_core(stats, element_count);

    GammaApprox approx;
    approx.design = DesignTag::short_term;
    approx.shape = s.k_c * (s.k_c + 1.0) / (2.0 * (2.0 * s.k_c + 3.0));
    approx.scale = 2.0 * nu * sq(s.w_c) * (2.0 * s.k_c + 3.0);
    approx.short_term = s;
    return approx;
}

GammaApprox gamma_params_for_design(const LinkStatistics& stats, int element_count,
                                    double nu, DesignTag design, bool redraw_random,
                                    const PhaseProfile* fixed_random_profile)
{
    switch (design) {
    case DesignTag::short_term:
        return gamma_params_short_term(stats, element_count, nu);
    case DesignTag::long_term:
        return gamma_params_generic(stats.beta_sd,
                                    cascaded_moments(stats, long_term_phases(stats)), nu,
                                    DesignTag::long_term);
    case DesignTag::equal:
        return gamma_params_generic(stats.beta_sd,
                                    cascaded_moments(stats, equal_phases(element_count)),
                                    nu, DesignTag::equal);
    case DesignTag::random:
        if (redraw_random)
            return gamma_params_generic(
                stats.beta_sd, cascaded_moments_phase_averaged(stats, element_count), nu,
                DesignTag::random);
        if (fixed_random_profile == nullptr)
            throw std::invalid_argument(
                "gamma_params_for_design: draw-once random needs its profile");
        return gamma_params_generic(stats.beta_sd,
                                    cascaded_moments(stats, *fixed_random_profile), nu,
                                    DesignTag::random);
    }
    throw std::invalid_argument("gamma_params_for_design: unknown design");
}

double coverage_probability(const GammaApprox& approx, double target_rate)
{
    if (target_rate < 0.0)
        throw std::domain_error("coverage_probability: target rate must be nonnegative");
    const double z = std::exp2(target_rate) - 1.0;
    return reg_upper_gamma_q(approx.shape, z / approx.scale);
}

double coverage_asymptote(const GammaApprox& approx, double target_rate)
{
    if (target_rate < 0.0)
        throw std::domain_error("coverage_asymptote: target rate must be nonnegative");
    const double z = std::exp2(target_rate) - 1.0;
    if (z == 0.0)
        return 1.0;
    const double k = approx.shape;
    const double log_term = k * std::log(z / approx.scale) - log_gamma(k);
    return 1.0 - std::exp(log_term) / sq(k);
}

double log_outage(const GammaApprox& approx, double target_rate)
{
    if (target_rate < 0.0)
        throw std::domain_error("log_outage: target rate must be nonnegative");
    const double z = std::exp2(target_rate) - 1.0;
    return log_reg_lower_gamma(approx.shape, z / approx.scale);
}

double simplified_shape(const LinkStatistics& stats, int element_count, DesignTag design)
{
    const double M = static_cast<double>(element_count);
    switch (design) {
    case DesignTag::long_term: {
        const double K_tilde = stats.K_sr + stats.K_rd + 1.0;
        const double eta = M * M;
        const double kk = stats.K_sr * stats.K_rd;
        return sq(kk * eta + K_tilde * M) /
               (2.0 * eta * kk * M * K_tilde + sq(M * K_tilde));
    }
    case DesignTag::short_term: {
        const auto s = short_term_core(stats, element_count);
        const double bb = stats.beta_sr * stats.beta_rd;
        return sq(s.c1 + s.c2 * std::sqrt(bb)) / (4.0 * s.c3 + 4.0 * s.c4 * bb);
    }
    default:
        throw std::invalid_argument(
            "simplified_shape: defined for the short- and long-term designs");
    }
}

double ergodic_rate(const GammaApprox& approx, const QuadratureSpec& quad)
{
    return expected_log1p_gamma(approx.shape, approx.scale, quad) / std::numbers::ln2;
}

} // namespace rislab
