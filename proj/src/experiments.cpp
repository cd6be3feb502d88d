#include "rislab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace rislab {

namespace {

std::vector<DesignTag> sorted_designs(const ScenarioConfig& config)
{
    auto designs = config.designs;
    std::sort(designs.begin(), designs.end(), [](DesignTag a, DesignTag b) {
        return to_string(a) < to_string(b);
    });
    designs.erase(std::unique(designs.begin(), designs.end()), designs.end());
    return designs;
}

GammaApprox closed_form_params(const ScenarioConfig& config, const LinkStatistics& stats,
                               int element_count, DesignTag design)
{
    if (design == DesignTag::random && !config.random_redraw) {
        const auto profile = fixed_random_profile(element_count, config.seed);
        return gamma_params_for_design(stats, element_count, config.nu(), design, false,
                                       &profile);
    }
    return gamma_params_for_design(stats, element_count, config.nu(), design,
                                   config.random_redraw);
}

SimulationPlan plan_for(const ScenarioConfig& config, DesignTag design)
{
    SimulationPlan plan;
    plan.sample_count = config.sample_count;
    plan.base_seed = config.seed;
    plan.design = design;
    plan.redraw_random_phases = config.random_redraw;
    plan.los_only = config.los_only;
    return plan;
}

std::string csv_escape(const std::string& cell)
{
    if (cell.find_first_of(",\"\n\r") == std::string::npos)
        return cell;
    std::string quoted = "\"";
    for (const char c : cell) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

std::string format_real(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

Table run_panel_a(const ScenarioConfig& config, ExecMode mode)
{
    const auto stats = derive_link_statistics(config.geometry(config.element_count));
    const SnrContext ctx{config.nu()};
    auto targets = config.target_grid();
    std::sort(targets.begin(), targets.end());
    const auto designs = sorted_designs(config);

    struct DesignData {
        GammaApprox params;
        std::vector<double> samples;
    };
    std::map<DesignTag, DesignData> data;
    for (const auto design : designs) {
        DesignData d;
        d.params = closed_form_params(config, stats, config.element_count, design);
        d.samples = simulate_snr_samples(stats, ctx, plan_for(config, design), mode);
        data.emplace(design, std::move(d));
    }

    Table table{{"xi", "design", "closed_form", "mc_estimate", "ci_half_width"}, {}};
    for (const double xi : targets) {
        for (const auto design : designs) {
            const auto& d = data.at(design);
            const double closed = coverage_probability(d.params, xi);
            const auto mc = empirical_coverage(d.samples, xi);
            table.rows.push_back({format_real(xi), std::string(to_string(design)),
                                  format_real(closed), format_real(mc.value),
                                  format_real(mc.half_width_95)});
        }
    }
    return table;
}

Table run_panel_b(const ScenarioConfig& config, ExecMode)
{
    const auto designs = sorted_designs(config);
    auto sweep = config.sweep();
    std::sort(sweep.begin(), sweep.end());

    std::vector<Vec3> destinations(static_cast<std::size_t>(config.dest_location_count));
    for (std::size_t i = 0; i < destinations.size(); ++i) {
        RandomStream stream(config.seed, i, kDestinationSubstream);
        for (int axis = 0; axis < 3; ++axis)
            destinations[i][axis] =
                config.dest_box_min[axis] +
                stream.next_unit() * (config.dest_box_max[axis] - config.dest_box_min[axis]);
    }

    Table table{{"M", "design", "avg_closed_form_coverage"}, {}};
    for (const int m : sweep) {
        for (const auto design : designs) {
            double sum = 0.0;
            for (const auto& dest : destinations) {
                const auto stats = derive_link_statistics(config.geometry(m, dest));
                const auto params = closed_form_params(config, stats, m, design);
                sum += coverage_probability(params, config.panel_b_target);
            }
            table.rows.push_back({std::to_string(m), std::string(to_string(design)),
                                  format_real(sum / destinations.size())});
        }
    }
    return table;
}

Table run_panel_c(const ScenarioConfig& config, ExecMode mode)
{
    const SnrContext ctx{config.nu()};
    const auto designs = sorted_designs(config);
    auto sweep = config.sweep();
    std::sort(sweep.begin(), sweep.end());

    Table table{{"M", "design", "closed_form_rate", "mc_rate", "ci_half_width"}, {}};
    for (const int m : sweep) {
        const auto stats = derive_link_statistics(config.geometry(m));
        for (const auto design : designs) {
            const auto params = closed_form_params(config, stats, m, design);
            const double closed = ergodic_rate(params);
            const auto samples = simulate_snr_samples(stats, ctx, plan_for(config, design), mode);
            const auto mc = empirical_ergodic_rate(samples);
            table.rows.push_back({std::to_string(m), std::string(to_string(design)),
                                  format_real(closed), format_real(mc.value),
                                  format_real(mc.half_width_95)});
        }
    }
    return table;
}

void emit_csv(const Table& table, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("emit_csv: cannot open " + path.string());

    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0)
            out << ',';
        out << csv_escape(table.columns[c]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                out << ',';
            out << csv_escape(row[c]);
        }
        out << '\n';
    }
    if (!out)
        throw std::runtime_error("emit_csv: write failed for " + path.string());
}

bool run_validation(const ScenarioConfig& config, std::ostream& out, ExecMode mode)
{
    const int m_count = config.element_count;
    const auto stats = derive_link_statistics(config.geometry(m_count));
    const SnrContext ctx{config.nu()};
    const double nu = ctx.nu;
    bool ok = true;

    const auto report = [&](bool passed, const std::string& text) {
        out << (passed ? "[ ok ] " : "[FAIL] ") << text << '\n';
        ok = ok && passed;
    };
    const auto info = [&](const std::string& text) { out << "[info] " << text << '\n'; };

    // Shape-parameter equivalence between the o1/o2 long-term closed form
    // and the generic moment match under the optimal long-term profile.
    const auto lt_profile = long_term_phases(stats);
    const auto moments = cascaded_moments(stats, lt_profile);
    const auto lt_closed = gamma_params_long_term(stats, m_count, nu);
    const auto lt_generic = gamma_params_generic(stats.beta_sd, moments, nu,
                                                 DesignTag::long_term);
    const double k_gap =
        std::fabs(lt_closed.shape - lt_generic.shape) / lt_generic.shape;
    report(k_gap <= 1e-10, "long-term shape parameter matches the generic moment match: "
                           "relative gap " +
                               format_real(k_gap));

    // Scale-parameter disclosure: k*w of the o1/o2 form vs the matched mean
    // nu (beta_sd + delta).
    const double matched_mean = nu * (stats.beta_sd + moments.delta);
    const double kw_closed = lt_closed.shape * lt_closed.scale;
    const double kw_generic = lt_generic.shape * lt_generic.scale;
    info("long-term k*w vs nu*(beta_sd+delta): relative discrepancy = " +
         format_real(std::fabs(kw_closed - matched_mean) / matched_mean) +
         " for the o1/o2 scale form (its numerator carries an extra factor of nu "
         "on the quadratic term); moment-consistent parameters are used for the "
         "coverage and rate pipelines, where the discrepancy is " +
         format_real(std::fabs(kw_generic - matched_mean) / matched_mean));

    // Dominant-term shape limits next to the full expressions.
    info("shape parameters at M = " + std::to_string(m_count) + ": long-term full " +
         format_real(lt_generic.shape) + ", simplified " +
         format_real(simplified_shape(stats, m_count, DesignTag::long_term)) +
         "; short-term full " +
         format_real(gamma_params_short_term(stats, m_count, nu).shape) +
         ", simplified " +
         format_real(simplified_shape(stats, m_count, DesignTag::short_term)));

    // Cascade-moment cross-check against the sampled channel.
    const std::uint64_t n_moments = std::max<std::uint64_t>(config.sample_count, 10000);
    const auto mc_moments =
        empirical_cascade_moments(stats, lt_profile, n_moments, config.seed, mode);
    const double scale_tol =
        std::max(1.0, std::sqrt(1e6 / static_cast<double>(n_moments)));
    const double rel2 = std::fabs(mc_moments.second - moments.delta) / moments.delta;
    const double rel4 = std::fabs(mc_moments.fourth - moments.fourth) / moments.fourth;
    report(rel2 <= 0.01 * scale_tol,
           "cascade second moment vs " + std::to_string(n_moments) +
               "-sample estimate: relative error " + format_real(rel2));
    report(rel4 <= 0.03 * scale_tol,
           "cascade fourth moment vs " + std::to_string(n_moments) +
               "-sample estimate: relative error " + format_real(rel4));

    // Short-term optimality bound, paired samples.
    const auto paired = simulate_paired_snr(stats, ctx, plan_for(config, DesignTag::short_term), mode);
    std::uint64_t violations = 0;
    for (std::size_t i = 0; i < paired.short_term.size(); ++i) {
        if (paired.short_term[i] < paired.long_term[i] ||
            paired.short_term[i] < paired.equal[i] ||
            paired.short_term[i] < paired.random[i])
            ++violations;
    }
    report(violations == 0, "short-term SNR dominates every other design on all " +
                                std::to_string(paired.short_term.size()) +
                                " paired trials (violations: " +
                                std::to_string(violations) + ")");

    // Closed-form coverage and rate vs the sampled estimates.
    const double xi = config.panel_b_target;
    const auto st_params = gamma_params_short_term(stats, m_count, nu);
    const double cov_gap_lt = std::fabs(coverage_probability(lt_generic, xi) -
                                        empirical_coverage(paired.long_term, xi).value);
    const double cov_gap_st = std::fabs(coverage_probability(st_params, xi) -
                                        empirical_coverage(paired.short_term, xi).value);
    report(cov_gap_lt <= 0.02, "long-term coverage at xi = " + format_real(xi) +
                                   ": closed form within " + format_real(cov_gap_lt) +
                                   " of the sampled estimate");
    report(cov_gap_st <= 0.02, "short-term coverage at xi = " + format_real(xi) +
                                   ": closed form within " + format_real(cov_gap_st) +
                                   " of the sampled estimate");

    const double rate_lt = ergodic_rate(lt_generic);
    const double rate_st = ergodic_rate(st_params);
    const double mc_rate_lt = empirical_ergodic_rate(paired.long_term).value;
    const double mc_rate_st = empirical_ergodic_rate(paired.short_term).value;
    const double rate_gap_lt = std::fabs(rate_lt - mc_rate_lt) / mc_rate_lt;
    const double rate_gap_st = std::fabs(rate_st - mc_rate_st) / mc_rate_st;
    report(rate_gap_lt <= 0.01, "long-term ergodic rate: closed form " +
                                    format_real(rate_lt) + " b/s/Hz within " +
                                    format_real(rate_gap_lt) + " relative of sampled " +
                                    format_real(mc_rate_lt));
    report(rate_gap_st <= 0.01, "short-term ergodic rate: closed form " +
                                    format_real(rate_st) + " b/s/Hz within " +
                                    format_real(rate_gap_st) + " relative of sampled " +
                                    format_real(mc_rate_st));

    out << (ok ? "validation passed" : "validation FAILED") << '\n';
    return ok;
}

} // namespace rislab
