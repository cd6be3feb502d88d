#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rislab/analytics.hpp"
#include "rislab/config.hpp"
#include "rislab/montecarlo.hpp"

namespace rislab {

// Cells are preformatted (12 significant digits for reals) so emitted bytes
// are a pure function of the numbers.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string format_real(double value);

// Coverage vs target rate at the fixed destination:
// (xi, design, closed_form, mc_estimate, ci_half_width).
Table run_panel_a(const ScenarioConfig& config, ExecMode mode = ExecMode::openmp);

// Closed-form coverage at the fixed target, averaged over destinations drawn
// uniformly from the configured box: (M, design, avg_closed_form_coverage).
Table run_panel_b(const ScenarioConfig& config, ExecMode mode = ExecMode::openmp);

// Ergodic rate vs element count:
// (M, design, closed_form_rate, mc_rate, ci_half_width).
Table run_panel_c(const ScenarioConfig& config, ExecMode mode = ExecMode::openmp);

// Header row plus one line per table row; '.' decimal separator, LF line
// ends, RFC-4180 quoting. Byte-stable for fixed inputs.
void emit_csv(const Table& table, const std::filesystem::path& path);

// Closed-form-vs-oracle cross checks, printed one line each. Returns overall
// success; the long-term scale-parameter discrepancy line is informational.
bool run_validation(const ScenarioConfig& config, std::ostream& out,
                    ExecMode mode = ExecMode::openmp);

} // namespace rislab
