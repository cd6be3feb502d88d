#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rislab/channel.hpp"
#include "rislab/phase_design.hpp"

namespace rislab {

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line_(line)
    {
    }

    int line() const { return line_; }

private:
    int line_;
};

// Full experiment description with the reference deployment pre-filled:
// source at the origin, panel center (27, 25, 25) m, destination
// (180, 15, 15) m, 13 dBm transmit power, -94 dBm noise, 1.8 GHz carrier.
struct ScenarioConfig {
    Vec3 source_pos{0.0, 0.0, 0.0};
    Vec3 ris_center_pos{27.0, 25.0, 25.0};
    Vec3 dest_pos{180.0, 15.0, 15.0};
    Vec3 dest_box_min{30.0, -30.0, 1.5};
    Vec3 dest_box_max{200.0, 30.0, 15.0};
    int dest_location_count = 100;

    double carrier_hz = 1.8e9;
    double tx_power_dbm = 13.0;
    double noise_dbm = -94.0;
    double bandwidth_hz = 10e6; // recorded, informational

    int element_count = 100; // M
    bool element_count_explicit = false;
    int ris_rows = 0;             // M_H; 0 = near-square default
    double element_spacing = 0.0; // d_r in meters; 0 = lambda/4

    std::vector<DesignTag> designs{DesignTag::short_term, DesignTag::long_term,
                                   DesignTag::equal, DesignTag::random};
    std::vector<double> targets;    // xi grid; empty = 0.5 .. 10 step 0.5
    double panel_b_target = 4.0;    // fixed xi for the location-averaged panel
    std::vector<int> m_sweep{16, 36, 64, 100, 144, 196, 256};
    std::uint64_t sample_count = 100000;
    std::uint64_t seed = 1;
    bool random_redraw = true;
    bool los_only = false;

    double wavelength() const { return 299792458.0 / carrier_hz; }
    double nu() const;
    std::vector<double> target_grid() const;
    std::vector<int> sweep() const; // collapses to {M} when M was set explicitly
    Geometry geometry(int element_count_override) const;
    Geometry geometry(int element_count_override, const Vec3& destination) const;
    void validate() const;
};

// Line-oriented `key = value` format with [section] headers; sections
// [geometry], [rf], [ris], [experiment]; '#' starts a comment. Unknown keys
// and sections are errors carrying the offending line number.
ScenarioConfig parse_config(std::string_view text);

ScenarioConfig load_config_file(const std::string& path);

} // namespace rislab
