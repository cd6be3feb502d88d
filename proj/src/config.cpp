#include "rislab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rislab {

double ScenarioConfig::nu() const
{
    return SnrContext::from_budget_dbm(tx_power_dbm, noise_dbm).nu;
}

std::vector<double> ScenarioConfig::target_grid() const
{
    if (!targets.empty())
        return targets;
    std::vector<double> grid;
    for (int i = 1; i <= 20; ++i)
        grid.push_back(0.5 * i);
    return grid;
}

std::vector<int> ScenarioConfig::sweep() const
{
    if (element_count_explicit)
        return {element_count};
    return m_sweep;
}

Geometry ScenarioConfig::geometry(int element_count_override) const
{
    return geometry(element_count_override, dest_pos);
}

Geometry ScenarioConfig::geometry(int element_count_override, const Vec3& destination) const
{
    Geometry geom;
    geom.source_pos = source_pos;
    geom.ris_center_pos = ris_center_pos;
    geom.dest_pos = destination;
    geom.element_count = element_count_override;
    geom.ris_rows = ris_rows;
    geom.element_spacing = element_spacing;
    geom.wavelength = wavelength();
    geom.validate();
    return geom;
}

void ScenarioConfig::validate() const
{
    if (!(carrier_hz > 0.0))
        throw ConfigError("carrier_hz must be positive");
    if (element_count < 0)
        throw ConfigError("M must be nonnegative");
    if (ris_rows < 0)
        throw ConfigError("M_H must be nonnegative");
    if (element_spacing < 0.0)
        throw ConfigError("d_r must be positive");
    if (sample_count < 1)
        throw ConfigError("samples must be at least 1");
    if (dest_location_count < 1)
        throw ConfigError("dest_locations must be at least 1");
    if (designs.empty())
        throw ConfigError("designs must not be empty");
    for (double xi : targets)
        if (xi < 0.0)
            throw ConfigError("targets must be nonnegative");
    if (panel_b_target < 0.0)
        throw ConfigError("xi must be nonnegative");
    for (int m : m_sweep)
        if (m < 0)
            throw ConfigError("m_sweep entries must be nonnegative");
    for (int axis = 0; axis < 3; ++axis)
        if (dest_box_min[axis] > dest_box_max[axis])
            throw ConfigError("dest_box_min must not exceed dest_box_max");
}

namespace {

std::string_view trim(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

std::vector<std::string> split_list(std::string_view text)
{
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const auto piece = trim(text.substr(
            start, comma == std::string_view::npos ? std::string_view::npos
                                                   : comma - start));
        items.emplace_back(piece);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return items;
}

double parse_double(std::string_view text, std::string_view key, int line)
{
    const auto t = trim(text);
    std::string buffer(t);
    std::size_t used = 0;
    try {
        const double value = std::stod(buffer, &used);
        if (used != buffer.size())
            throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw ConfigError("key '" + std::string(key) + "': expected a number, got '" +
                              buffer + "'",
                          line);
    }
}

std::int64_t parse_int(std::string_view text, std::string_view key, int line)
{
    const auto t = trim(text);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ConfigError("key '" + std::string(key) + "': expected an integer, got '" +
                              std::string(t) + "'",
                          line);
    return value;
}

bool parse_bool(std::string_view text, std::string_view key, int line)
{
    const auto t = trim(text);
    if (t == "true" || t == "1" || t == "yes" || t == "on")
        return true;
    if (t == "false" || t == "0" || t == "no" || t == "off")
        return false;
    throw ConfigError("key '" + std::string(key) + "': expected a boolean, got '" +
                          std::string(t) + "'",
                      line);
}

Vec3 parse_vec3(std::string_view text, std::string_view key, int line)
{
    const auto items = split_list(text);
    if (items.size() != 3)
        throw ConfigError("key '" + std::string(key) + "': expected three coordinates",
                          line);
    return {parse_double(items[0], key, line), parse_double(items[1], key, line),
            parse_double(items[2], key, line)};
}

// d_r accepts plain meters or "lambda/<divisor>"; 0 marks the lambda/4 default.
double parse_spacing(std::string_view text, const ScenarioConfig& config,
                     std::string_view key, int line)
{
    const auto t = trim(text);
    if (t.rfind("lambda/", 0) == 0) {
        const double divisor = parse_double(t.substr(7), key, line);
        if (!(divisor > 0.0))
            throw ConfigError("key 'd_r': lambda divisor must be positive", line);
        return config.wavelength() / divisor;
    }
    const double meters = parse_double(t, key, line);
    if (!(meters > 0.0))
        throw ConfigError("key 'd_r': spacing must be positive", line);
    return meters;
}

void apply_key(ScenarioConfig& config, const std::string& section, std::string_view key,
               std::string_view value, int line)
{
    if (section == "geometry") {
        if (key == "source") config.source_pos = parse_vec3(value, key, line);
        else if (key == "ris") config.ris_center_pos = parse_vec3(value, key, line);
        else if (key == "destination") config.dest_pos = parse_vec3(value, key, line);
        else if (key == "dest_box_min") config.dest_box_min = parse_vec3(value, key, line);
        else if (key == "dest_box_max") config.dest_box_max = parse_vec3(value, key, line);
        else if (key == "dest_locations")
            config.dest_location_count = static_cast<int>(parse_int(value, key, line));
        else throw ConfigError("unknown key '" + std::string(key) + "' in [geometry]", line);
        return;
    }
    if (section == "rf") {
        if (key == "carrier_hz") config.carrier_hz = parse_double(value, key, line);
        else if (key == "tx_power_dbm") config.tx_power_dbm = parse_double(value, key, line);
        else if (key == "noise_dbm") config.noise_dbm = parse_double(value, key, line);
        else if (key == "bandwidth_hz") config.bandwidth_hz = parse_double(value, key, line);
        else throw ConfigError("unknown key '" + std::string(key) + "' in [rf]", line);
        return;
    }
    if (section == "ris") {
        if (key == "M") {
            config.element_count = static_cast<int>(parse_int(value, key, line));
            config.element_count_explicit = true;
        } else if (key == "M_H") {
            config.ris_rows = static_cast<int>(parse_int(value, key, line));
        } else if (key == "d_r") {
            config.element_spacing = parse_spacing(value, config, key, line);
        } else {
            throw ConfigError("unknown key '" + std::string(key) + "' in [ris]", line);
        }
        return;
    }
    if (section == "experiment") {
        if (key == "designs") {
            config.designs.clear();
            for (const auto& item : split_list(value)) {
                try {
                    config.designs.push_back(design_from_string(item));
                } catch (const std::invalid_argument&) {
                    throw ConfigError("key 'designs': unknown design '" + item + "'", line);
                }
            }
        } else if (key == "targets") {
            config.targets.clear();
            for (const auto& item : split_list(value))
                config.targets.push_back(parse_double(item, key, line));
        } else if (key == "xi") {
            config.panel_b_target = parse_double(value, key, line);
        } else if (key == "m_sweep") {
            config.m_sweep.clear();
            for (const auto& item : split_list(value))
                config.m_sweep.push_back(static_cast<int>(parse_int(item, key, line)));
        } else if (key == "samples") {
            const auto n = parse_int(value, key, line);
            if (n < 1)
                throw ConfigError("key 'samples': must be at least 1", line);
            config.sample_count = static_cast<std::uint64_t>(n);
        } else if (key == "seed") {
            config.seed = static_cast<std::uint64_t>(parse_int(value, key, line));
        } else if (key == "random_redraw") {
            config.random_redraw = parse_bool(value, key, line);
        } else if (key == "los_only") {
            config.los_only = parse_bool(value, key, line);
        } else {
            throw ConfigError("unknown key '" + std::string(key) + "' in [experiment]",
                              line);
        }
        return;
    }
    throw ConfigError("key '" + std::string(key) + "' outside any known section", line);
}

} // namespace

ScenarioConfig parse_config(std::string_view text)
{
    ScenarioConfig config;
    std::string section;
    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_number;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("malformed section header", line_number);
            const auto name = trim(line.substr(1, line.size() - 2));
            if (name != "geometry" && name != "rf" && name != "ris" &&
                name != "experiment")
                throw ConfigError("unknown section [" + std::string(name) + "]",
                                  line_number);
            section = std::string(name);
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("expected 'key = value'", line_number);
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("empty key", line_number);
        apply_key(config, section, key, value, line_number);
    }

    config.validate();
    return config;
}

ScenarioConfig load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

} // namespace rislab
