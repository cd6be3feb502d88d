#include <doctest.h>

#include "rislab/config.hpp"

using namespace rislab;

TEST_CASE("empty text yields the reference scenario")
{
    const auto config = parse_config("");
    CHECK(config.source_pos == Vec3{0.0, 0.0, 0.0});
    CHECK(config.ris_center_pos == Vec3{27.0, 25.0, 25.0});
    CHECK(config.dest_pos == Vec3{180.0, 15.0, 15.0});
    CHECK(config.tx_power_dbm == 13.0);
    CHECK(config.noise_dbm == -94.0);
    CHECK(config.carrier_hz == 1.8e9);
    CHECK(config.bandwidth_hz == 10e6);
    CHECK(config.element_count == 100);
    CHECK_FALSE(config.element_count_explicit);
    CHECK(config.sample_count == 100000);
    CHECK(config.designs.size() == 4);
    CHECK(config.m_sweep == std::vector<int>{16, 36, 64, 100, 144, 196, 256});
    CHECK(config.nu() == doctest::Approx(50118723362.727228).epsilon(1e-12));
    CHECK(config.wavelength() == doctest::Approx(0.16655136555555555).epsilon(1e-14));
    CHECK(config.panel_b_target == 4.0);
    CHECK(config.dest_box_min == Vec3{30.0, -30.0, 1.5});
    CHECK(config.dest_box_max == Vec3{200.0, 30.0, 15.0});
    CHECK(config.dest_location_count == 100);

    const auto grid = config.target_grid();
    CHECK(grid.size() == 20);
    CHECK(grid.front() == 0.5);
    CHECK(grid.back() == 10.0);
}

TEST_CASE("explicit M collapses the sweep")
{
    const auto config = parse_config("[ris]\nM = 100\n");
    CHECK(config.element_count_explicit);
    CHECK(config.sweep() == std::vector<int>{100});

    const auto untouched = parse_config("[ris]\nM_H = 2\n");
    CHECK(untouched.sweep().size() == 7);
}

TEST_CASE("values, lists and spacing forms parse")
{
    const auto config = parse_config("[geometry]\n"
                                     "destination = 150, -10, 2.5\n"
                                     "dest_locations = 25\n"
                                     "[rf]\n"
                                     "tx_power_dbm = 10\n"
                                     "[ris]\n"
                                     "M = 64\n"
                                     "M_H = 8\n"
                                     "d_r = lambda/2\n"
                                     "[experiment]\n"
                                     "designs = short_term, long_term\n"
                                     "targets = 1, 2, 4\n"
                                     "m_sweep = 16, 64\n"
                                     "samples = 5000\n"
                                     "seed = 99\n"
                                     "random_redraw = false\n");
    CHECK(config.dest_pos == Vec3{150.0, -10.0, 2.5});
    CHECK(config.dest_location_count == 25);
    CHECK(config.tx_power_dbm == 10.0);
    CHECK(config.element_count == 64);
    CHECK(config.ris_rows == 8);
    CHECK(config.element_spacing ==
          doctest::Approx(config.wavelength() / 2.0).epsilon(1e-14));
    CHECK(config.designs ==
          std::vector<DesignTag>{DesignTag::short_term, DesignTag::long_term});
    CHECK(config.targets == std::vector<double>{1.0, 2.0, 4.0});
    CHECK(config.sample_count == 5000);
    CHECK(config.seed == 99);
    CHECK_FALSE(config.random_redraw);

    const auto metric = parse_config("[ris]\nd_r = 0.05\n");
    CHECK(metric.element_spacing == 0.05);
}

TEST_CASE("comments and blank lines are ignored")
{
    const auto config = parse_config("# scenario\n\n[rf]\n"
                                     "noise_dbm = -90 # thermal floor\n");
    CHECK(config.noise_dbm == -90.0);
}

TEST_CASE("parse errors carry line numbers")
{
    try {
        parse_config("[rf]\ntx_power_dbm = abc\n");
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("tx_power_dbm") != std::string::npos);
    }

    try {
        parse_config("[rf]\n\nbogus_key = 3\n");
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 3);
    }

    CHECK_THROWS_AS(parse_config("[nope]\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("orphan = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[geometry]\nsource = 1, 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\nsamples = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\ndesigns = sideways\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[ris]\nd_r = lambda/0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("no equals sign here\n"), ConfigError);
}

TEST_CASE("geometry construction honors the config")
{
    const auto config = parse_config("[ris]\nM_H = 10\n");
    const auto geom = config.geometry(100);
    CHECK(geom.rows() == 10);
    CHECK(geom.spacing() == doctest::Approx(config.wavelength() / 4.0).epsilon(1e-14));

    const auto moved = config.geometry(100, Vec3{50.0, 0.0, 2.0});
    CHECK(moved.dest_pos == Vec3{50.0, 0.0, 2.0});
}
