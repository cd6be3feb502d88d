#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rislab/channel.hpp"

using namespace rislab;

namespace {

Geometry reference_geometry(int m = 100)
{
    Geometry geom;
    geom.element_count = m;
    return geom;
}

} // namespace

TEST_CASE("path loss anchors and monotonicity")
{
    CHECK(path_loss_db(LinkKind::direct, 1.0) == doctest::Approx(-33.1).epsilon(1e-12));
    CHECK(path_loss_db(LinkKind::indirect, 1.0) == doctest::Approx(-25.5).epsilon(1e-12));
    // source (0,0,0) to destination (180,15,15): d = sqrt(32850)
    CHECK(path_loss_db(LinkKind::direct, std::sqrt(32850.0)) ==
          doctest::Approx(-41.0039369043177).epsilon(1e-12));

    CHECK_THROWS_AS(path_loss_db(LinkKind::direct, 0.0), std::domain_error);
    CHECK_THROWS_AS(path_loss_db(LinkKind::indirect, -3.0), std::domain_error);

    double previous_direct = path_loss_db(LinkKind::direct, 0.5);
    double previous_indirect = path_loss_db(LinkKind::indirect, 0.5);
    for (double d = 1.0; d < 1000.0; d *= 1.7) {
        CHECK(path_loss_db(LinkKind::direct, d) < previous_direct);
        CHECK(path_loss_db(LinkKind::indirect, d) < previous_indirect);
        previous_direct = path_loss_db(LinkKind::direct, d);
        previous_indirect = path_loss_db(LinkKind::indirect, d);
    }
}

TEST_CASE("rician factor anchors and monotonicity")
{
    CHECK(rician_factor(0.0) == doctest::Approx(19.952623149688797).epsilon(1e-12));
    CHECK(rician_factor(100.0) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(rician_factor(std::sqrt(1979.0)) ==
          doctest::Approx(14.673784661155636).epsilon(1e-12));
    CHECK_THROWS_AS(rician_factor(-1.0), std::domain_error);

    double previous = rician_factor(0.0);
    for (double d = 10.0; d < 500.0; d += 37.0) {
        CHECK(rician_factor(d) < previous);
        previous = rician_factor(d);
    }
}

TEST_CASE("derived statistics at the reference deployment")
{
    const auto geom = reference_geometry();
    CHECK(distance(geom.source_pos, geom.ris_center_pos) ==
          doctest::Approx(std::sqrt(1979.0)).epsilon(1e-14));
    CHECK(distance(geom.ris_center_pos, geom.dest_pos) ==
          doctest::Approx(std::sqrt(23609.0)).epsilon(1e-14));

    const auto stats = derive_link_statistics(geom);
    CHECK(stats.beta_sd ==
          doctest::Approx(db_to_linear(-41.0039369043177)).epsilon(1e-10));
    CHECK(stats.K_sr == doctest::Approx(14.673784661155636).epsilon(1e-12));
    CHECK(stats.element_count() == 100);

    // Constant LoS modulus sqrt(K beta / (K+1)) on every element.
    const double expected_sr =
        std::sqrt(stats.K_sr * stats.beta_sr / (stats.K_sr + 1.0));
    for (const auto& h : stats.hbar_sr)
        CHECK(std::abs(h) == doctest::Approx(expected_sr).epsilon(1e-12));
}

TEST_CASE("boresight destination sees zero angles")
{
    Geometry geom;
    geom.source_pos = {0.0, 5.0, 1.0};
    geom.ris_center_pos = {0.0, 0.0, 0.0};
    geom.dest_pos = {40.0, 0.0, 0.0};
    geom.element_count = 4;
    const auto stats = derive_link_statistics(geom);
    CHECK(stats.psi_rd == doctest::Approx(0.0));
    CHECK(stats.phi_rd == doctest::Approx(0.0));
}

TEST_CASE("coincident nodes are rejected")
{
    Geometry geom = reference_geometry();
    geom.dest_pos = geom.ris_center_pos;
    CHECK_THROWS_AS(derive_link_statistics(geom), std::domain_error);
}

TEST_CASE("explicit row count must divide the element count")
{
    Geometry geom = reference_geometry(10);
    geom.ris_rows = 3;
    CHECK_THROWS_AS(geom.rows(), std::invalid_argument);
    geom.ris_rows = 5;
    CHECK(geom.rows() == 5);
    geom.ris_rows = 0;
    CHECK(geom.rows() == 4); // near-square default for M = 10
}

TEST_CASE("steering vector values")
{
    Geometry geom;
    geom.element_count = 4;
    geom.ris_rows = 2;
    geom.wavelength = 0.5;
    geom.element_spacing = geom.wavelength / 4.0;

    SUBCASE("zero Rician factor gives the zero vector")
    {
        const auto v = los_vector(0.0, 1e-3, 0.7, -0.2, geom);
        for (const auto& h : v)
            CHECK(std::abs(h) == 0.0);
    }

    SUBCASE("boresight aspect gives constant-phase entries")
    {
        const auto v = los_vector(5.0, 1e-3, 0.0, 0.0, geom);
        const double amp = std::sqrt(5.0 * 1e-3 / 6.0);
        for (const auto& h : v) {
            CHECK(h.real() == doctest::Approx(amp).epsilon(1e-12));
            CHECK(h.imag() == doctest::Approx(0.0));
        }
    }

    SUBCASE("edge-on azimuth walks the element grid in quarter turns")
    {
        // psi = pi/2, phi = 0: wave vector (2 pi / lambda)(0, 1, 1); with
        // d_r = lambda/4 the element phases are {0, pi/2, pi/2, pi}.
        const auto v = los_vector(5.0, 1e-3, std::numbers::pi / 2.0, 0.0, geom);
        const double expected[] = {0.0, std::numbers::pi / 2.0, std::numbers::pi / 2.0,
                                   std::numbers::pi};
        for (int m = 0; m < 4; ++m) {
            const double phase = std::arg(v[static_cast<std::size_t>(m)]);
            CHECK(std::remainder(phase - expected[m], 2.0 * std::numbers::pi) ==
                  doctest::Approx(0.0).epsilon(1e-12));
        }
    }

    SUBCASE("nonpositive gain is rejected")
    {
        CHECK_THROWS_AS(los_vector(1.0, 0.0, 0.0, 0.0, geom), std::domain_error);
        CHECK_THROWS_AS(los_vector(-1.0, 1.0, 0.0, 0.0, geom), std::domain_error);
    }
}

TEST_CASE("sampling reproduces the stream and the requested powers")
{
    Geometry geom = reference_geometry(2);
    const auto stats = derive_link_statistics(geom);

    SUBCASE("bit-identical replay")
    {
        RandomStream s1(99, 5), s2(99, 5);
        const auto a = sample_realization(stats, s1);
        const auto b = sample_realization(stats, s2);
        CHECK(a.h_sd == b.h_sd);
        for (int m = 0; m < 2; ++m) {
            CHECK(a.h_sr[static_cast<std::size_t>(m)] == b.h_sr[static_cast<std::size_t>(m)]);
            CHECK(a.h_rd[static_cast<std::size_t>(m)] == b.h_rd[static_cast<std::size_t>(m)]);
        }
    }

    SUBCASE("los_only pins the indirect hops to their LoS values")
    {
        RandomStream stream(1, 0);
        const auto ch = sample_realization(stats, stream, true);
        for (int m = 0; m < 2; ++m) {
            CHECK(ch.h_sr[static_cast<std::size_t>(m)] ==
                  stats.hbar_sr[static_cast<std::size_t>(m)]);
            CHECK(ch.h_rd[static_cast<std::size_t>(m)] ==
                  stats.hbar_rd[static_cast<std::size_t>(m)]);
        }
    }

    SUBCASE("per-entry powers converge to the large-scale gains")
    {
        const int n = 1000000;
        double p_sd = 0.0, p_sr = 0.0, p_rd = 0.0;
        for (int i = 0; i < n; ++i) {
            RandomStream stream(2024, static_cast<std::uint64_t>(i));
            const auto ch = sample_realization(stats, stream);
            p_sd += std::norm(ch.h_sd);
            p_sr += std::norm(ch.h_sr[0]);
            p_rd += std::norm(ch.h_rd[1]);
        }
        CHECK(p_sd / n == doctest::Approx(stats.beta_sd).epsilon(0.01));
        CHECK(p_sr / n == doctest::Approx(stats.beta_sr).epsilon(0.01));
        CHECK(p_rd / n == doctest::Approx(stats.beta_rd).epsilon(0.01));
    }
}
