#include "rislab/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rislab {

double distance(const Vec3& a, const Vec3& b)
{
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    const double dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double path_loss_db(LinkKind kind, double distance_m)
{
    if (!(distance_m > 0.0))
        throw std::domain_error("path_loss_db: distance must be positive");
    return kind == LinkKind::direct ? -33.1 - 3.50 * std::log10(distance_m)
                                    : -25.5 - 2.4 * std::log10(distance_m);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double rician_factor(double distance_m)
{
    if (distance_m < 0.0)
        throw std::domain_error("rician_factor: distance must be nonnegative");
    return std::pow(10.0, 1.3 - 0.003 * distance_m);
}

int Geometry::rows() const
{
    if (ris_rows > 0) {
        if (element_count > 0 && element_count % ris_rows != 0)
            throw std::invalid_argument("Geometry: ris_rows must divide element_count");
        return ris_rows;
    }
    if (element_count <= 1)
        return 1;
    return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(element_count))));
}

double Geometry::spacing() const
{
    return element_spacing > 0.0 ? element_spacing : wavelength / 4.0;
}

Vec3 Geometry::element_offset(int m) const
{
    const int m_h = rows();
    const double d_r = spacing();
    return {0.0, static_cast<double>(m % m_h) * d_r, static_cast<double>(m / m_h) * d_r};
}

void Geometry::validate() const
{
    if (element_count < 0)
        throw std::invalid_argument("Geometry: element_count must be nonnegative");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("Geometry: wavelength must be positive");
    if (!(spacing() > 0.0))
        throw std::invalid_argument("Geometry: element spacing must be positive");
    (void)rows();
    if (distance(source_pos, ris_center_pos) <= 0.0 || distance(ris_center_pos, dest_pos) <= 0.0 ||
        distance(source_pos, dest_pos) <= 0.0)
        throw std::domain_error("Geometry: node positions must be pairwise distinct");
}

namespace {

struct AspectAngles {
    double psi;
    double phi;
};

AspectAngles angles_from_panel(const Vec3& panel_center, const Vec3& node)
{
    const double d = distance(panel_center, node);
    const double ux = (node[0] - panel_center[0]) / d;
    const double uy = (node[1] - panel_center[1]) / d;
    double uz = (node[2] - panel_center[2]) / d;
    uz = std::clamp(uz, -1.0, 1.0);
    return {std::atan2(uy, ux), std::asin(uz)};
}

} // namespace

cvec los_vector(double K, double beta, double psi, double phi, const Geometry& geometry)
{
    if (K < 0.0)
        throw std::domain_error("los_vector: Rician factor must be nonnegative");
    if (!(beta > 0.0))
        throw std::domain_error("los_vector: channel gain must be positive");

    const double amplitude = std::sqrt(K * beta / (K + 1.0));
    const double scale = 2.0 * std::numbers::pi / geometry.wavelength;
    const double kx = std::cos(psi) * std::cos(phi);
    const double ky = std::sin(psi) * std::cos(phi);
    const double kz = std::sin(psi);

    cvec out(static_cast<std::size_t>(geometry.element_count));
    for (int m = 0; m < geometry.element_count; ++m) {
        const Vec3 u = geometry.element_offset(m);
        const double phase = scale * (kx * u[0] + ky * u[1] + kz * u[2]);
        out[static_cast<std::size_t>(m)] = std::polar(amplitude, phase);
    }
    return out;
}

LinkStatistics derive_link_statistics(const Geometry& geometry)
{
    geometry.validate();

    const double d_sd = distance(geometry.source_pos, geometry.dest_pos);
    const double d_sr = distance(geometry.source_pos, geometry.ris_center_pos);
    const double d_rd = distance(geometry.ris_center_pos, geometry.dest_pos);

    LinkStatistics stats;
    stats.beta_sd = db_to_linear(path_loss_db(LinkKind::direct, d_sd));
    stats.beta_sr = db_to_linear(path_loss_db(LinkKind::indirect, d_sr));
    stats.beta_rd = db_to_linear(path_loss_db(LinkKind::indirect, d_rd));
    stats.K_sr = rician_factor(d_sr);
    stats.K_rd = rician_factor(d_rd);

    const auto src = angles_from_panel(geometry.ris_center_pos, geometry.source_pos);
    const auto dst = angles_from_panel(geometry.ris_center_pos, geometry.dest_pos);
    stats.psi_sr = src.psi;
    stats.phi_sr = src.phi;
    stats.psi_rd = dst.psi;
    stats.phi_rd = dst.phi;

    stats.hbar_sr = los_vector(stats.K_sr, stats.beta_sr, stats.psi_sr, stats.phi_sr, geometry);
    stats.hbar_rd = los_vector(stats.K_rd, stats.beta_rd, stats.psi_rd, stats.phi_rd, geometry);
    return stats;
}

ChannelRealization sample_realization(const LinkStatistics& stats, RandomStream& stream,
                                      bool los_only)
{
    ChannelRealization ch;
    ch.h_sd = std::sqrt(stats.beta_sd) * stream.next_cnormal(1.0);
    ch.h_sr = stats.hbar_sr;
    ch.h_rd = stats.hbar_rd;
    if (!los_only) {
        const double var_sr = stats.beta_sr / (stats.K_sr + 1.0);
        const double var_rd = stats.beta_rd / (stats.K_rd + 1.0);
        for (auto& h : ch.h_sr)
            h += stream.next_cnormal(var_sr);
        for (auto& h : ch.h_rd)
            h += stream.next_cnormal(var_rd);
    }
    return ch;
}

} // namespace rislab
