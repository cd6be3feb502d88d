#pragma once

#include <array>
#include <complex>
#include <vector>

#include "rislab/rng.hpp"

namespace rislab {

using Vec3 = std::array<double, 3>;
using cvec = std::vector<std::complex<double>>;

double distance(const Vec3& a, const Vec3& b);

enum class LinkKind { direct, indirect };

// Large-scale channel gain in dB at distance d (meters).
//   direct:   -33.1 - 3.50 log10(d)
//   indirect: -25.5 - 2.4  log10(d)
double path_loss_db(LinkKind kind, double distance_m);

double db_to_linear(double db);

// Rician factor K = 10^(1.3 - 0.003 d), d in meters.
double rician_factor(double distance_m);

// Deployment description. The reflecting surface lies in the local y-z plane
// of its own frame (axes parallel to the global ones, origin at the panel
// center); element m occupies offset
//   u_m = [0, mod(m-1, M_H) d_r, floor((m-1)/M_H) d_r].
struct Geometry {
    Vec3 source_pos{0.0, 0.0, 0.0};
    Vec3 ris_center_pos{27.0, 25.0, 25.0};
    Vec3 dest_pos{180.0, 15.0, 15.0};
    int element_count = 100; // M
    int ris_rows = 0;        // M_H; 0 selects the near-square default
    double element_spacing = 0.0; // d_r in meters; 0 selects lambda/4
    double wavelength = 299792458.0 / 1.8e9;

    int rows() const;       // resolved M_H; must divide M when set explicitly
    double spacing() const; // resolved d_r
    Vec3 element_offset(int m) const; // u_m for m in [0, M)
    void validate() const;
};

// Large-scale state of one deployment: gains, Rician factors, aspect angles
// of the two hops seen from the panel, and the LoS steering vectors.
struct LinkStatistics {
    double beta_sd = 0.0;
    double beta_sr = 0.0;
    double beta_rd = 0.0;
    double K_sr = 0.0;
    double K_rd = 0.0;
    double psi_sr = 0.0, phi_sr = 0.0;
    double psi_rd = 0.0, phi_rd = 0.0;
    cvec hbar_sr;
    cvec hbar_rd;

    int element_count() const { return static_cast<int>(hbar_sr.size()); }
};

// One coherence-interval draw.
struct ChannelRealization {
    std::complex<double> h_sd{0.0, 0.0};
    cvec h_sr;
    cvec h_rd;
};

// LoS steering vector with amplitude prefactor: entry m is
//   sqrt(K b / (K+1)) exp(j k(psi, phi)^T u_m),
// wave vector k = (2 pi / lambda) [cos(psi)cos(phi), sin(psi)cos(phi), sin(psi)].
// Azimuth psi = atan2(y, x) and elevation phi = asin(z) of the unit direction
// toward the node in the panel frame; the boresight (+x) direction gives
// psi = phi = 0. The third wave-vector component is sin(psi), not sin(phi);
// steering therefore depends on elevation only through the cos(phi) factors.
cvec los_vector(double K, double beta, double psi, double phi, const Geometry& geometry);

LinkStatistics derive_link_statistics(const Geometry& geometry);

// Rician draw: h_sd = sqrt(beta_sd) g with g ~ CN(0,1); each indirect entry is
// the LoS value plus CN(0, beta/(K+1)) scatter. `los_only` suppresses the
// scatter terms on the two indirect hops, the K -> infinity limit.
ChannelRealization sample_realization(const LinkStatistics& stats, RandomStream& stream,
                                      bool los_only = false);

} // namespace rislab
