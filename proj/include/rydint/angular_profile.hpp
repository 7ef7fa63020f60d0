#pragma once

#include <string>
#include <vector>

#include "rydint/channel.hpp"

namespace rydint {

// Orientation dependence of the interaction for ns1/2 + ns1/2 initial pairs
// (the only case with closed-form rotation algebra; anything else raises
// ArgumentError). The azimuthal angle is irrelevant for these states; all
// profiles are parameterized by the polar angle theta alone.

/// c_l(theta) = <u_l| d^{1/2}(theta) x d^{1/2}(theta) |psi>, l = s,t0,t+,t-.
/// Independent of the channel; D_kl supplies the channel weight.
std::array<std::complex<double>, 4> rotation_coefficients(const ZeemanPairState& psi,
                                                          double theta);

/// f_k(theta) = sum_l |c_l(theta)|^2 D_kl; reduces to D_k(ma,mb) at theta = 0.
double f_factor(const ZeemanPairState& psi, double theta, const Channel& ch);

/// vdW limit summed over channels: U(theta) = -sum_k f_k C3_k^2/(h delta_k) R^-6, MHz.
/// Any resonant channel (delta = 0) raises ArgumentError naming it.
double vdw_angular_mhz(const ZeemanPairState& psi, double theta,
                       const std::vector<Channel>& channels, double r_um);

/// Single dominant channel at angle theta: the pair potential with
/// D -> f_k(theta), MHz.
double resonant_angular_potential_mhz(const Channel& ch, const ZeemanPairState& psi,
                                      double theta, double r_um);

struct AngularProfile {
    std::vector<double> theta_rad;
    std::vector<std::array<double, 4>> f; // f_1..f_4 per theta
    std::vector<double> u_ghz;            // vdW energy at r_um
    double r_um;
};

AngularProfile angular_profile(const ZeemanPairState& psi, const std::vector<Channel>& channels,
                               double r_um, int n_theta = 181);

/// CSV columns: theta_deg, f_1..f_4, U_GHz.
std::string profile_to_csv(const AngularProfile& p);

} // namespace rydint
