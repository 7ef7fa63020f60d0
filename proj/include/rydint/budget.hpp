#pragma once

#include <string>

#include "rydint/atomic_data.hpp"

namespace rydint {

/// Checkerboard lattice: same-species period d, nearest interspecies
/// distance d/sqrt2. Quantization axis normal to the lattice plane, so
/// theta = pi/2 for every in-plane pair.
struct LatticeGeometry {
    double period_um = 4.0;
    double interspecies_um() const { return period_um / 1.4142135623730951; }
};

struct ProtocolConfig {
    int n_rb = 48;
    int n_cs = 51;
    int channel_index = 3;      // Rb 48s->48p3/2, Cs 51s->50p1/2
    double omega_rb_mhz = 0.0;  // Omega/2pi; 0: set to the nulling value
    double omega_cs_mhz = 0.0;  // 0: equal to omega_rb
    double tau_rb_us = 0.0;     // 0: from the lifetime table
    double tau_cs_us = 0.0;
    int rb_neighbors = 4;
    double wavelength_nm = 780.0; // Rb measurement light
    double numerical_aperture = 0.5;
    double optics_efficiency = 1.0;
    double detector_efficiency = 0.5;

    void validate() const;
};

struct ProtocolBudget {
    double u_rbcs_mhz;      // nearest-neighbor interspecies coupling, |U|/2pi
    double u_rbcs_vdw_mhz;  // its vdW-limit value, for comparison
    double u_rbrb_mhz;      // Rb-Rb next-neighbor residual coupling
    double omega_null_mhz;  // U/sqrt3 nulling Rabi frequency
    double transfer_error;  // E = 0.72 (U_RbRb/Omega)^2
    double blockade_leakage; // |c_Rb|^2
    double p_se_rb;
    double p_se_cs;
    double eta_abs;
    double eta_det;
    double crosstalk_ratio; // eta_abs / eta_det
    std::string dominant_error; // name of the largest error term
};

/// Interspecies coupling: exact single-channel potential at (d/sqrt2, theta=pi/2)
/// with the antiparallel-spin angular factor (the protocol excites opposite m).
/// Rb-Rb residual: four-channel additive vdW at distance d, parallel spins.
struct CouplingStrengths {
    double u_rbcs_mhz;
    double u_rbcs_vdw_mhz;
    double u_rbrb_mhz;
};
CouplingStrengths coupling_strengths(const AtomicDatabase& db, const ProtocolConfig& cfg,
                                     const LatticeGeometry& geo);

/// Omega = U/sqrt3 (the two-level nulling condition). U <= 0 -> ArgumentError.
double nulling_rabi_mhz(double u_mhz);

/// |c_Rb|^2 = Omega^2/(Omega^2+U^2) sin^2(sqrt(1+U^2/Omega^2) pi/2).
double blockade_leakage(double omega_mhz, double u_mhz);

/// E = 0.72 (U_RbRb/Omega)^2 (four-neighbor transfer error).
double transfer_error(double u_rbrb_mhz, double omega_mhz);

/// Rydberg spontaneous emission during the pi - 2pi - pi sequence:
/// t_Rb = (1/2) pi/Omega_Rb, t_Cs = (1/2)(2pi/Omega_Rb + pi/Omega_Cs),
/// with Omega/2pi in MHz. Returns (P_Rb, P_Cs) = t/tau.
std::pair<double, double> spontaneous_emission(double omega_rb_mhz, double omega_cs_mhz,
                                               double tau_rb_us, double tau_cs_us);

/// sigma = (3/2pi) lambda^2; eta_abs = sigma/(4 pi d^2);
/// eta_det = solid-angle fraction of the NA x optics x detector.
struct CrosstalkBudget {
    double eta_abs;
    double eta_det;
    double ratio;
};
CrosstalkBudget crosstalk_photon_budget(double lambda_nm, double d_um, double na,
                                        double optics_eff, double detector_eff);

ProtocolBudget full_budget(const AtomicDatabase& db, const ProtocolConfig& cfg,
                           const LatticeGeometry& geo);

std::string budget_to_json(const ProtocolBudget& b, const ProtocolConfig& cfg,
                           const LatticeGeometry& geo);
std::string budget_to_table(const ProtocolBudget& b);

} // namespace rydint
