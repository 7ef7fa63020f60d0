#pragma once

#include "rydint/atomic_data.hpp"

namespace rydint {

struct Channel; // channel.hpp

/// Quasiclassical radial dipole matrix element <b| r |a> in a0, from the
/// Fourier components of the classical Kepler orbit at the mean energy
/// (Kaulakys, J. Phys. B 28, 4963 (1995)). Signed; the sign is a phase
/// convention, observables depend on the square.
/// pre: |l_a - l_b| = 1 and both effective n >= 10.
double radial_quasiclassical(const AtomicDatabase& db, const FineLevel& a, const FineLevel& b);

/// Same, from effective quantum numbers directly.
double radial_quasiclassical_nu(double nu_a, int l_a, double nu_b, int l_b);

struct RadialOracleOptions {
    double dx = 0.01;          // sqrt(r) grid step, a0^(1/2)
    double rmin_scale = 0.05;  // r_min = max(floor, scale * min(n*)^2)
    double rmin_floor_a0 = 1.0;
    double norm_tol = 0.01;    // Simpson/trapezoid norm discrepancy limit
};

/// Independent numeric oracle: Numerov integration of the radial equation in
/// a pure -1/r potential at the quantum-defect energy, inward from beyond the
/// outer turning point, truncated at r_min; then quadrature of r P_a P_b.
/// Unsigned magnitude is meaningful; sign follows the integration phases.
double radial_numeric_oracle(const AtomicDatabase& db, const FineLevel& a, const FineLevel& b,
                             const RadialOracleOptions& opt = {});
double radial_numeric_oracle_nu(double nu_a, int l_a, double nu_b, int l_b,
                                const RadialOracleOptions& opt = {});

/// Overlap int P_a P_b dr of the oracle's normalized waves (1 for a == b).
double radial_oracle_overlap_nu(double nu_a, int l_a, double nu_b, int l_b,
                                const RadialOracleOptions& opt = {});

/// Fine-structure reduced matrix element <gamma_b||r||gamma_a> in e a0,
/// normalized so that <j' m'|r_q|j m> = C^{j'm'}_{jm 1q} <j'||r||j>/sqrt(2j'+1).
/// With this convention sum_{j_b} |<b||r||a>|^2/(2j_a+1) = l_> R^2.
double reduced_matrix_element_fs(const AtomicDatabase& db, const FineLevel& a,
                                 const FineLevel& b);

/// C3_k = q^2 <alpha||r||a><beta||r||b> / sqrt((2j_alpha+1)(2j_beta+1)),
/// GHz um^3, signed (sign is convention-dependent; tables compare |C3|).
double c3_coefficient(const AtomicDatabase& db, const FineLevel& a, const FineLevel& alpha,
                      const FineLevel& b, const FineLevel& beta);

/// Process-wide quasiclassical element cache (concurrent reads, serialized
/// inserts). The resonance scan re-requests elements heavily.
double radial_quasiclassical_cached(const AtomicDatabase& db, const FineLevel& a,
                                    const FineLevel& b);
void radial_cache_clear();

} // namespace rydint
