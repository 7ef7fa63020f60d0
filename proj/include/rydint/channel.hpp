#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "rydint/angular.hpp"
#include "rydint/atomic_data.hpp"

namespace rydint {

/// One interaction channel (ab) <-> (alpha beta) with its energy defect and
/// C3 coefficient. identical_initials marks gamma_a = gamma_b, where the
/// exchange coupling (ab) <-> (beta alpha) doubles the angular factors.
struct Channel {
    FineLevel a, b, alpha, beta;
    double delta_mhz = 0;    // delta_k/2pi
    double c3_ghz_um3 = 0;   // signed
    bool identical_initials = false;
};

/// Builds a channel, filling defect and C3 from the database.
Channel make_channel(const AtomicDatabase& db, const FineLevel& a, const FineLevel& b,
                     const FineLevel& alpha, const FineLevel& beta);

/// Forster eigenvectors for ns1/2 + ns1/2 initial states (Table-I labels):
/// |u_s> = (|+-> - |-+>)/sqrt2, |u_t0> = (|+-> + |-+>)/sqrt2, |u_t+-> = |+-+->.
enum class EigState : int { Singlet = 1, Triplet0 = 2, TripletPlus = 3, TripletMinus = 4 };

/// Two-atom Zeeman state sum c_ij |m_ai, m_bj> for j_a = j_b = 1/2.
/// Basis order: |++>, |+->, |-+>, |-->.
struct ZeemanPairState {
    std::array<std::complex<double>, 4> amp{};

    static ZeemanPairState product(HalfInt ma, HalfInt mb);
    static ZeemanPairState parallel() { return product(half, half); }
    static ZeemanPairState antiparallel() { return product(half, -half); }
    static ZeemanPairState eigenvector(EigState l);

    double norm2() const;
    std::complex<double> overlap_eig(EigState l) const; // <u_l | psi>
};

/// Single dipole-dipole matrix element of Appendix-A form, MHz:
///   -(sqrt6 C3/R^3) sum_q C^{20}_{1q1-q} C^{ja' ma'}_{ja ma 1q} C^{jb' mb'}_{jb mb 1-q}
/// Returns exactly 0 on total-m mismatch. R <= 0 is an argument error.
double dipole_dipole_element_mhz(const Channel& ch, HalfInt ma, HalfInt mb,
                                 HalfInt malpha, HalfInt mbeta, double r_um);

/// Basis bookkeeping for the single-channel interaction matrix at fixed
/// m = ma + mb. Targets include the exchange-ordered block when
/// identical_initials and gamma_alpha != gamma_beta.
struct ChannelBasis {
    std::vector<std::pair<HalfInt, HalfInt>> initial; // (ma, mb)
    std::vector<std::pair<HalfInt, HalfInt>> target;  // (m_alpha, m_beta)
    std::vector<bool> target_swapped;                 // exchange-ordered entry?
};

ChannelBasis channel_basis(const Channel& ch, HalfInt m);

/// N x N symmetric matrix: zero block on initial states, h*delta_k diagonal
/// on targets, dipole elements off-diagonal. Units MHz.
Eigen::MatrixXd build_interaction_matrix(const Channel& ch, HalfInt m, double r_um);

struct ChannelEigensystem {
    HalfInt m;
    ChannelBasis basis;
    Eigen::VectorXd eigenvalues;      // MHz, ascending
    Eigen::MatrixXd eigenvectors;     // columns
    std::vector<int> initial_branches; // indices of the N_ab initial-manifold branches
};

ChannelEigensystem channel_eigensystem(const Channel& ch, HalfInt m, double r_um);

/// Closed-form angular factor for a product initial state (N_ab = 1 path):
///   D_k(ma,mb) = 6 sum_{ma' mb'} (sum_q C^{20} C C)^2, doubled when
/// identical_initials.
double angular_factor_D(const Channel& ch, HalfInt ma, HalfInt mb);

/// Angular factor for a Table-I eigenvector of an ns1/2+ns1/2 channel.
double angular_factor_D(const Channel& ch, EigState l);

/// Exact-rational path (Table I): channel given by (j_alpha, j_beta).
Rational angular_factor_D_exact(HalfInt j_alpha, HalfInt j_beta, EigState l, bool doubled);

/// Appendix-A numerical extraction: diagonalize in the vdW regime
/// (R = 10 R_c estimate, refined once) and invert the pair-potential closed
/// form. Falls back to a small-R resonant fit when |delta| is too small; the
/// flag reports that path.
struct ExtractedD {
    double value;
    bool resonant_fit = false;
};
ExtractedD angular_factor_D_extracted(const Channel& ch, EigState l);

/// Single-channel pair potential, MHz:
///   U = (delta/2) [1 - sqrt(1 + 4 D C3^2/(delta^2 R^6))],
/// and the resonant limit -sqrt(D)|C3|/R^3 for delta = 0 exactly.
double pair_potential_mhz(const Channel& ch, double D, double r_um);
double pair_potential_mhz(const Channel& ch, EigState l, double r_um);

/// U_vdW R^6 = -D C3^2/(h delta), GHz um^6. Resonant channels (delta = 0)
/// have no vdW limit -> ArgumentError.
double vdw_coefficient_ghz_um6(const Channel& ch, EigState l);
double vdw_coefficient_ghz_um6(const Channel& ch, double D);

/// R_c = (D C3^2 / (h delta)^2)^(1/6), um. delta = 0 or D = 0 -> ArgumentError.
double crossover_radius_um(const Channel& ch, EigState l);
double crossover_radius_um(const Channel& ch, double D);

/// Additive vdW energy of |psi> over several channels (Eq.-4 regime), MHz.
struct VdwAdditive {
    double u_mhz;
    double max_rc_um;
    bool below_vdw_range; // R < 2 max R_c
};
VdwAdditive vdw_additive(const ZeemanPairState& psi, const std::vector<Channel>& channels,
                         double r_um);

/// Multichannel eigenvalue branch adiabatically connected to the initial
/// manifold, tracked from large R by eigenvector-overlap continuation.
struct MultiChannelResult {
    double u_mhz;
    double min_overlap;    // smallest continuation overlap along the track
    bool diabatic_flag;    // overlap dropped below 0.5 somewhere
};
MultiChannelResult multi_channel_potential(const std::vector<Channel>& channels, HalfInt m,
                                           double r_um, EigState track);

} // namespace rydint
