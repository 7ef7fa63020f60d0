#pragma once

#include <array>
#include <string>
#include <vector>

#include "rydint/channel.hpp"

namespace rydint {

/// Scan configuration. Defaults follow the interspecies table conventions:
/// defects below 0.0005 of the local ns level spacing of atom a, |C3| >= 1 GHz um^3.
struct SearchConfig {
    Species species_a = Species::Rb87;
    Species species_b = Species::Cs133;
    int na_min = 41, na_max = 89;
    int nb_min = 0, nb_max = 0; // 0,0: derive as [na_min-10, na_max+10]
    double defect_frac = 5e-4;
    double c3_floor_ghz_um3 = 1.0;
    std::array<bool, 4> channels{true, true, true, true};
    int threads = 0; // 0: hardware concurrency

    void validate() const;
};

/// One table row: channel, defect, C3, vdW strength and crossover radius of
/// the strongest eigenvector.
struct ResonanceRecord {
    int channel_index; // 1..4 over (j_alpha, j_beta) = (1/2,1/2),(1/2,3/2),(3/2,1/2),(3/2,3/2)
    Channel channel;
    double delta_mhz;
    double c3_ghz_um3;
    double uvdw_ghz_um6;
    double rc_um;
    EigState strongest;
};

/// The four fine-structure s->p channels for one (n_a, n_b) pair. Target p
/// levels follow the figure conventions: the atom with the smaller ns keeps
/// np = ns, the other takes np = ns - 1 (atom a drops on ties).
std::vector<Channel> enumerate_channels(const AtomicDatabase& db, Species sa, Species sb,
                                        int na, int nb);

int channel_index(const Channel& ch);

/// argmax of D_kl over the Table-I eigenvectors: |u_t0> for channels 1 and 4,
/// |u_s> for channels 2 and 3.
EigState strongest_eigenvector(int channel_index);

/// Full scan. Parallel over (n_a, n_b); output deterministically ordered by
/// (n_a, n_b, channel index). Missing data aborts with the offending level.
std::vector<ResonanceRecord> find_resonances(const AtomicDatabase& db, const SearchConfig& cfg);

/// Raw defect series for plotting (Figs. 2-5 style): for each n in the range,
/// delta of the four fine-structure channels of the pair (n, n + nb_offset).
/// No filtering.
struct DefectCurve {
    std::vector<int> n;
    std::vector<std::array<double, 4>> delta_mhz; // channels 1..4
};
DefectCurve defect_curve(const AtomicDatabase& db, Species sa, Species sb, int na_min,
                         int na_max, int nb_offset);

/// Emitters. Fixed column order:
/// channel_index, a, alpha, b, beta, delta_MHz, C3_GHz_um3, UvdW_GHz_um6, Rc_um.
std::string records_to_csv(const std::vector<ResonanceRecord>& recs);
std::string records_to_json(const std::vector<ResonanceRecord>& recs);

} // namespace rydint
