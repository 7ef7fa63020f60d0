/* rydint — Rydberg pair-interaction library, C interface.
 *
 * All functions return rydint_status; results go through out-parameters.
 * A context owns the atomic data and caches and is safe for concurrent
 * read-only use from multiple threads once created. Strings returned through
 * char** are heap-allocated; release them with rydint_string_free().
 */
#ifndef RYDINT_H
#define RYDINT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rydint_ctx rydint_ctx;

typedef enum rydint_status {
    RYDINT_OK = 0,
    RYDINT_ERR_ARGUMENT = 2, /* bad inputs, selection rules, usage */
    RYDINT_ERR_DATA = 3,     /* missing or malformed atomic data */
    RYDINT_ERR_NUMERIC = 4   /* solver or integration failure */
} rydint_status;

typedef enum rydint_species { RYDINT_RB87 = 0, RYDINT_CS133 = 1 } rydint_species;

/* Forster eigenvector labels (singlet / triplet basis of Table-I channels). */
typedef enum rydint_eigstate {
    RYDINT_EIG_SINGLET = 1,
    RYDINT_EIG_TRIPLET0 = 2,
    RYDINT_EIG_TRIPLET_PLUS = 3,
    RYDINT_EIG_TRIPLET_MINUS = 4
} rydint_eigstate;

typedef struct rydint_level {
    rydint_species species;
    int n;
    int l;
    int two_j; /* 2j: 1 for j=1/2, 3 for j=3/2 */
} rydint_level;

/* Interaction channel (a b) <-> (alpha beta). */
typedef struct rydint_channel {
    rydint_level a, b, alpha, beta;
} rydint_channel;

typedef struct rydint_scan_config {
    rydint_species species_a, species_b;
    int na_min, na_max;
    int nb_min, nb_max;      /* 0,0: derived as [na_min-10, na_max+10] */
    double defect_frac;      /* fraction of the local level spacing */
    double c3_floor;         /* GHz um^3 */
    int channels[4];         /* nonzero: include channel k+1 */
} rydint_scan_config;

typedef struct rydint_budget_config {
    int n_rb, n_cs, channel_index;
    double lattice_period_um;
    double omega_rb_mhz, omega_cs_mhz; /* 0: nulling value / equal to Rb */
    double tau_rb_us, tau_cs_us;       /* 0: lifetime table */
    double wavelength_nm, numerical_aperture, optics_eff, detector_eff;
    int rb_neighbors;
} rydint_budget_config;

/* ---- lifecycle ---- */

/* data_dir: directory holding quantum_defects.txt and lifetimes.txt.
 * NULL: $RYDINT_DATA, falling back to ./data. */
rydint_status rydint_ctx_create(const char* data_dir, rydint_ctx** out_ctx);
void rydint_ctx_destroy(rydint_ctx* ctx);

/* Message for the last failing call on this context ("" if none). */
const char* rydint_last_error(const rydint_ctx* ctx);
const char* rydint_version(void);

/* "file=fnv1a_hex;file=fnv1a_hex" for the loaded data files. */
rydint_status rydint_data_hashes(rydint_ctx* ctx, char** out);

/* ---- atomic data ---- */

rydint_status rydint_effective_n(rydint_ctx* ctx, const rydint_level* lv, double* out);
rydint_status rydint_level_energy_ghz(rydint_ctx* ctx, const rydint_level* lv, double* out);
rydint_status rydint_lifetime_us(rydint_ctx* ctx, const rydint_level* lv, double* out);
rydint_status rydint_pair_defect_mhz(rydint_ctx* ctx, const rydint_channel* ch, double* out);

/* ---- radial / channel quantities ---- */

rydint_status rydint_c3_ghz_um3(rydint_ctx* ctx, const rydint_channel* ch, double* out);
rydint_status rydint_angular_factor(rydint_ctx* ctx, const rydint_channel* ch,
                                    rydint_eigstate l, double* out);
rydint_status rydint_pair_potential_mhz(rydint_ctx* ctx, const rydint_channel* ch,
                                        rydint_eigstate l, double r_um, double* out);
rydint_status rydint_vdw_coefficient_ghz_um6(rydint_ctx* ctx, const rydint_channel* ch,
                                             rydint_eigstate l, double* out);
rydint_status rydint_crossover_radius_um(rydint_ctx* ctx, const rydint_channel* ch,
                                         rydint_eigstate l, double* out);

/* Angular profile point: f_k(theta) and the channel-summed vdW energy.
 * parallel_spins nonzero: |1/2,1/2> initial state, else |1/2,-1/2>.
 * f_out: array of 4 (may be NULL); u_out: vdW energy in MHz (may be NULL). */
rydint_status rydint_angular_point(rydint_ctx* ctx, rydint_species sa, rydint_species sb,
                                   int na, int nb, int parallel_spins, double theta_rad,
                                   double r_um, double* f_out, double* u_mhz_out);

/* Exact single-channel potential at angle theta (resonant form), MHz. */
rydint_status rydint_resonant_potential_mhz(rydint_ctx* ctx, const rydint_channel* ch,
                                            int parallel_spins, double theta_rad, double r_um,
                                            double* out);

/* ---- scans and reports ---- */

/* format: "csv" or "json". The returned buffer has no metadata envelope;
 * callers prepend their own. */
rydint_status rydint_resonance_scan(rydint_ctx* ctx, const rydint_scan_config* cfg,
                                    const char* format, char** out);

rydint_status rydint_budget_json(rydint_ctx* ctx, const rydint_budget_config* cfg, char** out);
rydint_status rydint_budget_table(rydint_ctx* ctx, const rydint_budget_config* cfg, char** out);

void rydint_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RYDINT_H */
