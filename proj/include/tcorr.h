/*
 * tcorr — temporal-correlation witnesses for two-qubit states under
 * memory-equipped decoherence channels.
 *
 * C interface to the simulation core: opaque handles, integer status codes,
 * no exceptions across the boundary.  Every object returned through an
 * out-parameter is owned by the caller and released with the matching
 * *_destroy function.
 */

#ifndef TCORR_H
#define TCORR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TCORR_API __declspec(dllexport)
#else
#define TCORR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
    TC_OK = 0,
    TC_ERR_INVALID_ARGUMENT = 1,
    TC_ERR_IO = 2,
    TC_ERR_INTERNAL = 3
} tc_status;

typedef enum tc_channel_kind {
    TC_CHANNEL_AMPLITUDE_DAMPING = 0,
    TC_CHANNEL_PHASE_DAMPING = 1,
    TC_CHANNEL_DEPOLARIZING = 2
} tc_channel_kind;

typedef enum tc_bsm_type {
    TC_BSM_TYPE_I = 0,
    TC_BSM_TYPE_II = 1,
    TC_BSM_TYPE_III = 2
} tc_bsm_type;

typedef enum tc_witness { TC_WITNESS_K4 = 0, TC_WITNESS_S4 = 1 } tc_witness;

TCORR_API const char* tc_version(void);
TCORR_API const char* tc_status_message(tc_status status);
/* Detail for the most recent failure on this thread; empty string if none. */
TCORR_API const char* tc_last_error(void);

/* ------------------------------------------------------------------ */
/* Memory channel                                                      */

typedef struct tc_channel tc_channel;

TCORR_API tc_status tc_channel_create(tc_channel_kind kind, double p, double mu,
                                      tc_channel** out);
TCORR_API void tc_channel_destroy(tc_channel* channel);
TCORR_API tc_status tc_channel_completeness_residual(const tc_channel* channel,
                                                     double* out);

/* ------------------------------------------------------------------ */
/* Witness evaluation                                                  */

typedef struct tc_angles {
    double theta[4];
    double phi[4];
} tc_angles;

/* Catalogued optimal angles for a (channel, measurement type) pair. */
TCORR_API tc_status tc_k4_preset_angles(tc_channel_kind kind, tc_bsm_type type,
                                        tc_angles* out);

TCORR_API tc_status tc_k4_evaluate(const tc_channel* channel, tc_bsm_type type,
                                   const tc_angles* angles, double k1, double* out);
TCORR_API tc_status tc_k4_reference(tc_channel_kind kind, tc_bsm_type type, double p,
                                    double mu, double* out);

/* S4 with Alice/Bob bases drawn from the five d=4 MUBs (indices 0..4). */
TCORR_API tc_status tc_s4_evaluate(const tc_channel* channel, int basis_a, int basis_b,
                                   double k1, double* out);
TCORR_API tc_status tc_s4_reference(tc_channel_kind kind, double p, double mu,
                                    double* out);
TCORR_API tc_status tc_classical_bound(int dimension, double* out);

/* ------------------------------------------------------------------ */
/* Optimization                                                        */

typedef struct tc_opt_result {
    double theta[4];
    double phi[4];
    double k1;
    double best_value;
    long evaluations;
    int restart_index;
} tc_opt_result;

/* Seeded multi-restart search for the K4 maximum; deterministic per seed.
 * optimize_k1 == 0 freezes k1 at 1/sqrt(2). */
TCORR_API tc_status tc_k4_maximize(tc_channel_kind kind, double p, double mu,
                                   tc_bsm_type type, int restarts, uint64_t seed,
                                   int optimize_k1, tc_opt_result* out);

/* ------------------------------------------------------------------ */
/* Sweeps and CSV output                                               */

typedef struct tc_sweep tc_sweep;

typedef struct tc_sweep_record {
    tc_witness witness;
    tc_channel_kind channel;
    char scheme[8];
    double p;
    double mu;
    double simulated;
    double reference; /* valid iff has_reference */
    double classical_bound;
    int has_reference;
} tc_sweep_record;

/* angles == NULL selects the catalogued presets (and enables the reference
 * column when k1 == 1/sqrt(2)). */
TCORR_API tc_status tc_k4_sweep(tc_channel_kind kind, tc_bsm_type type, double p_start,
                                double p_stop, int p_count, const double* mu_list,
                                size_t mu_count, const tc_angles* angles, double k1,
                                tc_sweep** out);
TCORR_API tc_status tc_s4_sweep(tc_channel_kind kind, int basis_a, int basis_b,
                                double p_start, double p_stop, int p_count,
                                const double* mu_list, size_t mu_count, double k1,
                                tc_sweep** out);

TCORR_API void tc_sweep_destroy(tc_sweep* sweep);
TCORR_API size_t tc_sweep_size(const tc_sweep* sweep);
TCORR_API tc_status tc_sweep_record_at(const tc_sweep* sweep, size_t index,
                                       tc_sweep_record* out);

/* CSV with header witness,channel,scheme,p,mu,simulated,reference,classical_bound;
 * rows ordered by (mu, p), reals at 10 significant digits. */
TCORR_API tc_status tc_sweep_csv(const tc_sweep* sweep, char** out);
TCORR_API tc_status tc_sweep_write_csv(const tc_sweep* sweep, const char* path,
                                       uint64_t* rows_written);
TCORR_API void tc_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Verification                                                        */

typedef struct tc_verify_report tc_verify_report;

typedef struct tc_verify_check {
    char name[96];
    int criterion;          /* 1..8, 0 for diagnostics */
    double measured;
    double threshold;
    int higher_is_better;   /* pass condition is measured >= threshold */
    int passed;
    int flagged;            /* documented-discrepancy marker */
    char note[192];
} tc_verify_check;

TCORR_API tc_status tc_verify_run(int grid_count, const double* mu_list,
                                  size_t mu_count, int restarts, uint64_t seed,
                                  tc_verify_report** out);
TCORR_API void tc_verify_report_destroy(tc_verify_report* report);
TCORR_API size_t tc_verify_check_count(const tc_verify_report* report);
TCORR_API tc_status tc_verify_check_at(const tc_verify_report* report, size_t index,
                                       tc_verify_check* out);
TCORR_API int tc_verify_all_passed(const tc_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TCORR_H */
