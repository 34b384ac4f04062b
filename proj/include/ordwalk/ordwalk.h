/* ordwalk — ordinal patterns of random walks: enumeration, structure, and
 * seeded Monte Carlo. C API over the shared library; every handle returned
 * through an out-parameter is owned by the caller and released with the
 * matching *_free function. Strings and arrays returned through out-parameters
 * follow the same rule (ow_string_free / ow_ints_free / ow_string_list_free).
 *
 * All functions returning ow_status set a thread-local message retrievable via
 * ow_last_error() on failure; out-parameters are untouched unless OW_OK.
 *
 * Permutations are written as digit strings for n <= 9 ("54621873") and
 * comma-separated entries beyond ("10,2,1,3,..."). Signed block permutations
 * mark reversal with a trailing apostrophe per entry ("3',1,2'").
 */
#ifndef ORDWALK_H
#define ORDWALK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ow_status {
    OW_OK = 0,
    OW_REPEATED_VALUE = 1,         /* walk has tied values: pattern undefined */
    OW_LENGTH_MISMATCH = 2,        /* operands have incompatible sizes */
    OW_SIZE_TOO_LARGE = 3,         /* exhaustive-search budget exceeded */
    OW_PARSE_ERROR = 4,            /* malformed textual input */
    OW_INVALID_ARGUMENT = 5,       /* argument outside its documented domain */
    OW_INVALID_FLIP = 6,           /* interval is not valid for this permutation */
    OW_NOT_A_BLOCK = 7,            /* not a bordered cylindrical block */
    OW_NO_VALID_DECOMPOSITION = 8, /* block action cannot be split there */
    OW_SINGULAR_MATRIX = 9,        /* zero determinant */
    OW_INTERNAL = 10               /* invariant violation; report as a bug */
} ow_status;

typedef struct ow_perm ow_perm;             /* opaque permutation */
typedef struct ow_freq_table ow_freq_table; /* opaque Monte Carlo frequency table */

/* ---- diagnostics ---------------------------------------------------------- */
const char* ow_last_error(void);            /* thread-local; valid until next failure */
const char* ow_status_name(ow_status s);

/* ---- memory --------------------------------------------------------------- */
void ow_string_free(char* s);
void ow_ints_free(int* a);
void ow_string_list_free(char** list, size_t count);
void ow_perm_free(ow_perm* p);
void ow_freq_table_free(ow_freq_table* t);

/* ---- permutations ---------------------------------------------------------- */
ow_status ow_perm_parse(const char* text, ow_perm** out);
ow_status ow_perm_from_values(const int* values, size_t n, ow_perm** out);
ow_status ow_perm_identity(size_t n, ow_perm** out);
size_t ow_perm_size(const ow_perm* p);
int ow_perm_value(const ow_perm* p, size_t i); /* 1-based position; 0 if out of range */
ow_status ow_perm_format(const ow_perm* p, char** out);
int ow_perm_equal(const ow_perm* a, const ow_perm* b);

/* Ordinal pattern of a walk (ranks of values) / of a step sequence (walk of
 * count+1 values starting at 0). Ties yield OW_REPEATED_VALUE. */
ow_status ow_pattern_of_walk(const double* values, size_t n, ow_perm** out);
ow_status ow_pattern_of_steps(const double* steps, size_t count, ow_perm** out);
ow_status ow_reverse_complement(const ow_perm* p, ow_perm** out);
ow_status ow_compose(const ow_perm* pi, const ow_perm* tau, ow_perm** out); /* pi first */
ow_status ow_inverse(const ow_perm* p, ow_perm** out);

/* ---- step matrices ---------------------------------------------------------- */
/* (n-1)x(n-1) sign matrix of the edges; text form has one row per line. */
ow_status ow_step_matrix_text(const ow_perm* p, char** out);
ow_status ow_determinant_sign(const ow_perm* p, int* out); /* -1 or +1 */
/* Searches for (sigma, rho) with P_{rho^{-1}} L(pi) P_sigma = L(tau). On
 * success both strings are set; when no witness exists returns OW_OK with
 * *sigma = *rho = NULL. n <= 8. */
ow_status ow_matrix_equivalence_witness(const ow_perm* pi, const ow_perm* tau,
                                        char** sigma, char** rho);

/* ---- edge diagrams ----------------------------------------------------------- */
/* One edge per line: "low-high +" (rising) or "low-high -" (falling). */
ow_status ow_edge_diagram_text(const ow_perm* p, char** out);
/* Valid intervals as flat (lo, hi) pairs: pairs[2k], pairs[2k+1]. */
ow_status ow_valid_intervals(const ow_perm* p, int** pairs, size_t* count);
ow_status ow_flip_interval(const ow_perm* p, int lo, int hi, ow_perm** out);

/* ---- irreducible / cohesive structure ----------------------------------------- */
ow_status ow_irreducible_borders(const ow_perm* p, int** borders, size_t* count);
ow_status ow_is_cohesive(const ow_perm* p, int a, int b, int* out); /* out: 0/1 */
ow_status ow_cohesive_intervals(const ow_perm* p, int** pairs, size_t* count);
/* mu is a signed block permutation over the irreducible partition of p. */
ow_status ow_apply_block_action(const ow_perm* p, const char* mu, ow_perm** out);
ow_status ow_valid_block_actions(const ow_perm* p, char*** mus, size_t* count);
/* Splits mu at the cohesive interval [border_i, border_j] (0-based border
 * indices): alpha with one entry collapsed, beta the extracted factor. */
ow_status ow_decompose_block_action(const ow_perm* p, const char* mu, int i, int j,
                                    char** alpha, char** beta);

/* ---- signed block permutations ----------------------------------------------- */
ow_status ow_signed_reverse_complement(const char* mu, char** out);
/* Substitutes blocks[t] (signed patterns) for the entries of mu. */
ow_status ow_inflate(const char* mu, const char* const* blocks, size_t count, char** out);

/* ---- equivalence --------------------------------------------------------------- */
ow_status ow_equivalent(const ow_perm* pi, const ow_perm* tau, int* out); /* out: 0/1 */
ow_status ow_class_of(const ow_perm* p, char*** members, size_t* count); /* sorted */

/* ---- rendered command results (exactly what the CLI prints) -------------------- */
ow_status ow_classes_render(int n, int as_json, char** out);
ow_status ow_check_render(const char* pi, const char* tau, int want_witness,
                          int as_json, char** out, int* equivalent);
ow_status ow_structure_render(const char* pi, int as_json, char** out);

/* ---- Monte Carlo ---------------------------------------------------------------- */
/* dist grammar: uniform:lo,hi | gaussian:mean,sd | exponential:rate |
 * cauchy:loc,scale | lognormal:mu,sigma | shifted-uniform:lo,hi (0 < lo < hi).
 * Deterministic for fixed (n, dist, trials, seed) for any worker count. */
ow_status ow_simulate(int n, const char* dist, uint64_t trials, uint64_t seed,
                      int workers, ow_freq_table** out);
uint64_t ow_freq_table_tie_rejections(const ow_freq_table* t);
uint64_t ow_freq_table_count(const ow_freq_table* t, const char* pattern);
/* 1 when some class fails homogeneity, 0 when none does, -1 when n > 8 (no report). */
int ow_freq_table_any_flagged(const ow_freq_table* t);
ow_status ow_freq_table_csv(const ow_freq_table* t, char** out);
ow_status ow_freq_table_plot_csv(const ow_freq_table* t, char** out);
ow_status ow_freq_table_json(const ow_freq_table* t, char** out);
ow_status ow_freq_table_report_text(const ow_freq_table* t, char** out);

/* Cross-distribution discrimination evidence for n <= 6: for each pattern pair
 * in different classes, the largest two-proportion z over the given dists. */
ow_status ow_discrimination_text(int n, const char* const* dists, size_t count,
                                 uint64_t trials, uint64_t seed, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ORDWALK_H */
