#ifndef M06_H
#define M06_H

/* C interface to the m06 library. Every function returns an m06_status;
 * on failure m06_last_error() describes the problem for the calling thread.
 * Strings and handles returned through out-parameters are owned by the
 * caller and released with the matching *_free function. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    M06_OK = 0,
    M06_ERR_PARSE = 1,        /* malformed expression, number or file */
    M06_ERR_USAGE = 2,        /* invalid or contradictory request */
    M06_ERR_DOMAIN = 3,       /* input outside an operation's domain */
    M06_ERR_CHECK_FAILED = 4, /* a report ran but one of its checks failed */
    M06_ERR_INTERNAL = 5
} m06_status;

typedef struct m06_string m06_string;
typedef struct m06_divisor m06_divisor;
typedef struct m06_config m06_config;

const char* m06_last_error(void);
const char* m06_status_name(m06_status s);

const char* m06_string_data(const m06_string* s);
size_t m06_string_size(const m06_string* s);
void m06_string_free(m06_string* s);

/* Symmetric divisor classes, e.g. "K + 1/3*psi". */
m06_status m06_divisor_parse(const char* expr, int n, m06_divisor** out);
void m06_divisor_free(m06_divisor* d);
int m06_divisor_n(const m06_divisor* d);
/* Coefficient of B_i as "p/q". */
m06_status m06_divisor_coefficient(const m06_divisor* d, int i, m06_string** out);
m06_status m06_divisor_intersect_f(const m06_divisor* d, int a, int b, int c, int e, m06_string** out);
m06_status m06_divisor_intersect_c(const m06_divisor* d, int j, m06_string** out);

typedef enum {
    M06_MODEL_AMPLE = 0,
    M06_MODEL_SEGRE_CUBIC = 1,
    M06_MODEL_IGUSA_QUARTIC = 2,
    M06_MODEL_POINT = 3,
    M06_MODEL_NOT_EFFECTIVE = 4
} m06_model;

typedef enum {
    M06_BASE_EMPTY = 0,
    M06_BASE_B2 = 1,
    M06_BASE_B3 = 2,
    M06_BASE_NOT_APPLICABLE = 3
} m06_base_locus;

/* n = 6 only. wall is set to 1 on a chamber wall. */
m06_status m06_divisor_chamber(const m06_divisor* d, m06_model* model, m06_base_locus* base, int* wall);

/* Point configurations in the text file format. dim <= 0 accepts any. */
m06_status m06_config_parse(const char* text, int dim, m06_config** out);
void m06_config_free(m06_config* c);
size_t m06_config_size(const m06_config* c);
int m06_config_dim(const m06_config* c);

typedef enum { M06_STABLE = 0, M06_STRICTLY_SEMISTABLE = 1, M06_UNSTABLE = 2 } m06_stability;

/* weights_csv may be NULL for the symmetric linearization. */
m06_status m06_config_stability(const m06_config* c, const char* weights_csv, m06_stability* out);
m06_status m06_config_stabilizer_dimension(const m06_config* c, int* out);
/* Stratum label of a sextuple in P^2 under symmetric weights ("I".."XI", "Stable", ...). */
m06_status m06_config_stratum(const m06_config* c, m06_string** out);
m06_status m06_config_closed_orbit(const m06_config* c, m06_string** out);

/* Rendered command reports. Optional string arguments may be NULL. The
 * status is M06_ERR_CHECK_FAILED when the report was produced but one of
 * its checks failed; *out is set in that case too. */
m06_status m06_report_divisor(const char* action, const char* expr, int n, const char* curve, int json,
                              m06_string** out);
m06_status m06_report_git(const char* action, const char* config_text, const char* weights_csv, int dim,
                          const char* ops_csv, int json, m06_string** out);
m06_status m06_report_hypersurface(const char* action, const char* surface, const char* point_csv, int samples,
                                   int exact_samples, double tolerance, uint64_t seed, int search, int json,
                                   m06_string** out);
m06_status m06_report_m2(const char* lambda, const char* delta0, const char* delta1, const char* Delta0,
                         const char* Delta1, const char* alpha, int json, m06_string** out);
m06_status m06_report_paper(uint64_t seed, int json, m06_string** out);

#ifdef __cplusplus
}
#endif

#endif
