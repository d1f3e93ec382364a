/* qmforms: exact q-series arithmetic for the quasi-modular form rings of
 * SL2(Z), Gamma0(2) and Gamma0(3) -- series expansion, identity
 * verification, Ramanujan-type tau functions and congruence scans.
 *
 * All functions return a qmf_status; 0 means success. Output strings are
 * heap-allocated and must be released with qmf_string_free. Series handles
 * are opaque and must be released with qmf_series_release. Everything is
 * computed in exact rational arithmetic; numbers in textual output are
 * decimal integers or "p/q" fractions.
 */

#ifndef QMFORMS_H
#define QMFORMS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t qmf_status;

#define QMF_OK 0
#define QMF_ERR_UNKNOWN_NAME 1
#define QMF_ERR_UNKNOWN_RULE 2
#define QMF_ERR_DOMAIN 3
#define QMF_ERR_ZERO_LEADING_COEFF 4
#define QMF_ERR_FRACTIONAL_EXPONENT 5
#define QMF_ERR_NON_INTEGRAL 6
#define QMF_ERR_DIMENSION_MISMATCH 7
#define QMF_ERR_SUBSTITUTION 8
#define QMF_ERR_DESCRIPTOR_MISMATCH 9
#define QMF_ERR_PRECISION 10
#define QMF_ERR_NOT_PRIME 11
#define QMF_ERR_CROSSCHECK 12
#define QMF_ERR_BAD_ARGUMENT 13
#define QMF_ERR_INTERNAL 14

const char* qmf_status_message(qmf_status status);
const char* qmf_version(void);
void qmf_string_free(char* s);

/* ---- truncated Laurent series ------------------------------------- */

typedef struct qmf_series qmf_series;

/* Catalog names: E2 E4 E6 Delta P2 Q2 R2 Delta2 P3 Q3 R3 S3 Delta3
 * j j2 j3 P3orig. `order` is the truncation precision: the series is
 * computed modulo O(q^order). */
qmf_status qmf_series_catalog(const char* name, int64_t order, qmf_series** out);
void qmf_series_release(qmf_series* s);

int64_t qmf_series_valuation(const qmf_series* s);
int64_t qmf_series_precision(const qmf_series* s);
/* Exact coefficient of q^exponent as a decimal/"p/q" string. Fails with
 * QMF_ERR_PRECISION when exponent >= precision. */
qmf_status qmf_series_coeff(const qmf_series* s, int64_t exponent, char** out);
/* {"valuation": int, "precision": int, "coeffs": ["p/q", ...]} */
qmf_status qmf_series_to_json(const qmf_series* s, char** out);

/* Newline-separated list of catalog names. */
qmf_status qmf_catalog_names(char** out);

/* ---- verification suites ------------------------------------------ */

/* Suites: all, systems, sl2, identities, chazy, serre, pushforward,
 * bases. The report has one "PASS name"/"FAIL name: detail" line per
 * check plus a summary line; failed_out receives the failure count. */
qmf_status qmf_verify_suite(const char* suite, int64_t order, int quiet, char** report_out,
                            int32_t* failed_out);

/* ---- tau functions ------------------------------------------------- */

/* which: tau, tau2, tau3; method: eta, recursion, formula. */
qmf_status qmf_tau_value(const char* which, int64_t n, const char* method, char** out);
/* Computes all three methods; QMF_ERR_CROSSCHECK on any disagreement,
 * otherwise the common value. */
qmf_status qmf_tau_crosscheck(const char* which, int64_t n, char** out);

/* ---- congruence scans ---------------------------------------------- */

/* Newline-separated "id: description" lines for the built-in rules. */
qmf_status qmf_scan_rules(char** out);
/* violation_out: 0 none, 1 violation found (at_out = first argument). */
qmf_status qmf_scan_rule(const char* rule, int64_t up_to, int32_t* violation_out,
                         int64_t* at_out);

/* ---- structure of the modular-form spaces -------------------------- */

typedef struct {
    int64_t p;
    int64_t index;
    int64_t eps2;
    int64_t eps3;
    int64_t genus;
    int64_t cusps;
    int64_t width_infinity;
    int64_t width_zero;
} qmf_x0p_info;

qmf_status qmf_x0p_invariants(int64_t p, qmf_x0p_info* out);
qmf_status qmf_dim_modular(int64_t p, int64_t k, int64_t* out);
qmf_status qmf_dim_cusp(int64_t p, int64_t k, int64_t* out);

/* Groups: sl2z, gamma0_2, gamma0_3. */
qmf_status qmf_sturm_bound(const char* group, int64_t k, int64_t* out);
/* One monomial per line in the group's modular generators. */
qmf_status qmf_monomial_basis(const char* group, int64_t k, char** out);
qmf_status qmf_verify_independence(const char* group, int64_t k, int64_t* rank_out,
                                   int64_t* dim_out);

#ifdef __cplusplus
}
#endif

#endif /* QMFORMS_H */
