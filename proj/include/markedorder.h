/* markedorder: exact counting of integer order preserving extensions of
 * marked posets, their chain-of-ideals counting polynomials, and Ehrhart
 * specializations.
 *
 * All functions return a status code; non-handle results come back as
 * malloc'd NUL-terminated strings owned by the caller (release them with
 * moc_string_free). On failure the thread-local message from moc_last_error
 * describes what went wrong.
 */
#ifndef MARKEDORDER_H
#define MARKEDORDER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handles. */
typedef struct moc_poset moc_poset;
typedef struct moc_marked moc_marked;

enum {
  MOC_OK = 0,
  MOC_ERR_PARSE = 1,      /* malformed or mistyped input document */
  MOC_ERR_INVALID = 2,    /* domain error: cycles, bad specs, bad arguments */
  MOC_ERR_SIZE_LIMIT = 3, /* an engine limit was exceeded */
  MOC_ERR_VERIFY = 4      /* a verification run found a mismatch */
};

/* Pass 0 to use the default DFS node budget (10^8 assignments). */
#define MOC_DEFAULT_NODE_BUDGET 0

const char* moc_version(void);
const char* moc_last_error(void);
void moc_string_free(char* s);

/* Accepts a poset document {"elements":[...],"covers":[[l,u],...]} or a skew
 * shape {"lambda":[...],"mu":[...]} (converted to its cell poset). */
int moc_poset_parse(const char* json, moc_poset** out);
void moc_poset_free(moc_poset* p);

/* Accepts a marked poset document (poset keys plus {"marked":{label:value}})
 * or a family spec {"family":"ps"|"gt"|"gt-flagged","k":..,"m":..,
 * "y":[..],"z":[..][,"a":[..],"b":[..]]}. */
int moc_marked_parse(const char* json, moc_marked** out);
void moc_marked_free(moc_marked* m);

/* Canonical JSON for round-tripping. */
int moc_poset_to_json(const moc_poset* p, char** out_json);
int moc_marked_to_json(const moc_marked* m, char** out_json);

/* The order polynomial of the poset, canonical text in the variable n. */
int moc_order_polynomial(const moc_poset* p, char** out_text);

/* Labeling, mark values, validity region, and the multivariate counting
 * polynomial of the marked poset, as printable text. */
int moc_marked_report(const moc_marked* m, char** out_text);

/* Ehrhart polynomial of the marked order polytope, canonical text in n. */
int moc_ehrhart_polynomial(const moc_marked* m, char** out_text);

/* Exact number of integer extensions of the marking, as a decimal string. */
int moc_count(const moc_marked* m, uint64_t node_budget, char** out_decimal);

/* nonnegative is set to 1 when no coefficient of the counting polynomial is
 * negative, else 0 with the offending monomials listed in offenders_text. */
int moc_positivity(const moc_marked* m, int* nonnegative, char** offenders_text);

/* Formula-vs-brute-force equality on one document (marked poset or family
 * spec; specs additionally check the tableau correspondence count). Returns
 * MOC_ERR_VERIFY on mismatch; the report always describes what was checked. */
int moc_oracle_check_doc(const char* json, uint64_t node_budget, char** out_report);

/* The same equality on seeded random marked posets (splitmix64 generator;
 * at most 8 elements, 4 marked, marks in [0,5] inside the order cone). */
int moc_oracle_check_random(uint32_t trials, uint64_t seed, uint64_t node_budget,
                            uint32_t* failures, char** out_report);

/* Family/shape document writers. y and z have length k; lambda_len >= mu_len. */
int moc_gen_ps(int k, int m, const long long* y, const long long* z, char** out_json);
int moc_gen_gt(int k, int m, const long long* y, const long long* z, char** out_json);
int moc_gen_skew(const long long* lambda, size_t lambda_len, const long long* mu, size_t mu_len,
                 char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* MARKEDORDER_H */
