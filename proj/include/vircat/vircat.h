/* vircat -- exact Virasoro / fusion-category calculator, C interface.
 *
 * All computations are exact over the rationals or Gaussian rationals.
 * Functions return a status code and, on success, a malloc'd JSON document in
 * *out_json which the caller releases with vircat_string_free(). Rational
 * numbers travel as strings "p/q" (or "p"); Gaussian rationals as
 * {"re": "p/q", "im": "p/q"}.
 */
#ifndef VIRCAT_H
#define VIRCAT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vircat_engine vircat_engine;

typedef enum vircat_status {
    VIRCAT_OK = 0,
    VIRCAT_ERR_USAGE = 1,  /* malformed input */
    VIRCAT_ERR_DOMAIN = 2, /* computation-domain error */
    VIRCAT_ERR_INTERNAL = 3
} vircat_status;

/* Engine handle: holds the default series truncation order and the last
 * error message. Operations are otherwise pure. */
vircat_engine *vircat_engine_new(void);
void vircat_engine_free(vircat_engine *e);

int vircat_engine_set_order(vircat_engine *e, int order);
int vircat_engine_order(const vircat_engine *e);

/* Message for the most recent failing call on this engine. */
const char *vircat_last_error(const vircat_engine *e);

void vircat_string_free(char *s);
const char *vircat_version(void);

/* c(t) = 13 - 6t - 6/t; t as a rational string. */
int vircat_central_charge(vircat_engine *e, const char *t, char **out_json);

/* h_{r,s}(t); also echoes the central charge. */
int vircat_weight(vircat_engine *e, const char *t, long r, long s, char **out_json);

/* Contravariant-form matrix at the given level of V(c, h), or of its simple
 * quotient when quotient_level > 0 (the singular vector at that level is
 * computed and used as the rewriting relation). */
int vircat_gram(vircat_engine *e, const char *c, const char *h, int quotient_level, int level,
                char **out_json);

/* Kernel basis of the level Gram matrix of V(c, h). */
int vircat_singular(vircat_engine *e, const char *c, const char *h, int level, char **out_json);

/* Least degenerate level of V(c, h) up to max_level, if any. */
int vircat_first_singular_level(vircat_engine *e, const char *c, const char *h, int max_level,
                                char **out_json);

int vircat_dual_basis(vircat_engine *e, const char *c, const char *h, int quotient_level,
                      int level, char **out_json);

/* Graded dimension series; order < 0 uses the engine default. */
int vircat_character(vircat_engine *e, const char *c, const char *h, int quotient_level,
                     int order, char **out_json);

int vircat_fuse(vircat_engine *e, int r, int rp, char **out_json);
int vircat_induce_w(vircat_engine *e, int r, char **out_json);
int vircat_induce_centralizer(vircat_engine *e, int r, int rp, char **out_json);
int vircat_centralizer_fusion(vircat_engine *e, int r, int rp, char **out_json);
int vircat_generic_fusion(vircat_engine *e, int r1, int r1p, int s1, int r2, int r2p, int s2,
                          char **out_json);

/* algebra is one of "W(-1)", "X", "M(-1)", "I(-1)", "I_generic". */
int vircat_decompose(vircat_engine *e, const char *algebra, int count, char **out_json);
int vircat_algebra_character(vircat_engine *e, const char *algebra, const char *weight_floor,
                             int summand_bound, int order, char **out_json);

/* The degenerate-field equation, its hypergeometric reduction, indicial data
 * and the two solution series; order < 0 uses the engine default. */
int vircat_bpz(vircat_engine *e, int order, char **out_json);

/* The full rigidity chain: c0, the two pairings, pi3, c3, a, b and R. */
int vircat_rigidity(vircat_engine *e, char **out_json);

/* Braiding solution set of the twisted category with all check results. */
int vircat_braiding(vircat_engine *e, char **out_json);

int vircat_twist(vircat_engine *e, int c_label, int r, char **out_json);
int vircat_parity_check(vircat_engine *e, int r, int r_range, char **out_json);

/* Golden-value suite; *out_json reports every item, "all_pass" the verdict.
 * Returns VIRCAT_OK even when items fail. */
int vircat_paper_suite(vircat_engine *e, char **out_json);

#ifdef __cplusplus
}
#endif

#endif /* VIRCAT_H */
