/* zolotarev.h - C interface to the cactus enumeration and moduli-map library.
 *
 * All objects are opaque handles created and destroyed by the library; all
 * functions return a zv_status, with outputs through pointers.  Strings
 * returned through char** are heap-allocated and must be released with
 * zv_string_free.  On any failure zv_last_error() describes the problem for
 * the calling thread.
 */

#ifndef ZOLOTAREV_H
#define ZOLOTAREV_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zv_status {
  ZV_OK = 0,
  ZV_ERR_USAGE = 1,      /* arguments violate a documented precondition */
  ZV_ERR_CAPABILITY = 2, /* valid request outside the supported range   */
  ZV_ERR_DOMAIN = 3,     /* numeric input outside an analytic domain    */
  ZV_ERR_CLOSURE = 4,    /* class set not closed under wall crossing    */
  ZV_ERR_VERIFY = 5,     /* a numeric or combinatorial check failed     */
  ZV_ERR_INTERNAL = 6    /* broken internal invariant                   */
} zv_status;

const char* zv_status_name(zv_status s);

/* Message for the most recent failure on the calling thread. */
const char* zv_last_error(void);

void zv_string_free(char* s);

/* ---- enumeration ----------------------------------------------------- */

typedef struct zv_enumeration zv_enumeration;

/* Enumerates cactus classes of the passport (degree; k,l,m), keeping those
 * matching the group filter ("any", "symmetric", "alternating", "psl27")
 * and with automorphism order >= min_aut (pass 1 for no constraint). */
zv_status zv_enumerate(int degree, int k, int l, int m, const char* group_filter,
                       int min_aut, zv_enumeration** out);

void zv_enumeration_free(zv_enumeration* e);

int zv_enumeration_count(const zv_enumeration* e);

/* One class as a JSON record (id, permutations, aut_order, group). */
zv_status zv_enumeration_class_json(const zv_enumeration* e, int index, char** out);

/* Whole listing; format is "text" or "json". */
zv_status zv_enumeration_render(const zv_enumeration* e, const char* format,
                                char** out);

/* Per-class wall and contraction listing; format is "text" or "json". */
zv_status zv_borders_render(const zv_enumeration* e, const char* format, char** out);

/* ---- moduli map ------------------------------------------------------ */

typedef struct zv_atlas zv_atlas;

zv_status zv_atlas_build(const zv_enumeration* e, zv_atlas** out);
void zv_atlas_free(zv_atlas* a);

int zv_atlas_component_count(const zv_atlas* a);
zv_status zv_atlas_component_counts(const zv_atlas* a, int component, int* faces,
                                    int* edges, int* vertices, int* chi);
/* Surface name of a component; pointer owned by the atlas handle. */
const char* zv_atlas_component_surface(const zv_atlas* a, int component);

/* format is "json", "dot" or "summary". */
zv_status zv_atlas_render(const zv_atlas* a, const char* format, char** out);

/* ---- analytic families ----------------------------------------------- */

/* Degree-5 family at b = b_re + i b_im; tol drives the distinct-value and
 * collinearity tests; format "text" or "json".  failed (nullable) receives
 * the number of failing identity checks in the report. */
zv_status zv_analytic_deg5(double b_re, double b_im, double tol, const char* format,
                           char** out, int* failed);

/* Degree-6 family at z = z_re + i z_im; format "text" or "json". */
zv_status zv_analytic_deg6(double z_re, double z_im, double tol, const char* format,
                           char** out, int* failed);

/* The introductory example report; format "text" or "json". */
zv_status zv_analytic_intro(const char* format, char** out, int* failed);

/* ---- verification suite ---------------------------------------------- */

/* Runs the acceptance criteria (category filter: comma-separated subset of
 * enumeration,borders,atlas,transform,analytic,determinism; NULL or "" for
 * all).  cli_path, when non-NULL, names the command-line binary used by the
 * determinism criterion.  failed receives the number of failing criteria. */
zv_status zv_verify(const char* only, const char* cli_path, char** report,
                    int* failed);

#ifdef __cplusplus
}
#endif

#endif /* ZOLOTAREV_H */
