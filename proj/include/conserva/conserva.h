/*
 * conserva — exact-arithmetic engine for finite-dimensional nonassociative
 * algebras given by structure constants: builds the multiplication algebras
 * of 2-dimensional algebras, solves for delta-derivations, centroids and
 * biderivations over the rationals, and verifies the published claims about
 * the built-in tables.
 *
 * C surface of the shared library: opaque handles, status codes, and strings
 * allocated by the library (release them with conserva_string_free). All
 * rationals cross this boundary as decimal-free "p/q" strings. Handles are
 * immutable after creation and safe to share across threads.
 */
#ifndef CONSERVA_H
#define CONSERVA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum conserva_status {
    CONSERVA_OK = 0,
    CONSERVA_ERROR_INVALID_ARGUMENT = 1,
    CONSERVA_ERROR_UNKNOWN_ALGEBRA = 2,
    CONSERVA_ERROR_PARSE = 3,
    CONSERVA_ERROR_DIMENSION_MISMATCH = 4,
    CONSERVA_ERROR_IO = 5,
    CONSERVA_ERROR_INTERNAL = 6
} conserva_status;

/* Static message for a status code. */
const char* conserva_status_message(conserva_status status);

/* Detail message of the most recent failing call on this thread; static
 * lifetime until the next failing call. Empty string when none. */
const char* conserva_last_error(void);

/* Opaque algebra handle. */
typedef struct conserva_algebra conserva_algebra;

/* Built-in table algebras: "W2-conservative" (dim 8), "W2-commutative"
 * (dim 6), "S2" (dim 4). algebra_dir may be NULL; when given, a readable
 * <algebra_dir>/<name>.json overrides the built-in table. */
conserva_status conserva_algebra_builtin(const char* name, const char* algebra_dir,
                                         conserva_algebra** out);

/* Loads from the JSON interchange document
 *   { "name": str, "dim": int, "basis": [str],
 *     "structure": [[i, j, k, "p/q"], ...] }     (1-based, sparse)
 */
conserva_status conserva_algebra_from_json(const char* json_text, conserva_algebra** out);
conserva_status conserva_algebra_from_file(const char* path, conserva_algebra** out);

void conserva_algebra_free(conserva_algebra* algebra);

/* Dimension, or 0 when algebra is NULL. */
int conserva_algebra_dim(const conserva_algebra* algebra);

/* Pointer valid for the lifetime of the handle. */
const char* conserva_algebra_name(const conserva_algebra* algebra);

/* JSON interchange document for the algebra. */
conserva_status conserva_algebra_to_json(const conserva_algebra* algebra, char** out_text);

/* Rendered multiplication table. */
conserva_status conserva_algebra_table(const conserva_algebra* algebra, char** out_text);

/* Solver report for one of the kinds
 *   "derivations" | "delta-derivations" | "centroid" |
 *   "biderivations" | "biderivations-sym" | "biderivations-skew".
 * delta is the "p/q" parameter of "delta-derivations" and must be NULL for
 * every other kind. as_json selects the machine-readable report. */
conserva_status conserva_solve(const conserva_algebra* algebra, const char* kind,
                               const char* delta, int as_json, char** out_text);

/* Builds the algebra of all bilinear multiplications on an n-dimensional
 * space under the product fixed by the basepoint e (n comma-separated
 * rationals, e != 0), and reports the commutative and trace-zero subspaces.
 * out_report receives the report (text or JSON); out_algebra_json, when
 * non-NULL, receives the constructed algebra as an interchange document. */
conserva_status conserva_construct_wn(int n, const char* e_csv, int as_json, char** out_report,
                                      char** out_algebra_json);

/* Runs the full verification suite against the built-in tables (or overrides
 * from algebra_dir, which may be NULL). Every claim carries status "pass",
 * "fail", or "discrepancy-flag" — the last marks a contradiction the run
 * traced to a suspected misprint in the printed source, with the offending
 * cells named in the claim. out_failed/out_flagged may be NULL. */
conserva_status conserva_verify_paper(const char* algebra_dir, int as_json, char** out_report,
                                      int* out_failed, int* out_flagged);

/* Releases any string returned through an out parameter. */
void conserva_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* CONSERVA_H */
