/* C ABI for the LLT engine.  All functions return llt_status; outputs are
 * opaque handles or malloc'd strings released with the matching free
 * function.  The thread-local message from llt_last_error() describes the
 * most recent failure on the calling thread. */
#ifndef LLT_C_H
#define LLT_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum llt_status {
  LLT_OK = 0,
  LLT_E_SCHEMA = 2,       /* malformed input */
  LLT_E_PRECONDITION = 3, /* operation called outside its contract */
  LLT_E_INTERNAL = 4,     /* invariant falsified; see llt_last_error() */
  LLT_E_NULLARG = 5
} llt_status;

typedef struct llt_tuple llt_tuple;
typedef struct llt_poly llt_poly;

const char* llt_last_error(void);
void llt_free_string(char* s);

/* Tuples: JSON is {"shapes":[{"outer":[...],"inner":[...]},...]} or a bare
 * shape array; "inner" defaults to zeros. */
llt_status llt_tuple_parse(const char* json, llt_tuple** out);
/* Job envelope {"tuple":[...],"n":int}; also accepts the bare forms.
 * *n_out is set to -1 when the input carries no "n". */
llt_status llt_job_parse(const char* json, llt_tuple** out, int* n_out);
llt_status llt_tuple_to_json(const llt_tuple* t, char** out);
void llt_tuple_free(llt_tuple* t);

/* Polynomials: JSON is {"n":int,"terms":[{"t":int,"x":[...],"c":int},...]}. */
llt_status llt_poly_parse(const char* json, llt_poly** out);
llt_status llt_poly_to_json(const llt_poly* p, char** out);
/* grouped != 0 renders t-polynomial coefficients per x-monomial. */
llt_status llt_poly_to_text(const llt_poly* p, int grouped, char** out);
int llt_poly_equal(const llt_poly* p, const llt_poly* q);
void llt_poly_free(llt_poly* p);

/* The coinversion LLT polynomial via tableau enumeration. */
llt_status llt_compute(const llt_tuple* t, int n, int workers, llt_poly** out);
/* The same polynomial as the vertex-model partition function. */
llt_status llt_partition_function(const llt_tuple* t, int n, int workers, llt_poly** out);

/* JSON reports consumed by the CLI. */
llt_status llt_lattice_report(const llt_tuple* t, int n, int workers, int include_configs,
                              char** json_out);
llt_status llt_swap_report(const llt_tuple* t, int n, int workers, int include_configs,
                           char** json_out);
llt_status llt_beads_report(const llt_tuple* t, char** json_out);
llt_status llt_matchings_report(const llt_tuple* t, char** json_out);
/* input: {"family":{"values":[...]}} or {"family":[tuple,...]}. */
llt_status llt_relations_report(const char* input_json, int n, int workers, char** json_out);

/* what: "lattice" | "walks" | "beads" | "matching"; format: "svg" | "tikz". */
llt_status llt_render(const llt_tuple* t, int n, const char* what, const char* format,
                      char** out);

/* Runs a named check corpus ("desk", "identities", "swap", "beads", "catalan",
 * "symmetry", "all").  Per-check lines stream to stderr when stream != 0.
 * *all_passed is 1 iff every check passed. */
llt_status llt_verify(const char* corpus, int workers, int stream, char** report_json,
                      int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* LLT_C_H */
