#ifndef PRODPOW_H
#define PRODPOW_H

/*
 * C interface to the prodpow library: parametrization, decomposition and
 * auditing of positive-integer solutions of x_1 x_2 ... x_{m-1} = z^n.
 *
 * Integers cross the boundary as decimal strings; structured values cross
 * as JSON text. Every function returning pp_status leaves a one-line
 * message for pp_last_error() on failure (thread-local). Strings returned
 * through char** out-parameters are owned by the caller and released with
 * pp_string_free(). Handles are released with their *_free function, which
 * accepts NULL.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(PRODPOW_BUILDING_LIBRARY)
#define PP_API __attribute__((visibility("default")))
#else
#define PP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
    PP_OK = 0,
    PP_INVALID_ARGUMENT = 1,
    PP_PRECONDITION = 2,
    PP_GUARD_EXCEEDED = 3,
    PP_UNSUPPORTED_SCOPE = 4,
    PP_DEFECT = 5,
    PP_PARSE = 6,
    PP_COVERAGE_GAP = 7,
    PP_INTERNAL = 8
} pp_status;

typedef struct pp_solution pp_solution;
typedef struct pp_param_tree pp_param_tree;
typedef struct pp_family pp_family;
typedef struct pp_report pp_report;

PP_API const char* pp_last_error(void);
PP_API const char* pp_status_name(pp_status status);
PP_API void pp_string_free(char* s);

/* Solutions: {"xs": ["..."], "z": "...", "n": k}. */
PP_API pp_status pp_solution_create(const char* const* xs, size_t count, const char* z, unsigned n,
                                    pp_solution** out);
PP_API pp_status pp_solution_from_json(const char* json, pp_solution** out);
PP_API pp_status pp_solution_to_json(const pp_solution* s, char** out);
/* 1 when the product of the xs equals z^n, 0 otherwise. */
PP_API int pp_solution_satisfied(const pp_solution* s);
PP_API void pp_solution_free(pp_solution* s);

/* Parameter trees of the general recursion. */
PP_API pp_status pp_param_tree_from_json(const char* json, pp_param_tree** out);
PP_API pp_status pp_param_tree_to_json(const pp_param_tree* t, char** out);
/* JSON list of violated coprimality conditions. */
PP_API pp_status pp_param_tree_violations(const pp_param_tree* t, char** out);
PP_API void pp_param_tree_free(pp_param_tree* t);

PP_API pp_status pp_all_ones_tree(unsigned m, unsigned n, pp_param_tree** out);
PP_API pp_status pp_random_tree(unsigned m, unsigned n, uint64_t seed, unsigned max_value, pp_param_tree** out);
PP_API pp_status pp_generate(const pp_param_tree* t, pp_solution** out);
/* PP_COVERAGE_GAP (with the reason in pp_last_error) when no tree regenerates s. */
PP_API pp_status pp_decompose(const pp_solution* s, pp_param_tree** out);
/* Reduction witness {theta, w, d, v, Z0, X_top, X_second} as JSON. */
PP_API pp_status pp_reduce(const pp_solution* s, char** out);
PP_API pp_status pp_parameter_count(unsigned m, unsigned n, uint64_t* out);

/* Symbolic families. */
PP_API pp_status pp_family_from_json(const char* json, pp_family** out);
PP_API pp_status pp_family_to_json(const pp_family* f, char** out);
/* JSON list with one {"equation", "pass", "residual"} per equation. */
PP_API pp_status pp_family_verify(const pp_family* f, char** out);
PP_API void pp_family_free(pp_family* f);
/* JSON list of fixture names. */
PP_API pp_status pp_fixture_names(char** out);
PP_API pp_status pp_fixture(const char* name, pp_family** out);
/* Every fixture with its per-equation verdicts, as one JSON document. */
PP_API pp_status pp_fixtures_report(char** out);

/* Systems: spec is a list of {"vars": [...], "n": k} (z last in vars) or
 * {"equations": [...]}. Output: the unified family with provenance and
 * per-equation verdicts. */
PP_API pp_status pp_solve_system(const char* spec_json, char** out);

/* Streams every solution with z <= z_bound. Returning nonzero from the
 * callback stops the enumeration early (still PP_OK). */
typedef int (*pp_solution_callback)(const pp_solution* s, void* user);
PP_API pp_status pp_enumerate(unsigned m, unsigned n, uint64_t z_bound, unsigned jobs, pp_solution_callback cb,
                              void* user);

/* Audits. */
typedef struct pp_audit_options {
    unsigned m;
    unsigned n;
    uint64_t z_bound;   /* enumeration bound; w bound for theorem5; x,y bound for theorem3 */
    uint64_t k_bound;   /* theorem3 only */
    uint64_t samples;
    uint64_t seed;
    unsigned max_value; /* random parameters drawn from [1, max_value] */
    unsigned jobs;
    const char* family; /* fixture name for the "family" audit */
} pp_audit_options;

PP_API void pp_audit_options_default(pp_audit_options* options);
/* JSON list of audit names accepted by pp_audit_run. */
PP_API pp_status pp_audit_names(char** out);
PP_API pp_status pp_audit_run(const char* name, const pp_audit_options* options, pp_report** out);
PP_API pp_status pp_report_to_json(const pp_report* r, int include_timing, char** out);
PP_API pp_status pp_report_from_json(const char* json, pp_report** out);
PP_API int pp_report_has_findings(const pp_report* r);
PP_API void pp_report_free(pp_report* r);

#ifdef __cplusplus
}
#endif

#endif
