/*
 * hermspace - weighted Hermite spaces: information complexity, kernels,
 * worst-case integration errors and tractability verdicts.
 *
 * C interface of the shared library.  All functions return hws_status;
 * outputs are written through pointers.  Strings returned through char**
 * are heap-allocated and must be released with hws_string_free.  On any
 * failure hws_last_error() carries a human-readable message for the
 * calling thread.
 */

#ifndef HERMSPACE_H
#define HERMSPACE_H

#include <stddef.h>

#if defined(_WIN32)
#define HWS_API __declspec(dllexport)
#else
#define HWS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hws_status {
    HWS_OK = 0,
    HWS_ERROR_VERIFY = 1,      /* a verification suite reported failures */
    HWS_ERROR_SCHEMA = 2,      /* malformed document (spec JSON, rule CSV) */
    HWS_ERROR_DOMAIN = 3,      /* argument outside an operation's domain */
    HWS_ERROR_UNSUPPORTED = 4, /* parameter combination not covered */
    HWS_ERROR_INTERNAL = 5
} hws_status;

/* Opaque weighted-Hermite-space handle. */
typedef struct hws_space hws_space;

HWS_API const char* hws_version(void);

/* Message describing the last failure on this thread ("" if none). */
HWS_API const char* hws_last_error(void);

HWS_API void hws_string_free(char* s);

/* ------------------------------------------------------------- spaces --- */

/* Parses the canonical space-spec JSON document. */
HWS_API hws_status hws_space_from_json(const char* json_text, hws_space** out);
HWS_API void hws_space_free(hws_space* space);
HWS_API hws_status hws_space_to_json(const hws_space* space, char** json_out);
HWS_API int hws_space_dimension(const hws_space* space);

/* ------------------------------------------------------------ spectra --- */

/* Exact eigenvalue count #{k : R(k) > eps^2} as a decimal string of
 * arbitrary length. */
HWS_API hws_status hws_count_eigenvalues(const hws_space* space, double epsilon,
                                         char** count_decimal);

/* Zeta-function upper bound on the count (GaussianAnova family).  Requires
 * q > 1/alpha; pass q <= 0 to use the default max(1, 1.5/alpha).  The bound
 * may come back +infinity. */
HWS_API hws_status hws_count_zeta_bound(const hws_space* space, double epsilon, double q,
                                        double* bound);

/* Minimal approximation errors e(0..n_max) under linear information;
 * `out` must hold n_max + 1 doubles. */
HWS_API hws_status hws_minimal_errors(const hws_space* space, long n_max, double* out);

/* Trace of the approximation operator; HWS_ERROR_DOMAIN when it diverges
 * (alpha = 1). */
HWS_API hws_status hws_trace(const hws_space* space, double* out);

/* Kernel value K(x, y); x and y hold s coordinates each. */
HWS_API hws_status hws_kernel(const hws_space* space, const double* x, const double* y,
                              double* value);

/* ------------------------------------------------------- tractability --- */

/* info_class: "all" | "std";
 * problem: "app" | "int" | "anchored" | "int-nonneg".
 * Optional (sigma, tau)-weak-tractability entry when with_sigma_tau != 0.
 * Returns HWS_ERROR_UNSUPPORTED (with the JSON report still filled in) when
 * no implemented characterization covers the combination. */
HWS_API hws_status hws_tractability_json(const hws_space* space, const char* info_class,
                                         const char* problem, int with_sigma_tau, double sigma,
                                         double tau, char** json_out);

/* ----------------------------------------------------------- analysis --- */

/* Worst-case integration error of the rule given as CSV text
 * ("w,x_1,...,x_s" with a header row).  The JSON report carries the error,
 * the non-negativity flag and, for rules with non-negative weights, the
 * matching theoretical lower bound for the space. */
HWS_API hws_status hws_wce_from_csv(const hws_space* space, const char* rule_csv,
                                    char** json_out);

/* ------------------------------------------------------- verification --- */

/* suite: "bounds" | "kernels" | "norms" | "spectra" | "all".
 * Runs the named deterministic verification suite; fills a JSON summary and
 * returns HWS_ERROR_VERIFY if any check failed. */
HWS_API hws_status hws_verify(const char* suite, unsigned long seed, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* HERMSPACE_H */
