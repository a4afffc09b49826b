#ifndef SZEGO_H
#define SZEGO_H

/* C interface to the szego library. Every function that can fail returns a
 * szego_status; on failure the message is available from szego_last_error()
 * on the calling thread. Strings returned through char** are owned by the
 * caller and released with szego_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SZEGO_API __declspec(dllexport)
#else
#define SZEGO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SZEGO_OK = 0,
  SZEGO_ERR_INVALID_ARGUMENT = 1,
  SZEGO_ERR_PARSE = 2,
  SZEGO_ERR_DOMAIN = 3,
  SZEGO_ERR_CONVERGENCE = 4,
  SZEGO_ERR_INTERNAL = 5
} szego_status;

typedef enum {
  SZEGO_MODE_FINITE = 0,    /* (x+1)^k (x^n + c_1 x^{n-1} + ... + c_n) */
  SZEGO_MODE_EXP = 1,       /* e^x (1 + c_1 x + ... + c_m x^m) */
  SZEGO_MODE_EXP_MONIC = 2  /* e^x (x^m + c_1 x^{m-1} + ... + c_m) */
} szego_mode;

typedef struct szego_poly szego_poly;
typedef struct szego_decomposition szego_decomposition;
typedef struct szego_affine_map szego_affine_map;
typedef struct szego_report szego_report;

SZEGO_API const char* szego_last_error(void);
SZEGO_API void szego_string_free(char* s);

/* Polynomials. Accepts an inline ascending list "1,3,1", the JSON object
 * {"coeffs": [...]} or {"exp_poly": {"coeffs": [...]}}. */
SZEGO_API szego_status szego_poly_parse(const char* text, szego_poly** out);
SZEGO_API void szego_poly_free(szego_poly* p);
/* -1 for the zero polynomial. */
SZEGO_API long szego_poly_degree(const szego_poly* p);
SZEGO_API int szego_poly_is_exp(const szego_poly* p);
SZEGO_API szego_status szego_poly_to_json(const szego_poly* p, char** out);
/* Ascending coefficients, comma separated. */
SZEGO_API szego_status szego_poly_to_list(const szego_poly* p, char** out);

/* Composition at an explicit ambient degree. */
SZEGO_API szego_status szego_compose(const szego_poly* a, const szego_poly* b,
                                     unsigned ambient_degree, szego_poly** out);
/* Composition of e^x a and e^x b; the result is an exp polynomial. */
SZEGO_API szego_status szego_exp_compose(const szego_poly* a, const szego_poly* b,
                                         szego_poly** out);
SZEGO_API szego_status szego_xi_iterate(const szego_poly* p, unsigned long nu,
                                        szego_poly** out);

/* Decomposition of the coefficient list c (comma separated); n = its length.
 * k is ignored outside SZEGO_MODE_FINITE. */
SZEGO_API szego_status szego_decompose(szego_mode mode, unsigned k, const char* coeffs,
                                       int with_roots, szego_decomposition** out);
SZEGO_API szego_status szego_decomposition_from_sigma(szego_mode mode, unsigned k,
                                                      const char* sigma,
                                                      szego_decomposition** out);
/* Reads the JSON written by szego_decomposition_to_json. */
SZEGO_API szego_status szego_decomposition_parse(const char* json, szego_decomposition** out);
SZEGO_API void szego_decomposition_free(szego_decomposition* d);
SZEGO_API szego_status szego_decomposition_to_json(const szego_decomposition* d, char** out);
/* The composed polynomial; an exp polynomial outside finite mode. */
SZEGO_API szego_status szego_recompose(const szego_decomposition* d, szego_poly** out);
/* The coefficient list c mapped to the decomposition's sigma. */
SZEGO_API szego_status szego_recompose_coeffs(const szego_decomposition* d, char** out);

SZEGO_API szego_status szego_affine_map_extract(szego_mode mode, unsigned n, unsigned k,
                                                szego_affine_map** out);
SZEGO_API void szego_affine_map_free(szego_affine_map* m);
SZEGO_API szego_status szego_affine_map_apply(const szego_affine_map* m, const char* coeffs,
                                              char** out);
SZEGO_API szego_status szego_affine_map_to_json(const szego_affine_map* m, char** out);

/* Verification suites: "all" or a comma-separated family list. */
SZEGO_API szego_status szego_verify(const char* suite, uint64_t seed, size_t trials,
                                    unsigned jobs, szego_report** out);
/* Comma-separated family names. */
SZEGO_API szego_status szego_verify_families(char** out);
SZEGO_API void szego_report_free(szego_report* r);
SZEGO_API size_t szego_report_check_count(const szego_report* r);
SZEGO_API size_t szego_report_failure_count(const szego_report* r);
SZEGO_API szego_status szego_report_to_json(const szego_report* r, char** out);
SZEGO_API szego_status szego_report_to_csv(const szego_report* r, char** out);
SZEGO_API szego_status szego_report_csv_from_json(const char* json, char** out);
SZEGO_API szego_status szego_report_strip_metadata(const char* json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SZEGO_H */
