/* C interface of the polyreg library. */
#ifndef POLYREG_H
#define POLYREG_H

#include <stddef.h>

#if defined(POLYREG_BUILDING_LIBRARY)
#define POLYREG_API __attribute__((visibility("default")))
#else
#define POLYREG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum polyreg_status {
  POLYREG_OK = 0,
  POLYREG_ERR_INVALID_ARGUMENT = 1,
  POLYREG_ERR_PARSE = 2,
  POLYREG_ERR_DOMAIN = 3,
  POLYREG_ERR_POLE = 4,
  POLYREG_ERR_DIVISION_BY_ZERO = 5,
  POLYREG_ERR_UNSUPPORTED = 6,
  POLYREG_ERR_CONVERGENCE = 7,
  POLYREG_ERR_INTERNAL = 8
} polyreg_status;

typedef struct polyreg_function polyreg_function; /* rational function over Q */
typedef struct polyreg_element polyreg_element;   /* element of the polylogarithmic complex */
typedef struct polyreg_form polyreg_form;         /* differential form at the generic point */

POLYREG_API const char* polyreg_version(void);

/* Message of the last failed call on this thread; "" after a success. */
POLYREG_API const char* polyreg_last_error(void);
POLYREG_API const char* polyreg_status_name(polyreg_status s);

/* Every char* handed out by the library is released with this. */
POLYREG_API void polyreg_string_free(char* s);

/* Exact numbers, as "p/q" strings. */
POLYREG_API polyreg_status polyreg_beta(int k, char** out);
POLYREG_API polyreg_status polyreg_beta_kp(int k, int p, char** out);

/* Single-valued polylogarithm L^_n(z) in double precision. route: NULL,
   "auto", "direct" or "path". */
POLYREG_API polyreg_status polyreg_sv_polylog(int n, double re, double im, const char* route, double* out_re,
                                              double* out_im);

POLYREG_API polyreg_status polyreg_function_parse(const char* text, polyreg_function** out);
POLYREG_API void polyreg_function_free(polyreg_function* f);
POLYREG_API polyreg_status polyreg_function_to_string(const polyreg_function* f, char** out);

POLYREG_API polyreg_status polyreg_element_parse(const char* text, polyreg_element** out);
POLYREG_API void polyreg_element_free(polyreg_element* e);
POLYREG_API polyreg_status polyreg_element_to_string(const polyreg_element* e, char** out);
POLYREG_API polyreg_status polyreg_element_delta(const polyreg_element* e, polyreg_element** out);
/* at: a rational number or "inf". */
POLYREG_API polyreg_status polyreg_element_residue(const polyreg_element* e, const char* at, polyreg_element** out);

POLYREG_API polyreg_status polyreg_regulator(const polyreg_element* e, polyreg_form** out);
POLYREG_API polyreg_status polyreg_form_parse(const char* text, polyreg_form** out);
POLYREG_API void polyreg_form_free(polyreg_form* f);
POLYREG_API polyreg_status polyreg_form_to_string(const polyreg_form* f, char** out);
POLYREG_API int polyreg_form_degree(const polyreg_form* f);
POLYREG_API polyreg_status polyreg_form_derivative(const polyreg_form* f, polyreg_form** out);
/* Value on nvec vectors at a point of C^nvar; complex numbers are interleaved
   (re, im) pairs: point has 2*nvar doubles, vectors 2*nvar*nvec (vector-major). */
POLYREG_API polyreg_status polyreg_form_evaluate(const polyreg_form* f, size_t nvar, const char* const* names,
                                                 const double* point, size_t nvec, const double* vectors,
                                                 double* out_re, double* out_im);

/* Run a command of the command-line tool. config_json is a JSON object of
   options (may be NULL). format: "json" or "text". On POLYREG_OK *out holds
   the output and *passed is 1 iff every check passed. */
POLYREG_API polyreg_status polyreg_run(const char* command, const char* config_json, const char* format, char** out,
                                       int* passed);

#ifdef __cplusplus
}
#endif

#endif
