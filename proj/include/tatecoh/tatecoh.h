#ifndef TATECOH_TATECOH_H
#define TATECOH_TATECOH_H

/* C interface to the tatecoh library.
 *
 * Objects are opaque handles released with their _free function. Every call
 * returns a tc_status; on failure tc_last_error_message() describes the error
 * for the calling thread. Strings returned through char** out-parameters are
 * owned by the caller and released with tc_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TC_API __declspec(dllexport)
#else
#define TC_API __attribute__((visibility("default")))
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_MIXED_FIELDS = 1,
  TC_ERR_DIVISION_BY_ZERO,
  TC_ERR_NO_PRIMITIVE_ROOT,
  TC_ERR_INVALID_FIELD,
  TC_ERR_SHAPE_MISMATCH,
  TC_ERR_NOT_INVERTIBLE,
  TC_ERR_NO_SOLUTION,
  TC_ERR_PARSE,
  TC_ERR_VALIDATION_FAILED,
  TC_ERR_BAD_CHARACTERISTIC,
  TC_ERR_DIMENSION_NOT_ONE,
  TC_ERR_NOT_EIGENVECTOR,
  TC_ERR_NOT_AUTOMORPHISM,
  TC_ERR_DEGENERATE_FORM,
  TC_ERR_RADICAL_VERIFICATION_FAILED,
  TC_ERR_NOT_SPLIT_COMMUTATIVE,
  TC_ERR_EXACTNESS_FAILURE,
  TC_ERR_DEGREE_OUTSIDE_WINDOW,
  TC_ERR_ISO_UNDECIDED,
  TC_ERR_INVALID_ARGUMENT,
  TC_ERR_NOT_HOPF = 100,
  TC_ERR_INTERNAL = 101
} tc_status;

typedef enum tc_engine { TC_ENGINE_MINIMAL = 0, TC_ENGINE_FREE = 1 } tc_engine;

typedef enum tc_format { TC_FORMAT_TEXT = 0, TC_FORMAT_JSON = 1 } tc_format;

typedef enum tc_check_status { TC_CHECK_PASS = 0, TC_CHECK_FAIL = 1, TC_CHECK_SKIP = 2 } tc_check_status;

typedef struct tc_input tc_input;   /* an algebra, optionally with Hopf structure */
typedef struct tc_module tc_module;
typedef struct tc_table tc_table;   /* a cohomology table */

TC_API const char* tc_version(void);
TC_API const char* tc_last_error_message(void);
TC_API const char* tc_status_name(tc_status status);
TC_API void tc_string_free(char* s);
TC_API void tc_set_seed(uint64_t seed);

/* source is a JSON file path or "builtin:<name>". */
TC_API tc_status tc_input_load(const char* source, tc_input** out);
TC_API tc_status tc_input_from_json(const char* text, tc_input** out);
TC_API void tc_input_free(tc_input* in);
/* Newline separated list of builtin names. */
TC_API tc_status tc_builtin_names(char** out);
TC_API size_t tc_input_dim(const tc_input* in);
TC_API int tc_input_is_hopf(const tc_input* in);
/* valid is set to 1 when every axiom holds; report lists the violations. */
TC_API tc_status tc_input_validate(const tc_input* in, int* valid, char** report);
TC_API tc_status tc_input_info(const tc_input* in, tc_format format, char** out);
/* Canonical JSON text. */
TC_API tc_status tc_input_export(const tc_input* in, char** out);

TC_API tc_status tc_module_trivial(const tc_input* in, tc_module** out);
TC_API tc_status tc_module_adjoint(const tc_input* in, tc_module** out);
TC_API tc_status tc_module_counit_kernel(const tc_input* in, tc_module** out);
TC_API tc_status tc_module_regular(const tc_input* in, tc_module** out);
TC_API tc_status tc_module_from_json(const tc_input* in, const char* text, tc_module** out);
TC_API tc_status tc_module_load(const tc_input* in, const char* path, tc_module** out);
TC_API size_t tc_module_dim(const tc_module* m);
TC_API void tc_module_free(tc_module* m);

/* Ext(k, M) over A in degrees lo..hi. */
TC_API tc_status tc_tate_cohomology(const tc_input* in, const tc_module* m, int lo, int hi, tc_engine engine,
                                    tc_table** out);
/* Ext(A, A) over the enveloping algebra. */
TC_API tc_status tc_tate_hochschild(const tc_input* in, int lo, int hi, tc_engine engine, tc_table** out);
/* Homology of Hom(P, k) on the spliced complete resolution, trivial coefficients. */
TC_API tc_status tc_tate_spliced(const tc_input* in, int lo, int hi, tc_table** out);
TC_API tc_status tc_table_range(const tc_table* t, int* lo, int* hi);
TC_API tc_status tc_table_dim(const tc_table* t, int degree, size_t* dim);
TC_API tc_status tc_table_render(const tc_table* t, tc_format format, int representatives, char** out);
TC_API void tc_table_free(tc_table* t);

/* which: positive, theorem, summand or symmetry. upto applies to positive. */
TC_API tc_status tc_check(const tc_input* in, const char* which, int lo, int hi, int upto, tc_format format,
                          tc_check_status* result, char** report);
/* Products of the basis classes of degrees i and j, with the unit and
 * associativity checks on the window spanned by 0, i, j and i + j. */
TC_API tc_status tc_cup(const tc_input* in, int i, int j, tc_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
