#ifndef LPASA_LPASA_H
#define LPASA_LPASA_H

/*
 * C interface to the L_p affine surface area library.
 *
 * Every function returns an lpasa_status. On failure the message of the
 * most recent error on the calling thread is available from
 * lpasa_last_error() until the next failing call on that thread.
 *
 * Handles are opaque and owned by the caller; release them with the
 * matching *_free function. Strings returned through out-parameters are
 * owned by the handle they came from and stay valid until it is freed.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LPASA_BUILDING)
#    define LPASA_API __declspec(dllexport)
#  else
#    define LPASA_API __declspec(dllimport)
#  endif
#else
#  define LPASA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lpasa_status
{
    LPASA_OK = 0,
    LPASA_ERR_NULL_ARGUMENT,
    LPASA_ERR_CONFIG,
    LPASA_ERR_EXPONENT,
    LPASA_ERR_UNSUPPORTED_KIND,
    LPASA_ERR_PRECONDITION,
    LPASA_ERR_DEGENERATE_BODY,
    LPASA_ERR_GEOMETRY,
    LPASA_ERR_PARSE,
    LPASA_ERR_IO,
    LPASA_ERR_OUT_OF_RANGE,
    LPASA_ERR_INTERNAL
} lpasa_status;

typedef enum lpasa_format
{
    LPASA_FORMAT_CSV = 0,
    LPASA_FORMAT_JSON = 1
} lpasa_format;

typedef enum lpasa_method
{
    LPASA_METHOD_SPHERE_FORM = 0,
    LPASA_METHOD_BOUNDARY_FORM,
    LPASA_METHOD_SUP_FORM,
    LPASA_METHOD_CLOSED_FORM
} lpasa_method;

typedef struct lpasa_body lpasa_body;
typedef struct lpasa_table lpasa_table;

typedef struct lpasa_value
{
    double p;
    double value; /* +inf when divergent */
    double error_estimate;
    int divergent;
    lpasa_method method;
} lpasa_value;

typedef struct lpasa_suite_config
{
    uint64_t seed;
    int count;
    int harmonic_budget;
    double perturbation_scale;
    double santalo_c;
    int include_duality;
} lpasa_suite_config;

LPASA_API const char* lpasa_version(void);
LPASA_API const char* lpasa_status_string(lpasa_status status);
LPASA_API const char* lpasa_last_error(void);

/* Bodies */

/* Parse a JSON body spec (see docs/body_schema.md). */
LPASA_API lpasa_status lpasa_body_from_json(const char* text, lpasa_body** out);
LPASA_API lpasa_status lpasa_body_from_file(const char* path, lpasa_body** out);
LPASA_API lpasa_status lpasa_body_polar(const lpasa_body* body, lpasa_body** out);
LPASA_API void lpasa_body_free(lpasa_body* body);

LPASA_API lpasa_status lpasa_body_dim(const lpasa_body* body, int* out);
LPASA_API lpasa_status lpasa_body_label(const lpasa_body* body, const char** out);
LPASA_API lpasa_status lpasa_body_is_smooth(const lpasa_body* body, int* out);
LPASA_API lpasa_status lpasa_body_volume(const lpasa_body* body, double* out);
/* u has dim entries and need not be normalized. */
LPASA_API lpasa_status lpasa_body_support(const lpasa_body* body, const double* u,
                                          double* out);

/* Functionals. grid is NULL, "default" or a scheme such as "circle:4096". */

/* Sphere form, polar endpoint for p = +-inf, sup form for p = -n. */
LPASA_API lpasa_status lpasa_asa(const lpasa_body* body, double p, const char* grid,
                                 lpasa_value* out);
LPASA_API lpasa_status lpasa_asa_boundary_form(const lpasa_body* body, double p,
                                               const char* grid, lpasa_value* out);

/* Commands producing result tables */

LPASA_API lpasa_status lpasa_run_asp(const lpasa_body* body, const double* ps,
                                     size_t count, const char* grid,
                                     lpasa_table** out);
LPASA_API lpasa_status lpasa_run_duality(const lpasa_body* body, const double* ps,
                                         size_t count, const char* grid,
                                         lpasa_table** out);
LPASA_API lpasa_status lpasa_run_floating(const lpasa_body* body,
                                          const double* schedule, size_t count,
                                          int direction_count, const char* grid,
                                          lpasa_table** out);
/* ps == NULL (or count_p == 0) selects the constant weight 1. */
LPASA_API lpasa_status lpasa_run_surface(const lpasa_body* body, const double* ps,
                                         size_t count_p, const double* schedule,
                                         size_t count, int direction_count,
                                         const char* grid, lpasa_table** out);
LPASA_API void lpasa_suite_config_default(lpasa_suite_config* config);
LPASA_API lpasa_status lpasa_run_suite(const lpasa_suite_config* config,
                                       lpasa_table** out);
LPASA_API lpasa_status lpasa_run_cube_example(int dim, const double* deltas,
                                              size_t count, lpasa_table** out);
LPASA_API lpasa_status lpasa_run_rounded_example(double big_radius, double eps,
                                                 const double* ps, size_t count,
                                                 lpasa_table** out);

/* Tables */

LPASA_API lpasa_status lpasa_table_shape(const lpasa_table* table, size_t* rows,
                                         size_t* columns);
LPASA_API lpasa_status lpasa_table_column_name(const lpasa_table* table,
                                               size_t column, const char** out);
/* Integer cells convert to double; text cells are LPASA_ERR_CONFIG. */
LPASA_API lpasa_status lpasa_table_number(const lpasa_table* table, size_t row,
                                          const char* column, double* out);
/* Any cell, formatted as in CSV output (without quoting). */
LPASA_API lpasa_status lpasa_table_text(const lpasa_table* table, size_t row,
                                        const char* column, const char** out);
LPASA_API lpasa_status lpasa_table_counts(const lpasa_table* table,
                                          size_t* violations, size_t* divergences);
LPASA_API lpasa_status lpasa_table_serialize(const lpasa_table* table,
                                             lpasa_format format, const char** out);
LPASA_API lpasa_status lpasa_table_write(const lpasa_table* table,
                                         lpasa_format format, const char* path);
LPASA_API void lpasa_table_free(lpasa_table* table);

#ifdef __cplusplus
}
#endif

#endif
