/* C interface to the travelling-wave speed library. */
#ifndef TWSPEED_H
#define TWSPEED_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define TWS_API __attribute__((visibility("default")))
#else
#define TWS_API
#endif

#define TWS_SCHEMA_VERSION 1

typedef enum tws_status {
    TWS_OK = 0,
    TWS_ERR_INVALID_INPUT = 1,
    TWS_ERR_OUT_OF_DOMAIN = 2,
    TWS_ERR_NUMERICAL = 3,
    TWS_ERR_NO_CONVERGENCE = 4,
    TWS_ERR_ESTIMATION = 5,
    TWS_ERR_SINGULAR = 6
} tws_status;

/* Message of the last failed call on the calling thread ("" after success). */
TWS_API const char* tws_last_error(void);
TWS_API const char* tws_status_name(tws_status status);

/* ---- intervals -------------------------------------------------------- */

typedef enum tws_interval_kind {
    TWS_NECESSARY = 0,
    TWS_SUFFICIENT_OPTIMAL = 1,
    TWS_SUFFICIENT_POLY = 2,
    TWS_SUFFICIENT_PADE = 3
} tws_interval_kind;

typedef struct tws_interval {
    double lo;
    double hi;
    int empty;
    tws_interval_kind kind;
    char reason[128];
} tws_interval;

typedef enum tws_beta_source { TWS_SOURCE_PERIODIC = 0, TWS_SOURCE_DIRICHLET = 1 } tws_beta_source;

typedef struct tws_estimate {
    double q;
    double beta_star;
    double witness; /* period T or half-length r of the maximizer */
    int witness_sign;
    tws_beta_source source;
} tws_estimate;

typedef struct tws_bound_choice {
    double x1, x2, p1, p2;
    double bound;
} tws_bound_choice;

TWS_API tws_status tws_fucik_point(double a, double b, double c, double* alpha, double* beta);
TWS_API tws_status tws_necessary_interval(double a, double b, tws_interval* out);
TWS_API tws_status tws_poly_interval(double a, double b, double x1, double x2, tws_interval* out);
TWS_API tws_status tws_pade_interval(double a, double b, double x1, double x2, double p1, double p2,
                                     tws_interval* out);
TWS_API tws_status tws_beta_star(double q, tws_beta_source source, tws_estimate* out);
/* `estimate` may be NULL. */
TWS_API tws_status tws_optimal_interval(double a, double b, tws_beta_source source, tws_interval* out,
                                        tws_estimate* estimate);
TWS_API tws_status tws_best_poly(double q, tws_bound_choice* out);
TWS_API tws_status tws_best_pade(double q, tws_bound_choice* out);

/* ---- scalar bounds ---------------------------------------------------- */

TWS_API tws_status tws_bound_poly(double x1, double x2, double q, double* out);
TWS_API tws_status tws_bound_pade(double x1, double x2, double p1, double p2, double q, double* out);
TWS_API tws_status tws_P_curve(double alpha, double* out);

/* ---- sampled curves --------------------------------------------------- */

typedef enum tws_curve_kind {
    TWS_CURVE_MU_T = 0,
    TWS_CURVE_MU,
    TWS_CURVE_P,
    TWS_CURVE_ETA_T,
    TWS_CURVE_ETA,
    TWS_CURVE_DIRICHLET_EIG,
    TWS_CURVE_PERIODIC_FUCIK,
    TWS_CURVE_DIRICHLET_FUCIK,
    TWS_CURVE_ENVELOPE,
    TWS_CURVE_INTERVAL_LENGTH
} tws_curve_kind;

typedef struct tws_curve_request {
    tws_curve_kind kind;
    int samples;      /* sweep points for parametrized curves */
    double lo, hi;    /* sweep range: x1, alpha, r, q or b/a depending on kind */
    double T, p1, p2; /* period and shape parameters */
    double x1;        /* interval-length: positive half-width */
    int n;            /* eigenvalue branch */
    int k;            /* Dirichlet Fucik curve at r_k */
    int sign;         /* sign of v(0) */
    double r;         /* if > 0, Dirichlet Fucik curve at this half-length instead of r_k */
    double step;      /* continuation step */
    double alpha_max; /* continuation cap */
    double stop;      /* extra alpha the continuation lands on; ignored if <= 0 */
} tws_curve_request;

typedef struct tws_curve tws_curve;

/* Fills defaults for `kind`. */
TWS_API void tws_curve_request_init(tws_curve_request* req, tws_curve_kind kind);
TWS_API tws_status tws_curve_compute(const tws_curve_request* req, tws_curve** out);
TWS_API size_t tws_curve_rows(const tws_curve* c);
TWS_API size_t tws_curve_columns(const tws_curve* c);
TWS_API const char* tws_curve_column_name(const tws_curve* c, size_t col);
/* NaN marks a failed row; see tws_curve_row_status. */
TWS_API double tws_curve_value(const tws_curve* c, size_t row, size_t col);
TWS_API const char* tws_curve_row_status(const tws_curve* c, size_t row);
TWS_API const char* tws_curve_termination(const tws_curve* c);
TWS_API void tws_curve_destroy(tws_curve* c);

/* ---- verification suites ---------------------------------------------- */

typedef struct tws_report tws_report;

TWS_API size_t tws_suite_count(void);
TWS_API const char* tws_suite_name(size_t i);
TWS_API tws_status tws_verify_run(const char* suite, tws_report** out);
TWS_API size_t tws_report_size(const tws_report* r);
TWS_API const char* tws_report_check_name(const tws_report* r, size_t i);
TWS_API int tws_report_check_pass(const tws_report* r, size_t i);
TWS_API int tws_report_check_hard(const tws_report* r, size_t i);
TWS_API double tws_report_check_value(const tws_report* r, size_t i);
TWS_API double tws_report_check_reference(const tws_report* r, size_t i);
TWS_API double tws_report_check_tolerance(const tws_report* r, size_t i);
TWS_API const char* tws_report_check_detail(const tws_report* r, size_t i);
/* 1 when every hard check passed. */
TWS_API int tws_report_passed(const tws_report* r);
TWS_API void tws_report_destroy(tws_report* r);

/* ---- region verdicts -------------------------------------------------- */

typedef enum tws_verdict_method {
    TWS_VERDICT_P = 0,
    TWS_VERDICT_ETA,
    TWS_VERDICT_POLY,
    TWS_VERDICT_PADE,
    TWS_VERDICT_SPECTRA
} tws_verdict_method;

typedef enum tws_verdict_value { TWS_IN_OMEGA_MINUS = 0, TWS_IN_OMEGA_PLUS = 1, TWS_UNDECIDED = 2 } tws_verdict_value;

typedef struct tws_verdict_params {
    double x1, x2, p1, p2, T;
} tws_verdict_params;

typedef struct tws_verdict {
    double alpha;
    double beta;
    tws_verdict_value verdict;
    double margin;
    double matched_x1;
    int estimate_based;
    char source[32];
    char reason[128];
} tws_verdict;

/* `params` may be NULL for methods that take none. */
TWS_API tws_status tws_region_verdict(tws_verdict_method method, double c, double a, double b,
                                      const tws_verdict_params* params, tws_verdict* out);

#ifdef __cplusplus
}
#endif

#endif
