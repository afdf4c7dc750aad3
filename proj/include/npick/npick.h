/* C interface to the scaled interpolation and inner-function toolkit.
 *
 * All functions return an np_status code; NP_OK is 0. On failure the
 * thread-local message from np_last_error() describes what went wrong.
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with np_free_string(). Handles are opaque and must be released
 * with their matching *_free functions.
 */
#ifndef NPICK_H
#define NPICK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define NPICK_API __declspec(dllexport)
#else
#  define NPICK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct np_problem np_problem;
typedef struct np_parametrization np_parametrization;
typedef struct np_blaschke np_blaschke;

enum np_status {
  NP_OK = 0,
  NP_ERR_INVALID_ARGUMENT = 1,
  NP_ERR_BAD_INPUT = 2,
  NP_ERR_BAD_PARAMS = 3,
  NP_ERR_POLE_AT_POINT = 4,
  NP_ERR_LEVEL_OUT_OF_RANGE = 5,
  NP_ERR_ILL_CONDITIONED = 6,
  NP_ERR_NOT_STRICTLY_SOLVABLE = 7,
  NP_ERR_STEP_BLOWUP = 8,
  NP_ERR_BAD_WEIGHT = 9,
  NP_ERR_RESOLUTION_EXCEEDED = 10,
  NP_ERR_QUADRATURE_NON_CONVERGENT = 11,
  NP_ERR_NON_INTEGRABLE_DECLARATION = 12,
  NP_ERR_CONTOUR_OPEN = 13,
  NP_ERR_GRID_TOO_COARSE = 14,
  NP_ERR_DIVERGENCE = 15,
  NP_ERR_INTERNAL = 16,
};

NPICK_API const char* np_status_name(int status);
NPICK_API const char* np_last_error(void);
NPICK_API void np_free_string(char* s);

/* -- interpolation problems ---------------------------------------------- */

/* json: {"nodes": [[re,im],...], "targets": [[re,im],...]} */
NPICK_API int np_problem_parse(const char* json, np_problem** out);
NPICK_API void np_problem_free(np_problem* p);
NPICK_API int np_problem_size(const np_problem* p, int* out);

/* Feasibility report JSON with fields solvable, min_eig, optimal_norm,
 * scaled, margin. */
NPICK_API int np_solve(const np_problem* p, double tol, char** report_json);

/* -- parametrization of the solution set --------------------------------- */

NPICK_API int np_parametrization_build(const np_problem* p,
                                       np_parametrization** out);
NPICK_API void np_parametrization_free(np_parametrization* p);

/* out_pqrs = {P_re, P_im, Q_re, Q_im, R_re, R_im, S_re, S_im} */
NPICK_API int np_coefficients(const np_parametrization* p, double z_re,
                              double z_im, double out_pqrs[8]);
/* out_jet = coefficients followed by their z-derivatives (16 doubles). */
NPICK_API int np_coefficients_jet(const np_parametrization* p, double z_re,
                                  double z_im, double out_jet[16]);
NPICK_API int np_extremal(const np_parametrization* p, double gamma,
                          double z_re, double z_im, double out[2]);
NPICK_API int np_extremal_derivative(const np_parametrization* p, double gamma,
                                     double z_re, double z_im, double out[2]);
NPICK_API int np_solve_with_constant(const np_parametrization* p, double w_re,
                                     double w_im, double z_re, double z_im,
                                     double out[2]);
/* out = {center_re, center_im, radius} */
NPICK_API int np_vertevorrat(const np_parametrization* p, double z_re,
                             double z_im, double out[3]);

enum np_ratio {
  NP_RATIO_P_OVER_R = 0,
  NP_RATIO_Q_OVER_R = 1,
  NP_RATIO_S_OVER_R = 2,
  NP_RATIO_ONE_OVER_R = 3,
  NP_RATIO_PI_OVER_R2 = 4,
};
NPICK_API int np_coefficient_ratio(const np_parametrization* p, int which,
                                   double z_re, double z_im, double out[2]);

NPICK_API int np_average_extremal(const np_parametrization* p, double z_re,
                                  double z_im, int gamma_count, double out[2]);

enum np_tilde_variant {
  NP_TILDE_S_OVER_R = 0,
  NP_TILDE_ONE_OVER_R = 1,
};
NPICK_API int np_average_tilde(const np_parametrization* p, double z_re,
                               double z_im, double delta, int variant,
                               int gamma_count, double out[2]);

/* Writes values.csv, boundary.csv and vertevorrat.csv into the directory;
 * files_json receives {"values": path, "boundary": path, "vertevorrat": path}. */
NPICK_API int np_extremal_csv(const np_parametrization* p,
                              const char* directory, int gamma_count,
                              int z_count, uint64_t seed, char** files_json);

/* -- finite products ------------------------------------------------------ */

/* zeros_json: [[re,im],...] or {"zeros": [...], "generator": {...}} */
NPICK_API int np_blaschke_parse(const char* zeros_json, np_blaschke** out);
/* generator_json: {"kind":"exponential","per_annulus":M,"count":N,
 *                  "angle_rule":"fixed|equidistributed|random",
 *                  "theta0":t,"seed":s}
 * or {"kind":"power","exponent":p, ...}. */
NPICK_API int np_blaschke_generate(const char* generator_json, np_blaschke** out);
NPICK_API void np_blaschke_free(np_blaschke* b);
NPICK_API int np_blaschke_size(const np_blaschke* b, int* out);
NPICK_API int np_blaschke_zeros_json(const np_blaschke* b, char** json);
NPICK_API int np_blaschke_eval(const np_blaschke* b, double z_re, double z_im,
                               double out[2]);
NPICK_API int np_blaschke_derivative(const np_blaschke* b, double z_re,
                                     double z_im, double out[2]);
NPICK_API int np_blaschke_angular_derivative(const np_blaschke* b, double theta,
                                             double* out);

/* -- diagnostics ---------------------------------------------------------- */

/* spec_json selects the diagnostic:
 *   {"class":"balpha","alpha":0.5,"log":false}         weighted zero sum
 *   {"class":"bh","weight_alpha":0.5,"log":false}      concave-weight zero sum
 *   {"class":"exponential"}                            per-annulus counts
 *   {"class":"hardy","alpha":0.5}                      derivative norm
 *   {"class":"weakh1"}                                 weak-type diagnostic
 *   {"class":"carleson","alpha":0.5,"log":false,"tol":1e-4}  area integral
 * report_json receives the class report. */
NPICK_API int np_classify(const char* zeros_json, const char* spec_json,
                          char** report_json);

/* Level set {|B| = eps} with the box-normalized length estimate. */
NPICK_API int np_contour(const char* zeros_json, double eps, int resolution,
                         int carleson_levels, char** result_json);

/* spec_json: {"kind":"zeros", "generator":{...}} writes a zero set;
 * {"kind":"problem","nodes":{...generator...},"scale":s,"seed":n} writes a
 * scaled problem. */
NPICK_API int np_generate(const char* spec_json, char** out_json);

/* Named check suites: invariants, thm1a, thm1b, thm1c-demo, thm2-averaging,
 * lemmaD, lemma5, contour. all_pass is reflected in the report JSON. */
NPICK_API int np_verify(const char* recipe, uint64_t seed, int budget,
                        char** run_report_json);

#ifdef __cplusplus
}
#endif

#endif /* NPICK_H */
