/* C interface to the zero-point momentum library.
 *
 * Every call that can fail returns a zpm_status. Details of the last failure
 * on a context are available from zpm_last_error(). Strings returned by the
 * library are owned by the handle they came from and stay valid until the
 * next call on that handle or its destruction. All physical inputs are SI
 * except electric and magnetic fields, which are in Gaussian units. */
#ifndef ZPM_H
#define ZPM_H

#include <stddef.h>

#if defined(_WIN32)
#define ZPM_API __declspec(dllexport)
#else
#define ZPM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zpm_status {
  ZPM_OK = 0,
  ZPM_INVALID_ARGUMENT = 1,
  ZPM_DOMAIN = 2,
  ZPM_CONVERGENCE = 3,
  ZPM_IO = 4,
  ZPM_INTERNAL = 5
} zpm_status;

typedef struct zpm_context zpm_context;
typedef struct zpm_prediction zpm_prediction;

ZPM_API const char* zpm_version(void);
ZPM_API const char* zpm_status_string(zpm_status status);

ZPM_API zpm_status zpm_context_create(zpm_context** out);
ZPM_API void zpm_context_destroy(zpm_context* ctx);
/* Empty string when no error has occurred. */
ZPM_API const char* zpm_last_error(const zpm_context* ctx);

/* Regulator schedule for the brute-force constants: descending, in (0, 0.2],
 * at least two values. Clears cached constants. */
ZPM_API zpm_status zpm_set_eps_schedule(zpm_context* ctx, const double* eps, size_t n);
/* Relative quadrature tolerance of the brute-force constants (1e-14 .. 1e-4). */
ZPM_API zpm_status zpm_set_tolerance(zpm_context* ctx, double rel_tol);
/* Source of the constants feeding eta and the predictions:
 * "quadrature" (default): I0, I1, A, C, D by regulated quadrature, E = E1+E2+E3;
 * "trig": I0, I1, A, C, E1..E3 by trig reduction, D by regulated quadrature. */
ZPM_API zpm_status zpm_set_constant_source(zpm_context* ctx, const char* source);

/* ---- constants ---------------------------------------------------------- */

typedef struct zpm_integral {
  double value;
  double error_estimate;
} zpm_integral;

/* name: I0, I1, A, C, E1, E2, E3, or E (= E1 + E2 + E3). */
ZPM_API zpm_status zpm_constant_trig(zpm_context* ctx, const char* name, zpm_integral* out);
/* name: I0, I1, A, C, D, or E (the defining double integral of E). */
ZPM_API zpm_status zpm_constant_bruteforce(zpm_context* ctx, const char* name,
                                           zpm_integral* out);

typedef struct zpm_constant_set {
  double I0, I1, A, C, D, E;
} zpm_constant_set;

/* The constant set used by eta and the predictions (cached per context). */
ZPM_API zpm_status zpm_constants(zpm_context* ctx, zpm_constant_set* out);

typedef struct zpm_eta_report {
  double eta;
  double eta_published;
  double eta_rel_deviation;     /* (|eta| - published) / published */
  double D_implied_face_value;  /* from the printed magnitudes */
  double D_implied_signed;      /* from the signed constants */
  double D_quadrature;
  double discrepancy_face_value;
  double discrepancy_signed;
  double eta_with_quadrature_E; /* eta with E from its defining integral */
  double E_quadrature;
} zpm_eta_report;

ZPM_API zpm_status zpm_eta(zpm_context* ctx, zpm_eta_report* out);
/* eta for an explicit constant set; never fails. */
ZPM_API double zpm_eta_of(const zpm_constant_set* constants);

/* ---- frequency contour integrals ---------------------------------------- */

typedef struct zpm_freq_result {
  double closed_re, closed_im;
  double numeric_re, numeric_im;
  double error_estimate;
  double rel_error;
} zpm_freq_result;

/* kind: "transverse" or "one_longitudinal"; k, kp > 0; eps_base in [1e-6, 1e-2]. */
ZPM_API zpm_status zpm_freq_check(zpm_context* ctx, const char* kind, double k, double kp,
                                  double eps_base, zpm_freq_result* out);

/* ---- tensor assembly ---------------------------------------------------- */

ZPM_API zpm_status zpm_regularized_K(zpm_context* ctx, double a, double* out);

typedef struct zpm_born_breakdown {
  double contrib_0[3], contrib_1[3], contrib_2[3], total[3];
  double K_used;
} zpm_born_breakdown;

/* chi is row-major 3x3. hbar = 1. */
ZPM_API zpm_status zpm_second_born(zpm_context* ctx, double radius, double epsilon,
                                   const double chi[9], zpm_born_breakdown* out);

typedef struct zpm_vdw_mapping {
  double from_regularized_K, quoted, ratio;
} zpm_vdw_mapping;

ZPM_API void zpm_vdw_mapping_check(zpm_vdw_mapping* out);

/* ---- point dipole ------------------------------------------------------- */

typedef struct zpm_dipole_result {
  double alpha, alpha0, gamma;
  double kappa0;     /* 1/m */
  double omega0;     /* rad/s */
  double hbar_omega0_eV;
  double linewidth;  /* 1/m */
  double mass_shift; /* kg */
  double integral_numeric, integral_error, integral_narrow_line, integral_exact;
  double p_numeric[3], p_closed_form[3];
  double p_rel_deviation;
} zpm_dipole_result;

/* Pass NAN for gamma or hbar_omega0_eV to derive it from the other; if both
 * are given they must agree to 1e-9. v in m/s. */
ZPM_API zpm_status zpm_dipole(zpm_context* ctx, double alpha, double alpha0, double gamma,
                              double hbar_omega0_eV, const double v[3],
                              zpm_dipole_result* out);

/* ---- predictions -------------------------------------------------------- */

typedef struct zpm_sphere {
  double radius_m;
  double epsilon;
  double mass_density_kg_m3;
  int has_me_coupling;
  double me_coupling;
  int has_verdet_v0;
  double verdet_v0;
  int has_chirality_g;
  double chirality_g;
} zpm_sphere;

/* Fills the material fields of `sphere` from a JSON file; radius untouched. */
ZPM_API zpm_status zpm_load_material(zpm_context* ctx, const char* path, zpm_sphere* sphere);

ZPM_API zpm_status zpm_predict_me_sphere(zpm_context* ctx, const zpm_sphere* sphere,
                                         const double E0[3], const double B0[3],
                                         zpm_prediction** out);
ZPM_API zpm_status zpm_predict_moving_sphere(zpm_context* ctx, const zpm_sphere* sphere,
                                             const double v[3], zpm_prediction** out);
ZPM_API zpm_status zpm_predict_magneto_chiral(zpm_context* ctx, const zpm_sphere* sphere,
                                              const double B[3], zpm_prediction** out);
/* Cutoff momentum density with chi S0 along `direction`. */
ZPM_API zpm_status zpm_predict_feigel(zpm_context* ctx, double chi_s0, double epsilon,
                                      double mass_density_kg_m3, double cutoff_wavelength_m,
                                      const double direction[3], double mu,
                                      zpm_prediction** out);
/* mode 0: dimensional regularization, 1: cutoff at k_cut (1/m). */
ZPM_API zpm_status zpm_predict_first_born(zpm_context* ctx, const zpm_sphere* sphere,
                                          const double chi[9], int mode, double k_cut,
                                          double mu, zpm_prediction** out);
ZPM_API zpm_status zpm_prediction_replay(zpm_context* ctx, const zpm_prediction* p,
                                         zpm_prediction** out);
ZPM_API void zpm_prediction_destroy(zpm_prediction* p);

ZPM_API const char* zpm_prediction_model(const zpm_prediction* p);
ZPM_API void zpm_prediction_momentum(const zpm_prediction* p, double out[3]);
ZPM_API void zpm_prediction_velocity(const zpm_prediction* p, double out[3]);
ZPM_API double zpm_prediction_mass_shift(const zpm_prediction* p);
ZPM_API int zpm_prediction_probably_wrong(const zpm_prediction* p);
ZPM_API size_t zpm_prediction_warning_count(const zpm_prediction* p);
ZPM_API const char* zpm_prediction_warning(const zpm_prediction* p, size_t i);
ZPM_API size_t zpm_prediction_digest_count(const zpm_prediction* p);
/* Returns ZPM_INVALID_ARGUMENT when i is out of range. */
ZPM_API zpm_status zpm_prediction_digest_entry(const zpm_prediction* p, size_t i,
                                               const char** name, double* value,
                                               const char** source);

/* ---- empty vacuum ------------------------------------------------------- */

ZPM_API void zpm_empty_vacuum(double out[3]);
ZPM_API zpm_status zpm_empty_vacuum_grid(zpm_context* ctx, int n, double dk, double out[3]);

#ifdef __cplusplus
}
#endif

#endif
