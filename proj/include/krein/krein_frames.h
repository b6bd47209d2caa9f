/*
 * krein_frames.h - C interface to the J-fusion frame library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a kf_status; on
 * failure kf_last_error() describes the problem for the calling thread.
 *
 * Matrices cross the boundary as row-major arrays of doubles. Values that
 * can be absent (bounds of an empty aggregate, gamma of a neutral subspace,
 * lambda of a failed range inclusion) are reported as NaN.
 */
#ifndef KREIN_FRAMES_H
#define KREIN_FRAMES_H

#include <stddef.h>
#include <stdint.h>

#if defined(KF_BUILDING_LIBRARY)
#  define KF_API __attribute__((visibility("default")))
#else
#  define KF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kf_status {
  KF_OK = 0,
  KF_ERR_INVALID_ARGUMENT,
  KF_ERR_DIMENSION_MISMATCH,
  KF_ERR_NOT_SYMMETRIC,
  KF_ERR_NOT_AN_INVOLUTION,
  KF_ERR_ZERO_SUBSPACE,
  KF_ERR_ALL_NEUTRAL,
  KF_ERR_NOT_UNIFORMLY_DEFINITE,
  KF_ERR_DEGENERATE_SUBSPACE,
  KF_ERR_INDEFINITE_MEMBER,
  KF_ERR_NON_POSITIVE_WEIGHT,
  KF_ERR_ZERO_MEMBER,
  KF_ERR_BAD_INDEX,
  KF_ERR_MISMATCHED_FAMILIES,
  KF_ERR_SINGULAR_FRAME_OPERATOR,
  KF_ERR_EMPTY_FAMILY,
  KF_ERR_INFEASIBLE_REQUEST,
  KF_ERR_INTERNAL
} kf_status;

typedef enum kf_subspace_class {
  KF_CLASS_UNIFORMLY_POSITIVE = 0,
  KF_CLASS_UNIFORMLY_NEGATIVE,
  KF_CLASS_NEUTRAL,
  KF_CLASS_DEGENERATE,
  KF_CLASS_INDEFINITE,
  KF_CLASS_ZERO
} kf_subspace_class;

typedef enum kf_variant {
  KF_VARIANT_LITERAL = 0, /* sum sigma_i v_i^2 pi_{J W_i} */
  KF_VARIANT_JSA = 1      /* sum sigma_i v_i^2 Q_{W_i}, J-selfadjoint */
} kf_variant;

typedef enum kf_projection_mode {
  KF_PROJECTION_AMBIENT = 0,
  KF_PROJECTION_J_ORTHOGONAL = 1
} kf_projection_mode;

typedef struct kf_space kf_space;
typedef struct kf_subspace kf_subspace;
typedef struct kf_family kf_family;

KF_API const char* kf_version(void);
KF_API const char* kf_status_name(kf_status status);
KF_API const char* kf_class_name(kf_subspace_class cls);
KF_API const char* kf_last_error(void);

/* ---- Krein space ------------------------------------------------------ */

KF_API kf_status kf_space_from_signs(const int* signs, size_t n, kf_space** out);
KF_API kf_status kf_space_from_matrix(const double* rows, size_t n, double tol,
                                      kf_space** out);
KF_API void kf_space_free(kf_space* space);
KF_API size_t kf_space_dimension(const kf_space* space);
KF_API kf_status kf_space_inertia(const kf_space* space, size_t* plus,
                                  size_t* minus);
KF_API kf_status kf_indefinite_inner(const kf_space* space, const double* x,
                                     const double* y, double* out);
KF_API kf_status kf_j_adjoint(const kf_space* space, const double* a,
                              double* out);
KF_API kf_status kf_j_selfadjoint_residual(const kf_space* space,
                                           const double* a, double* residual);

/* ---- Subspaces -------------------------------------------------------- */

/* `vectors` holds `count` vectors of length n, one after another. */
KF_API kf_status kf_subspace_span(const kf_space* space, const double* vectors,
                                  size_t count, double tol, kf_subspace** out);
KF_API void kf_subspace_free(kf_subspace* w);
KF_API size_t kf_subspace_dimension(const kf_subspace* w);
/* n x d, row-major. */
KF_API kf_status kf_subspace_basis(const kf_subspace* w, double* out);
KF_API kf_status kf_subspace_classify(const kf_subspace* w, double tol,
                                      kf_subspace_class* out);
/* d eigenvalues of B^T J B, ascending. */
KF_API kf_status kf_subspace_gram_eigenvalues(const kf_subspace* w,
                                              double* out);
KF_API kf_status kf_subspace_reduced_min_modulus(const kf_subspace* w,
                                                 double tol, double* out);
KF_API kf_status kf_subspace_cone_angle(const kf_subspace* w, double tol,
                                        double* out);
KF_API kf_status kf_subspace_projection(const kf_subspace* w, double* out);
KF_API kf_status kf_subspace_j_projection(const kf_subspace* w, double tol,
                                          double* out);
KF_API kf_status kf_subspace_isotropic_part(const kf_subspace* w, double tol,
                                            kf_subspace** out);
KF_API kf_status kf_subspace_deficiency_part(const kf_subspace* w, double tol,
                                             kf_subspace** out);
KF_API kf_status kf_subspace_sum(const kf_subspace* a, const kf_subspace* b,
                                 double tol, kf_subspace** out);
KF_API kf_status kf_subspace_intersection(const kf_subspace* a,
                                          const kf_subspace* b, double tol,
                                          kf_subspace** out);
KF_API kf_status kf_subspace_j_orthogonal(const kf_subspace* a,
                                          const kf_subspace* b, double tol,
                                          int* out);
/* sign is +1 or -1. */
KF_API kf_status kf_subspace_is_maximal(const kf_subspace* w, int sign,
                                        double tol, int* out);

/* ---- Families --------------------------------------------------------- */

KF_API kf_status kf_family_create(const kf_space* space,
                                  const kf_subspace* const* members,
                                  const double* weights, size_t count,
                                  double tol, kf_family** out);
KF_API void kf_family_free(kf_family* f);
KF_API size_t kf_family_size(const kf_family* f);
KF_API size_t kf_family_direct_sum_dimension(const kf_family* f);
/* `subspace` receives a new handle (may be NULL); sign is +1 or -1. */
KF_API kf_status kf_family_member(const kf_family* f, size_t index,
                                  kf_subspace** subspace, double* weight,
                                  int* sign);
KF_API kf_status kf_family_aggregate(const kf_family* f, int sign,
                                     kf_subspace** out);
/* n x D and D x n, D = kf_family_direct_sum_dimension. */
KF_API kf_status kf_family_synthesis(const kf_family* f, double* out);
KF_API kf_status kf_family_analysis_literal(const kf_family* f, double* out);
KF_API kf_status kf_family_frame_operator(const kf_family* f,
                                          kf_variant variant, double* out);
KF_API kf_status kf_family_partial_frame_operator(const kf_family* f,
                                                  const size_t* subset,
                                                  size_t count,
                                                  kf_variant variant,
                                                  double* out);

typedef struct kf_analysis_options {
  double tol;
  kf_projection_mode mode;
} kf_analysis_options;

typedef struct kf_frame_analysis {
  int is_j_fusion_frame;
  kf_subspace_class m_plus_class;
  kf_subspace_class m_minus_class;
  double a_plus, b_plus;   /* NaN unless M+ is uniformly positive */
  double a_minus, b_minus; /* B- <= A- < 0; NaN unless M- uniformly negative */
  int tight_plus, tight_minus;
  int parseval_on_span;
  int parseval;
  double alpha_plus, beta_plus, zeta;
  size_t modulus_active_count;
} kf_frame_analysis;

/* options may be NULL for the defaults (tol 1e-9, ambient projections).
 * Up to `capacity` indices of modulus-active members go to modulus_active,
 * which may be NULL. */
KF_API kf_status kf_family_analyze(const kf_family* f,
                                   const kf_analysis_options* options,
                                   kf_frame_analysis* out,
                                   size_t* modulus_active, size_t capacity);

KF_API kf_status kf_family_is_onb(const kf_family* f, double tol, int* out);
KF_API kf_status kf_family_is_disjoint(const kf_family* f, double tol, int* out);
KF_API kf_status kf_family_is_strictly_disjoint(const kf_family* f, double tol,
                                                int* out);
KF_API kf_status kf_family_combine(const kf_family* f1, const kf_family* f2,
                                   double tol, kf_family** out);
KF_API kf_status kf_family_cross_term(const kf_family* fx, const kf_family* fy,
                                      double tol, int* holds, double* residual);
KF_API kf_status kf_family_sum(const kf_family* fx, const kf_family* fy,
                               double tol, kf_family** out);

typedef struct kf_dual_diagnostics {
  double operator_residual; /* max |S_dual - S^-1| */
  double condition_number;  /* of S */
} kf_dual_diagnostics;

KF_API kf_status kf_family_canonical_dual(const kf_family* f, kf_variant variant,
                                          double tol, kf_family** out,
                                          kf_dual_diagnostics* diagnostics);

typedef struct kf_identity_report {
  double lhs_direct, rhs_direct;
  double lhs_projection, rhs_projection;
  double residual_direct, residual_projection, residual_forms;
  double operator_residual;
} kf_identity_report;

KF_API kf_status kf_family_identity_check(const kf_family* f,
                                          const size_t* subset, size_t count,
                                          const double* x, kf_variant variant,
                                          double tol, kf_identity_report* out);

typedef struct kf_bessel_report {
  int holds;
  double lower, upper; /* NaN when the form is not computed */
  kf_subspace_class deficiency_class;
  double deficiency_gamma;
  size_t dimension;
  size_t isotropic_dimension;
  int nonnegative;
} kf_bessel_report;

/* Members may be arbitrary nonzero subspaces. */
KF_API kf_status kf_bessel_check(const kf_space* space,
                                 const kf_subspace* const* members,
                                 const double* weights, size_t count,
                                 double tol, kf_bessel_report* out);

typedef struct kf_douglas_report {
  int range_inclusion;
  double lambda; /* NaN when no majorization constant exists */
  int factor_exists;
  int consistent;
  double factor_residual;
} kf_douglas_report;

/* a and b are n x n row-major. */
KF_API kf_status kf_douglas_check(size_t n, const double* a, const double* b,
                                  double tol, kf_douglas_report* out);

KF_API kf_status kf_random_family(const kf_space* space, size_t positive,
                                  size_t negative, const size_t* dims,
                                  size_t dims_count, uint64_t seed,
                                  double max_boost, int force_frame,
                                  kf_family** out);

#ifdef __cplusplus
}
#endif

#endif /* KREIN_FRAMES_H */
