#include "krein/krein_frames.h"

#include <cmath>
#include <exception>
#include <limits>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "krein/fusion.hpp"
#include "krein/generator.hpp"
#include "krein/subspace.hpp"
#include "krein/theorems.hpp"

struct kf_space {
  krein::Space value;
};

struct kf_subspace {
  krein::Subspace value;
};

struct kf_family {
  krein::Family value;
};

namespace {

using RowMajor =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

thread_local std::string last_error;

kf_status status_of(krein::ErrorCode code) {
  // ErrorCode and kf_status share ordering; KF_OK occupies slot zero.
  return static_cast<kf_status>(static_cast<int>(code) + 1);
}

template <class F>
kf_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return KF_OK;
  } catch (const krein::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return KF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KF_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return KF_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw krein::Error(krein::ErrorCode::InvalidArgument, what);
}

constexpr double nan() { return std::numeric_limits<double>::quiet_NaN(); }

double or_nan(const std::optional<double>& v) { return v ? *v : nan(); }

Eigen::MatrixXd read_matrix(const double* data, std::size_t rows,
                            std::size_t cols) {
  require(data != nullptr || rows * cols == 0, "null matrix");
  return Eigen::Map<const RowMajor>(data, static_cast<Eigen::Index>(rows),
                                    static_cast<Eigen::Index>(cols));
}

void write_matrix(const Eigen::MatrixXd& m, double* out) {
  require(out != nullptr || m.size() == 0, "null output buffer");
  Eigen::Map<RowMajor>(out, m.rows(), m.cols()) = m;
}

krein::Vector read_vector(const kf_space* s, const double* x) {
  require(x != nullptr, "null vector");
  const auto n = static_cast<Eigen::Index>(s->value.dimension());
  return Eigen::Map<const Eigen::VectorXd>(x, n);
}

kf_subspace_class class_of(krein::SubspaceClass c) {
  switch (c) {
    case krein::SubspaceClass::UniformlyPositive: return KF_CLASS_UNIFORMLY_POSITIVE;
    case krein::SubspaceClass::UniformlyNegative: return KF_CLASS_UNIFORMLY_NEGATIVE;
    case krein::SubspaceClass::Neutral: return KF_CLASS_NEUTRAL;
    case krein::SubspaceClass::Degenerate: return KF_CLASS_DEGENERATE;
    case krein::SubspaceClass::Indefinite: return KF_CLASS_INDEFINITE;
    case krein::SubspaceClass::Zero: return KF_CLASS_ZERO;
  }
  return KF_CLASS_ZERO;
}

krein::FrameVariant variant_of(kf_variant v) {
  require(v == KF_VARIANT_LITERAL || v == KF_VARIANT_JSA, "unknown variant");
  return v == KF_VARIANT_JSA ? krein::FrameVariant::JSelfAdjoint
                             : krein::FrameVariant::Literal;
}

krein::Sign sign_of(int sign) {
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  return sign == 1 ? krein::Sign::Positive : krein::Sign::Negative;
}

std::vector<std::pair<krein::Subspace, double>> read_members(
    const kf_space* space, const kf_subspace* const* members,
    const double* weights, std::size_t count) {
  require(space != nullptr, "null space");
  require(count == 0 || (members != nullptr && weights != nullptr),
          "null member arrays");
  std::vector<std::pair<krein::Subspace, double>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    require(members[i] != nullptr, "null member");
    if (!members[i]->value.space().same_as(space->value)) {
      throw krein::Error(krein::ErrorCode::DimensionMismatch,
                         "member " + std::to_string(i) +
                             " belongs to a different space");
    }
    out.emplace_back(members[i]->value, weights[i]);
  }
  return out;
}

std::vector<std::size_t> read_indices(const std::size_t* subset,
                                      std::size_t count) {
  require(subset != nullptr || count == 0, "null subset");
  return std::vector<std::size_t>(subset, subset + count);
}

template <class T, class... Args>
void emit(T** out, Args&&... args) {
  require(out != nullptr, "null output handle");
  *out = new T{std::forward<Args>(args)...};
}

}  // namespace

extern "C" {

const char* kf_version(void) { return "1.0.0"; }

const char* kf_status_name(kf_status status) {
  if (status == KF_OK) return "ok";
  if (status == KF_ERR_INTERNAL) return "internal";
  if (status > KF_OK && status < KF_ERR_INTERNAL) {
    return krein::to_string(
        static_cast<krein::ErrorCode>(static_cast<int>(status) - 1));
  }
  return "unknown";
}

const char* kf_class_name(kf_subspace_class cls) {
  switch (cls) {
    case KF_CLASS_UNIFORMLY_POSITIVE:
      return krein::to_string(krein::SubspaceClass::UniformlyPositive);
    case KF_CLASS_UNIFORMLY_NEGATIVE:
      return krein::to_string(krein::SubspaceClass::UniformlyNegative);
    case KF_CLASS_NEUTRAL: return krein::to_string(krein::SubspaceClass::Neutral);
    case KF_CLASS_DEGENERATE: return krein::to_string(krein::SubspaceClass::Degenerate);
    case KF_CLASS_INDEFINITE: return krein::to_string(krein::SubspaceClass::Indefinite);
    case KF_CLASS_ZERO: return krein::to_string(krein::SubspaceClass::Zero);
  }
  return "unknown";
}

const char* kf_last_error(void) { return last_error.c_str(); }

// ---- space ---------------------------------------------------------------

kf_status kf_space_from_signs(const int* signs, size_t n, kf_space** out) {
  return guarded([&] {
    require(signs != nullptr || n == 0, "null signs");
    emit(out, krein::make_space(std::span<const int>(signs, n)));
  });
}

kf_status kf_space_from_matrix(const double* rows, size_t n, double tol,
                               kf_space** out) {
  return guarded([&] { emit(out, krein::make_space(read_matrix(rows, n, n), tol)); });
}

void kf_space_free(kf_space* space) { delete space; }

size_t kf_space_dimension(const kf_space* space) {
  return space ? space->value.dimension() : 0;
}

kf_status kf_space_inertia(const kf_space* space, size_t* plus, size_t* minus) {
  return guarded([&] {
    require(space && plus && minus, "null argument");
    *plus = space->value.kappa_plus();
    *minus = space->value.kappa_minus();
  });
}

kf_status kf_indefinite_inner(const kf_space* space, const double* x,
                              const double* y, double* out) {
  return guarded([&] {
    require(space && out, "null argument");
    *out = krein::indefinite_inner(space->value, read_vector(space, x),
                                   read_vector(space, y));
  });
}

kf_status kf_j_adjoint(const kf_space* space, const double* a, double* out) {
  return guarded([&] {
    require(space != nullptr, "null space");
    const std::size_t n = space->value.dimension();
    write_matrix(krein::j_adjoint(space->value, read_matrix(a, n, n)), out);
  });
}

kf_status kf_j_selfadjoint_residual(const kf_space* space, const double* a,
                                    double* residual) {
  return guarded([&] {
    require(space && residual, "null argument");
    const std::size_t n = space->value.dimension();
    *residual = krein::j_selfadjoint_residual(space->value, read_matrix(a, n, n));
  });
}

// ---- subspaces -----------------------------------------------------------

kf_status kf_subspace_span(const kf_space* space, const double* vectors,
                           size_t count, double tol, kf_subspace** out) {
  return guarded([&] {
    require(space != nullptr, "null space");
    const std::size_t n = space->value.dimension();
    // count vectors of length n back to back form an n x count column-major block.
    require(vectors != nullptr || count == 0, "null vectors");
    const Eigen::MatrixXd cols = Eigen::Map<const Eigen::MatrixXd>(
        vectors, static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(count));
    emit(out, krein::span(space->value, cols, tol));
  });
}

void kf_subspace_free(kf_subspace* w) { delete w; }

size_t kf_subspace_dimension(const kf_subspace* w) {
  return w ? w->value.dimension() : 0;
}

kf_status kf_subspace_basis(const kf_subspace* w, double* out) {
  return guarded([&] {
    require(w != nullptr, "null subspace");
    write_matrix(w->value.basis(), out);
  });
}

kf_status kf_subspace_classify(const kf_subspace* w, double tol,
                               kf_subspace_class* out) {
  return guarded([&] {
    require(w && out, "null argument");
    *out = class_of(krein::classify(w->value, tol));
  });
}

kf_status kf_subspace_gram_eigenvalues(const kf_subspace* w, double* out) {
  return guarded([&] {
    require(w != nullptr, "null subspace");
    const auto spectrum = krein::gramian(w->value);
    require(out != nullptr, "null output buffer");
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i)
      out[i] = spectrum.eigenvalues[i];
  });
}

kf_status kf_subspace_reduced_min_modulus(const kf_subspace* w, double tol,
                                          double* out) {
  return guarded([&] {
    require(w && out, "null argument");
    *out = krein::reduced_min_modulus(w->value, tol);
  });
}

kf_status kf_subspace_cone_angle(const kf_subspace* w, double tol, double* out) {
  return guarded([&] {
    require(w && out, "null argument");
    *out = krein::cone_angle(w->value, tol);
  });
}

kf_status kf_subspace_projection(const kf_subspace* w, double* out) {
  return guarded([&] {
    require(w != nullptr, "null subspace");
    write_matrix(krein::orthogonal_projection(w->value), out);
  });
}

kf_status kf_subspace_j_projection(const kf_subspace* w, double tol,
                                   double* out) {
  return guarded([&] {
    require(w != nullptr, "null subspace");
    write_matrix(krein::j_projection(w->value, tol), out);
  });
}

kf_status kf_subspace_isotropic_part(const kf_subspace* w, double tol,
                                     kf_subspace** out) {
  return guarded([&] {
    require(w != nullptr, "null subspace");
    emit(out, krein::isotropic_part(w->value, tol));
  });
}

kf_status kf_subspace_deficiency_part(const kf_subspace* w, double tol,
                                      kf_subspace** out) {
  return guarded([&] {
    require(w != nullptr, "null subspace");
    emit(out, krein::deficiency_part(w->value, tol));
  });
}

kf_status kf_subspace_sum(const kf_subspace* a, const kf_subspace* b,
                          double tol, kf_subspace** out) {
  return guarded([&] {
    require(a && b, "null subspace");
    emit(out, krein::subspace_sum(a->value, b->value, tol));
  });
}

kf_status kf_subspace_intersection(const kf_subspace* a, const kf_subspace* b,
                                   double tol, kf_subspace** out) {
  return guarded([&] {
    require(a && b, "null subspace");
    emit(out, krein::subspace_intersection(a->value, b->value, tol));
  });
}

kf_status kf_subspace_j_orthogonal(const kf_subspace* a, const kf_subspace* b,
                                   double tol, int* out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = krein::j_orthogonal(a->value, b->value, tol) ? 1 : 0;
  });
}

kf_status kf_subspace_is_maximal(const kf_subspace* w, int sign, double tol,
                                 int* out) {
  return guarded([&] {
    require(w && out, "null argument");
    *out = krein::is_maximal_uniformly_definite(w->value, sign_of(sign), tol);
  });
}

// ---- families ------------------------------------------------------------

kf_status kf_family_create(const kf_space* space,
                           const kf_subspace* const* members,
                           const double* weights, size_t count, double tol,
                           kf_family** out) {
  return guarded([&] {
    auto list = read_members(space, members, weights, count);
    emit(out, krein::make_family(space->value, list, tol));
  });
}

void kf_family_free(kf_family* f) { delete f; }

size_t kf_family_size(const kf_family* f) { return f ? f->value.size() : 0; }

size_t kf_family_direct_sum_dimension(const kf_family* f) {
  return f ? f->value.direct_sum_dimension() : 0;
}

kf_status kf_family_member(const kf_family* f, size_t index,
                           kf_subspace** subspace, double* weight, int* sign) {
  return guarded([&] {
    require(f != nullptr, "null family");
    if (index >= f->value.size()) {
      throw krein::Error(krein::ErrorCode::BadIndex,
                         "member index " + std::to_string(index) +
                             " out of range");
    }
    const krein::Member& m = f->value[index];
    if (weight) *weight = m.weight;
    if (sign) *sign = krein::to_int(m.sign);
    if (subspace) emit(subspace, m.subspace);
  });
}

kf_status kf_family_aggregate(const kf_family* f, int sign, kf_subspace** out) {
  return guarded([&] {
    require(f != nullptr, "null family");
    emit(out, f->value.aggregate(sign_of(sign)));
  });
}

kf_status kf_family_synthesis(const kf_family* f, double* out) {
  return guarded([&] {
    require(f != nullptr, "null family");
    write_matrix(krein::synthesis_matrix(f->value), out);
  });
}

kf_status kf_family_analysis_literal(const kf_family* f, double* out) {
  return guarded([&] {
    require(f != nullptr, "null family");
    write_matrix(krein::analysis_literal_matrix(f->value), out);
  });
}

kf_status kf_family_frame_operator(const kf_family* f, kf_variant variant,
                                   double* out) {
  return guarded([&] {
    require(f != nullptr, "null family");
    write_matrix(krein::frame_operator(f->value, variant_of(variant)), out);
  });
}

kf_status kf_family_partial_frame_operator(const kf_family* f,
                                           const size_t* subset, size_t count,
                                           kf_variant variant, double* out) {
  return guarded([&] {
    require(f != nullptr, "null family");
    write_matrix(krein::partial_frame_operator(
                     f->value, read_indices(subset, count), variant_of(variant)),
                 out);
  });
}

kf_status kf_family_analyze(const kf_family* f,
                            const kf_analysis_options* options,
                            kf_frame_analysis* out, size_t* modulus_active,
                            size_t capacity) {
  return guarded([&] {
    require(f && out, "null argument");
    krein::AnalysisOptions opts;
    if (options) {
      opts.tol = options->tol;
      require(options->mode == KF_PROJECTION_AMBIENT ||
                  options->mode == KF_PROJECTION_J_ORTHOGONAL,
              "unknown projection mode");
      opts.mode = options->mode == KF_PROJECTION_J_ORTHOGONAL
                      ? krein::ProjectionMode::JOrthogonal
                      : krein::ProjectionMode::Ambient;
    }
    const krein::FrameAnalysis a = krein::analyze(f->value, opts);
    kf_frame_analysis r{};
    r.is_j_fusion_frame = a.is_j_fusion_frame;
    r.m_plus_class = class_of(a.m_plus_class);
    r.m_minus_class = class_of(a.m_minus_class);
    r.a_plus = a.plus ? a.plus->lower : nan();
    r.b_plus = a.plus ? a.plus->upper : nan();
    r.a_minus = a.minus ? a.minus->lower : nan();
    r.b_minus = a.minus ? a.minus->upper : nan();
    r.tight_plus = a.tight_plus;
    r.tight_minus = a.tight_minus;
    r.parseval_on_span = a.parseval_on_span;
    r.parseval = a.parseval;
    r.alpha_plus = or_nan(a.alpha_plus);
    r.beta_plus = or_nan(a.beta_plus);
    r.zeta = or_nan(a.zeta);
    r.modulus_active_count = a.modulus_active.size();
    if (modulus_active) {
      for (std::size_t i = 0; i < a.modulus_active.size() && i < capacity; ++i)
        modulus_active[i] = a.modulus_active[i];
    }
    *out = r;
  });
}

kf_status kf_family_is_onb(const kf_family* f, double tol, int* out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = krein::is_onb_of_subspaces(f->value, tol);
  });
}

kf_status kf_family_is_disjoint(const kf_family* f, double tol, int* out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = krein::is_disjoint(f->value, tol);
  });
}

kf_status kf_family_is_strictly_disjoint(const kf_family* f, double tol,
                                         int* out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = krein::is_strictly_disjoint(f->value, tol);
  });
}

kf_status kf_family_combine(const kf_family* f1, const kf_family* f2,
                            double tol, kf_family** out) {
  return guarded([&] {
    require(f1 && f2, "null family");
    krein::AnalysisOptions opts;
    opts.tol = tol;
    emit(out, krein::combine(f1->value, f2->value, opts).family);
  });
}

kf_status kf_family_cross_term(const kf_family* fx, const kf_family* fy,
                               double tol, int* holds, double* residual) {
  return guarded([&] {
    require(fx && fy, "null family");
    const double r = krein::cross_term_residual(fx->value, fy->value, tol);
    if (residual) *residual = r;
    if (holds) *holds = krein::cross_term_condition(fx->value, fy->value, tol);
  });
}

kf_status kf_family_sum(const kf_family* fx, const kf_family* fy, double tol,
                        kf_family** out) {
  return guarded([&] {
    require(fx && fy, "null family");
    emit(out, krein::sum_family(fx->value, fy->value, tol));
  });
}

kf_status kf_family_canonical_dual(const kf_family* f, kf_variant variant,
                                   double tol, kf_family** out,
                                   kf_dual_diagnostics* diagnostics) {
  return guarded([&] {
    require(f != nullptr, "null family");
    krein::DualResult d = krein::canonical_dual(f->value, variant_of(variant), tol);
    if (diagnostics) {
      diagnostics->operator_residual = d.operator_residual;
      diagnostics->condition_number = d.condition_number;
    }
    if (out) emit(out, std::move(d.dual));
  });
}

kf_status kf_family_identity_check(const kf_family* f, const size_t* subset,
                                   size_t count, const double* x,
                                   kf_variant variant, double tol,
                                   kf_identity_report* out) {
  return guarded([&] {
    require(f && out, "null argument");
    kf_space view{f->value.space()};
    const krein::IdentityReport r =
        krein::identity_check(f->value, read_indices(subset, count),
                              read_vector(&view, x), variant_of(variant), tol);
    out->lhs_direct = r.lhs_direct;
    out->rhs_direct = r.rhs_direct;
    out->lhs_projection = r.lhs_projection;
    out->rhs_projection = r.rhs_projection;
    out->residual_direct = r.residual_direct;
    out->residual_projection = r.residual_projection;
    out->residual_forms = r.residual_forms;
    out->operator_residual = r.operator_residual;
  });
}

kf_status kf_bessel_check(const kf_space* space,
                          const kf_subspace* const* members,
                          const double* weights, size_t count, double tol,
                          kf_bessel_report* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto list = read_members(space, members, weights, count);
    const krein::BesselReport r =
        krein::bessel_inequality_check(space->value, list, tol);
    out->holds = r.holds;
    out->lower = or_nan(r.lower);
    out->upper = or_nan(r.upper);
    out->deficiency_class = class_of(r.deficiency_class);
    out->deficiency_gamma = or_nan(r.deficiency_gamma);
    out->dimension = r.dimension;
    out->isotropic_dimension = r.isotropic_dimension;
    out->nonnegative = r.nonnegative;
  });
}

kf_status kf_douglas_check(size_t n, const double* a, const double* b,
                           double tol, kf_douglas_report* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const krein::DouglasReport r =
        krein::douglas_check(read_matrix(a, n, n), read_matrix(b, n, n), tol);
    out->range_inclusion = r.range_inclusion;
    out->lambda = or_nan(r.lambda);
    out->factor_exists = r.factor_exists;
    out->consistent = r.consistent;
    out->factor_residual = r.factor_residual;
  });
}

kf_status kf_random_family(const kf_space* space, size_t positive,
                           size_t negative, const size_t* dims,
                           size_t dims_count, uint64_t seed, double max_boost,
                           int force_frame, kf_family** out) {
  return guarded([&] {
    require(space != nullptr, "null space");
    krein::RandomFamilyOptions opts;
    opts.max_boost = max_boost;
    opts.force_frame = force_frame != 0;
    emit(out, krein::random_family(space->value, positive, negative,
                                   read_indices(dims, dims_count), seed, opts));
  });
}

}  // extern "C"
