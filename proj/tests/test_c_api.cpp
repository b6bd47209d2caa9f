#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "krein/krein_frames.h"

namespace {

const double r3 = std::sqrt(3.0);

struct Example {
  kf_space* space = nullptr;
  std::vector<kf_subspace*> members;
  kf_family* family = nullptr;

  Example() {
    const int signs[] = {1, 1, -1};
    REQUIRE(kf_space_from_signs(signs, 3, &space) == KF_OK);
    const double vectors[4][3] = {{-r3 / 2, -0.5, 0},
                                  {r3 / 2, -0.5, 0},
                                  {0, 1, 0},
                                  {1 / std::sqrt(2.0), 0, r3 / std::sqrt(2.0)}};
    for (const auto& v : vectors) {
      kf_subspace* w = nullptr;
      REQUIRE(kf_subspace_span(space, v, 1, 1e-10, &w) == KF_OK);
      members.push_back(w);
    }
    const double v = std::sqrt(2.0 / 3.0);
    const double weights[] = {v, v, v, 1.0};
    REQUIRE(kf_family_create(space, members.data(), weights, 4, 1e-9, &family) == KF_OK);
  }
  ~Example() {
    kf_family_free(family);
    for (auto* w : members) kf_subspace_free(w);
    kf_space_free(space);
  }
};

}  // namespace

TEST_CASE("version and names") {
  CHECK(std::string(kf_version()) == "1.0.0");
  CHECK(std::string(kf_status_name(KF_OK)) == "ok");
  CHECK(std::string(kf_status_name(KF_ERR_INDEFINITE_MEMBER)) == "IndefiniteMember");
  CHECK(std::string(kf_class_name(KF_CLASS_NEUTRAL)) == "Neutral");
}

TEST_CASE("space construction and errors") {
  kf_space* s = nullptr;
  const int bad[] = {1, 0};
  CHECK(kf_space_from_signs(bad, 2, &s) == KF_ERR_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(std::strlen(kf_last_error()) > 0);

  const double asym[] = {1, 0.5, 0, -1};
  CHECK(kf_space_from_matrix(asym, 2, 1e-9, &s) == KF_ERR_NOT_SYMMETRIC);
  const double twice[] = {2, 0, 0, 2};
  CHECK(kf_space_from_matrix(twice, 2, 1e-9, &s) == KF_ERR_NOT_AN_INVOLUTION);
  CHECK(kf_space_from_signs(nullptr, 2, &s) == KF_ERR_INVALID_ARGUMENT);

  const double swap[] = {0, 1, 1, 0};
  REQUIRE(kf_space_from_matrix(swap, 2, 1e-9, &s) == KF_OK);
  size_t plus = 0, minus = 0;
  CHECK(kf_space_inertia(s, &plus, &minus) == KF_OK);
  CHECK(plus == 1);
  CHECK(minus == 1);
  CHECK(kf_space_dimension(s) == 2);
  const double x[] = {1, 2}, y[] = {3, 4};
  double ip = 0;
  CHECK(kf_indefinite_inner(s, x, y, &ip) == KF_OK);
  CHECK(ip == 10.0);
  kf_space_free(s);
}

TEST_CASE("subspace queries through the C API") {
  const int signs[] = {1, 1, -1};
  kf_space* s = nullptr;
  REQUIRE(kf_space_from_signs(signs, 3, &s) == KF_OK);

  const double neutral[] = {1, 0, 1};
  kf_subspace* n = nullptr;
  REQUIRE(kf_subspace_span(s, neutral, 1, 1e-10, &n) == KF_OK);
  kf_subspace_class cls;
  CHECK(kf_subspace_classify(n, 1e-9, &cls) == KF_OK);
  CHECK(cls == KF_CLASS_NEUTRAL);
  double gamma = 0;
  CHECK(kf_subspace_reduced_min_modulus(n, 1e-9, &gamma) == KF_ERR_ALL_NEUTRAL);
  CHECK(kf_subspace_cone_angle(n, 1e-9, &gamma) == KF_ERR_NOT_UNIFORMLY_DEFINITE);
  double q[9];
  CHECK(kf_subspace_j_projection(n, 1e-9, q) == KF_ERR_DEGENERATE_SUBSPACE);

  const double w4[] = {1 / std::sqrt(2.0), 0, r3 / std::sqrt(2.0)};
  kf_subspace* w = nullptr;
  REQUIRE(kf_subspace_span(s, w4, 1, 1e-10, &w) == KF_OK);
  CHECK(kf_subspace_classify(w, 1e-9, &cls) == KF_OK);
  CHECK(cls == KF_CLASS_UNIFORMLY_NEGATIVE);
  CHECK(kf_subspace_reduced_min_modulus(w, 1e-9, &gamma) == KF_OK);
  CHECK(std::abs(gamma - 0.5) <= 1e-12);
  double eig = 0;
  CHECK(kf_subspace_gram_eigenvalues(w, &eig) == KF_OK);
  CHECK(std::abs(eig + 0.5) <= 1e-12);
  int maximal = 0;
  CHECK(kf_subspace_is_maximal(w, -1, 1e-9, &maximal) == KF_OK);
  CHECK(maximal == 1);
  CHECK(kf_subspace_is_maximal(w, 0, 1e-9, &maximal) == KF_ERR_INVALID_ARGUMENT);

  kf_subspace* sum = nullptr;
  CHECK(kf_subspace_sum(n, w, 1e-10, &sum) == KF_OK);
  CHECK(kf_subspace_dimension(sum) == 2);
  double basis[6];
  CHECK(kf_subspace_basis(sum, basis) == KF_OK);

  kf_subspace* zero = nullptr;
  const double z[] = {0, 0, 0};
  REQUIRE(kf_subspace_span(s, z, 1, 1e-10, &zero) == KF_OK);
  CHECK(kf_subspace_dimension(zero) == 0);
  CHECK(kf_subspace_classify(zero, 1e-9, &cls) == KF_OK);
  CHECK(cls == KF_CLASS_ZERO);
  CHECK(kf_subspace_gram_eigenvalues(zero, &eig) == KF_ERR_ZERO_SUBSPACE);

  kf_subspace_free(zero);
  kf_subspace_free(sum);
  kf_subspace_free(w);
  kf_subspace_free(n);
  kf_space_free(s);
}

TEST_CASE("golden family through the C API") {
  Example ex;
  CHECK(kf_family_size(ex.family) == 4);
  CHECK(kf_family_direct_sum_dimension(ex.family) == 4);

  kf_frame_analysis a;
  REQUIRE(kf_family_analyze(ex.family, nullptr, &a, nullptr, 0) == KF_OK);
  CHECK(a.is_j_fusion_frame == 1);
  CHECK(a.parseval == 1);
  CHECK(std::abs(a.a_plus - 1) <= 1e-9);
  CHECK(std::abs(a.b_minus + 1) <= 1e-9);
  CHECK(std::abs(a.alpha_plus - 1) <= 1e-12);
  CHECK(std::abs(a.beta_plus - 0.5) <= 1e-12);
  CHECK(std::abs(a.zeta - (3 + r3) / (2 * std::sqrt(2.0))) <= 1e-12);
  CHECK(a.modulus_active_count == 0);

  double lit[9], jsa[9], res = 0;
  REQUIRE(kf_family_frame_operator(ex.family, KF_VARIANT_LITERAL, lit) == KF_OK);
  REQUIRE(kf_family_frame_operator(ex.family, KF_VARIANT_JSA, jsa) == KF_OK);
  CHECK(std::abs(lit[2] - r3 / 4) <= 1e-14);
  CHECK(std::abs(jsa[6] - r3 / 2) <= 1e-14);
  CHECK(kf_j_selfadjoint_residual(ex.space, lit, &res) == KF_OK);
  CHECK(std::abs(res - r3 / 2) <= 1e-14);
  CHECK(kf_j_selfadjoint_residual(ex.space, jsa, &res) == KF_OK);
  CHECK(res <= 1e-12);

  const size_t subset[] = {3};
  double partial[9];
  CHECK(kf_family_partial_frame_operator(ex.family, subset, 1, KF_VARIANT_JSA, partial) ==
        KF_OK);
  const size_t bad[] = {9};
  CHECK(kf_family_partial_frame_operator(ex.family, bad, 1, KF_VARIANT_JSA, partial) ==
        KF_ERR_BAD_INDEX);

  int flag = -1;
  CHECK(kf_family_is_onb(ex.family, 1e-9, &flag) == KF_OK);
  CHECK(flag == 0);
  CHECK(kf_family_is_disjoint(ex.family, 1e-9, &flag) == KF_OK);
  CHECK(flag == 1);
  CHECK(kf_family_is_strictly_disjoint(ex.family, 1e-9, &flag) == KF_OK);
  CHECK(flag == 0);

  double weight = 0;
  int sign = 0;
  kf_subspace* m = nullptr;
  CHECK(kf_family_member(ex.family, 3, &m, &weight, &sign) == KF_OK);
  CHECK(sign == -1);
  CHECK(weight == 1.0);
  CHECK(kf_subspace_dimension(m) == 1);
  kf_subspace_free(m);
  CHECK(kf_family_member(ex.family, 4, nullptr, &weight, &sign) == KF_ERR_BAD_INDEX);

  const size_t pair[] = {0, 1};
  const double x[] = {1, 1, 1};
  kf_identity_report id;
  CHECK(kf_family_identity_check(ex.family, pair, 2, x, KF_VARIANT_JSA, 1e-9, &id) == KF_OK);
  CHECK(id.residual_direct <= 1e-9);
  CHECK(id.operator_residual <= 1e-9);

  kf_family* dual = nullptr;
  kf_dual_diagnostics diag;
  CHECK(kf_family_canonical_dual(ex.family, KF_VARIANT_JSA, 1e-9, &dual, &diag) == KF_OK);
  CHECK(kf_family_size(dual) == 4);
  CHECK(diag.condition_number > 1);
  kf_family_free(dual);

  int holds = 1;
  CHECK(kf_family_cross_term(ex.family, ex.family, 1e-9, &holds, &res) == KF_OK);
  CHECK(holds == 0);
}

TEST_CASE("family creation errors") {
  Example ex;
  kf_family* f = nullptr;
  const double zero_weight[] = {0.0};
  CHECK(kf_family_create(ex.space, ex.members.data(), zero_weight, 1, 1e-9, &f) ==
        KF_ERR_NON_POSITIVE_WEIGHT);
  REQUIRE(kf_family_create(ex.space, ex.members.data(), zero_weight, 0, 1e-9, &f) == KF_OK);
  CHECK(kf_family_size(f) == 0);
  kf_family_free(f);
  CHECK(kf_family_create(nullptr, ex.members.data(), zero_weight, 1, 1e-9, &f) ==
        KF_ERR_INVALID_ARGUMENT);

  const double neutral[] = {1, 0, 1};
  kf_subspace* n = nullptr;
  REQUIRE(kf_subspace_span(ex.space, neutral, 1, 1e-10, &n) == KF_OK);
  const kf_subspace* one[] = {n};
  const double w1[] = {1.0};
  CHECK(kf_family_create(ex.space, one, w1, 1, 1e-9, &f) == KF_ERR_INDEFINITE_MEMBER);
  CHECK(std::string(kf_last_error()).size() > 0);

  kf_bessel_report b;
  CHECK(kf_bessel_check(ex.space, one, w1, 1, 1e-9, &b) == KF_OK);
  CHECK(b.holds == 0);
  CHECK(b.deficiency_class == KF_CLASS_ZERO);
  CHECK(std::isnan(b.lower));
  CHECK(std::isnan(b.deficiency_gamma));
  kf_subspace_free(n);

  const int other_signs[] = {1, -1};
  kf_space* other = nullptr;
  REQUIRE(kf_space_from_signs(other_signs, 2, &other) == KF_OK);
  CHECK(kf_family_create(other, ex.members.data(), w1, 1, 1e-9, &f) ==
        KF_ERR_DIMENSION_MISMATCH);
  kf_space_free(other);
}

TEST_CASE("absent values are NaN") {
  const int signs[] = {1, 1};
  kf_space* h = nullptr;
  REQUIRE(kf_space_from_signs(signs, 2, &h) == KF_OK);
  const size_t dims[] = {2};
  kf_family* f = nullptr;
  REQUIRE(kf_random_family(h, 1, 0, dims, 1, 3, 0.0, 1, &f) == KF_OK);
  kf_frame_analysis a;
  REQUIRE(kf_family_analyze(f, nullptr, &a, nullptr, 0) == KF_OK);
  CHECK(a.is_j_fusion_frame == 1);
  CHECK(std::isnan(a.a_minus));
  CHECK(std::isnan(a.b_minus));
  CHECK(std::isfinite(a.a_plus));
  CHECK(a.m_minus_class == KF_CLASS_ZERO);
  kf_family_free(f);

  const size_t bad_dims[] = {3};
  CHECK(kf_random_family(h, 1, 0, bad_dims, 1, 3, 0.0, 1, &f) == KF_ERR_INFEASIBLE_REQUEST);
  kf_space_free(h);

  const double a2[] = {1, 0, 0, 0}, b2[] = {0, 0, 0, 1};
  kf_douglas_report d;
  CHECK(kf_douglas_check(2, a2, b2, 1e-9, &d) == KF_OK);
  CHECK(d.range_inclusion == 0);
  CHECK(std::isnan(d.lambda));
  CHECK(d.consistent == 1);
  CHECK(kf_douglas_check(2, b2, b2, 1e-9, &d) == KF_OK);
  CHECK(std::abs(d.lambda - 1) <= 1e-12);
  CHECK(kf_douglas_check(0, a2, b2, 1e-9, &d) == KF_ERR_DIMENSION_MISMATCH);
}

TEST_CASE("random families are deterministic through the C API") {
  const int signs[] = {1, -1, 1};
  kf_space* s = nullptr;
  REQUIRE(kf_space_from_signs(signs, 3, &s) == KF_OK);
  const size_t dims[] = {2, 1};
  kf_family *a = nullptr, *b = nullptr;
  REQUIRE(kf_random_family(s, 1, 1, dims, 2, 99, 0.5, 1, &a) == KF_OK);
  REQUIRE(kf_random_family(s, 1, 1, dims, 2, 99, 0.5, 1, &b) == KF_OK);
  double sa[9], sb[9];
  REQUIRE(kf_family_frame_operator(a, KF_VARIANT_JSA, sa) == KF_OK);
  REQUIRE(kf_family_frame_operator(b, KF_VARIANT_JSA, sb) == KF_OK);
  CHECK(std::memcmp(sa, sb, sizeof sa) == 0);
  kf_family* u = nullptr;
  CHECK(kf_family_combine(a, b, 1e-9, &u) == KF_OK);
  CHECK(kf_family_size(u) == 4);
  kf_family* sum = nullptr;
  CHECK(kf_family_sum(a, b, 1e-9, &sum) == KF_OK);
  kf_family_free(sum);
  kf_family_free(u);
  kf_family_free(b);
  kf_family_free(a);
  kf_space_free(s);
}
