#include "doctest.h"

#include <cmath>

#include "krein/subspace.hpp"
#include "support/builders.hpp"

using namespace krein;
using build::line;

namespace {

const double r3 = std::sqrt(3.0);

Subspace plane(const Space& s, std::vector<double> a, std::vector<double> b) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(a.size()), 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    m(static_cast<Eigen::Index>(i), 0) = a[i];
    m(static_cast<Eigen::Index>(i), 1) = b[i];
  }
  return span(s, m);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("span keeps orthonormal input and collapses dependent vectors") {
  const Space s = build::example_space();
  const Subspace w3 = line(s, {0, 1, 0});
  CHECK(w3.dimension() == 1);
  CHECK(max_abs(w3.basis() - Eigen::Vector3d(0, 1, 0)) == 0.0);

  CHECK(plane(s, {1, 0, 0}, {2, 0, 0}).dimension() == 1);

  const Subspace w4 = line(s, {1 / std::sqrt(2.0), 0, r3 / std::sqrt(2.0)});
  CHECK(max_abs(w4.basis() - Eigen::Vector3d(0.5, 0, r3 / 2)) < 1e-15);

  Eigen::MatrixXd wrong(2, 1);
  wrong << 1, 0;
  CHECK(code_of([&] { span(s, wrong); }) == ErrorCode::DimensionMismatch);
  CHECK(span(s, Eigen::MatrixXd::Zero(3, 2)).is_zero());
}

TEST_CASE("orthogonal projection examples") {
  const Space s = build::example_space();
  Eigen::Matrix3d e2 = Eigen::Matrix3d::Zero();
  e2(1, 1) = 1;
  CHECK(max_abs(orthogonal_projection(line(s, {0, 1, 0})) - e2) == 0.0);
  CHECK(max_abs(orthogonal_projection(Subspace(s))) == 0.0);
  const Eigen::Vector3d u(0.5, 0, r3 / 2);
  const Subspace w4 = line(s, {1 / std::sqrt(2.0), 0, r3 / std::sqrt(2.0)});
  CHECK(max_abs(orthogonal_projection(w4) - u * u.transpose()) < 1e-15);
}

TEST_CASE("gramian examples") {
  const Space s = build::example_space();
  const auto plus = gramian(plane(s, {1, 0, 0}, {0, 1, 0}));
  REQUIRE(plus.eigenvalues.size() == 2);
  CHECK(std::abs(plus.eigenvalues[0] - 1) < 1e-15);
  CHECK(std::abs(plus.eigenvalues[1] - 1) < 1e-15);
  CHECK(std::abs(*plus.gamma - 1) < 1e-15);

  const auto minus = gramian(line(s, {0.5, 0, r3 / 2}));
  CHECK(std::abs(minus.eigenvalues[0] + 0.5) < 1e-15);
  CHECK(std::abs(*minus.gamma - 0.5) < 1e-15);

  build::Rng rng(5);
  const Space h = build::signs_space({1, 1, 1, 1, 1});
  const auto any = gramian(span(h, build::gaussian(rng, 5, 3)));
  for (double l : any.eigenvalues) CHECK(std::abs(l - 1) < 1e-14);

  CHECK(code_of([&] { gramian(Subspace(s)); }) == ErrorCode::ZeroSubspace);
}

TEST_CASE("classify covers every class") {
  const Space s = build::example_space();
  CHECK(classify(line(s, {0.5, 0, r3 / 2})) == SubspaceClass::UniformlyNegative);
  CHECK(classify(line(s, {1, 0, 1})) == SubspaceClass::Neutral);
  CHECK(classify(plane(s, {1, 0, 0}, {0, 0, 1})) == SubspaceClass::Indefinite);
  CHECK(classify(plane(s, {1, 0, 1}, {0, 1, 0})) == SubspaceClass::Degenerate);
  CHECK(classify(plane(s, {1, 0, 0}, {0, 1, 0})) == SubspaceClass::UniformlyPositive);
  CHECK(classify(Subspace(s)) == SubspaceClass::Zero);
}

TEST_CASE("reduced minimum modulus examples") {
  const Space s = build::example_space();
  CHECK(std::abs(reduced_min_modulus(plane(s, {1, 0, 0}, {0, 1, 0})) - 1) < 1e-15);
  CHECK(std::abs(reduced_min_modulus(line(s, {0.5, 0, r3 / 2})) - 0.5) < 1e-15);
  CHECK(std::abs(reduced_min_modulus(plane(s, {1, 0, 0}, {0, 0, 1})) - 1) < 1e-15);
  CHECK(code_of([&] { reduced_min_modulus(line(s, {1, 0, 1})); }) ==
        ErrorCode::AllNeutral);
  CHECK(code_of([&] { reduced_min_modulus(Subspace(s)); }) == ErrorCode::ZeroSubspace);
}

TEST_CASE("cone angle examples") {
  const Space s = build::example_space();
  CHECK(std::abs(cone_angle(plane(s, {1, 0, 0}, {0, 1, 0})) - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(cone_angle(line(s, {0.5, 0, r3 / 2})) - (r3 + 1) / (2 * std::sqrt(2.0))) <
        1e-15);
  build::Rng rng(7);
  const Space h = build::signs_space({1, 1, 1, 1});
  CHECK(std::abs(cone_angle(span(h, build::gaussian(rng, 4, 2))) - 1 / std::sqrt(2.0)) <
        1e-15);
  CHECK(code_of([&] { cone_angle(line(s, {1, 0, 1})); }) ==
        ErrorCode::NotUniformlyDefinite);
}

TEST_CASE("j_projection examples") {
  const Space s = build::example_space();
  Eigen::Matrix3d e2 = Eigen::Matrix3d::Zero();
  e2(1, 1) = 1;
  CHECK(max_abs(j_projection(line(s, {0, 1, 0})) - e2) == 0.0);

  Eigen::Matrix3d q4;
  q4 << -0.5, 0, r3 / 2, 0, 0, 0, -r3 / 2, 0, 1.5;
  CHECK(max_abs(j_projection(line(s, {1 / std::sqrt(2.0), 0, r3 / std::sqrt(2.0)})) - q4) <
        1e-14);
  CHECK(code_of([&] { j_projection(line(s, {1, 0, 1})); }) ==
        ErrorCode::DegenerateSubspace);
}

TEST_CASE("isotropic and deficiency parts") {
  const Space s = build::example_space();
  const Subspace neutral = line(s, {1, 0, 1});
  CHECK(same_subspace(isotropic_part(neutral), neutral));
  CHECK(deficiency_part(neutral).is_zero());

  const Subspace mplus = plane(s, {1, 0, 0}, {0, 1, 0});
  CHECK(isotropic_part(mplus).is_zero());
  CHECK(same_subspace(deficiency_part(mplus), mplus));

  const Subspace m = plane(s, {1, 0, 1}, {0, 1, 0});
  CHECK(same_subspace(isotropic_part(m), neutral));
  CHECK(same_subspace(deficiency_part(m), line(s, {0, 1, 0})));
}

TEST_CASE("maximality and J-orthogonality") {
  const Space s = build::example_space();
  const Subspace mplus = plane(s, {1, 0, 0}, {0, 1, 0});
  const Subspace mminus = line(s, {0.5, 0, r3 / 2});
  CHECK(is_maximal_uniformly_definite(mplus, Sign::Positive));
  CHECK(is_maximal_uniformly_definite(mminus, Sign::Negative));
  CHECK_FALSE(is_maximal_uniformly_definite(line(s, {1, 0, 0}), Sign::Positive));
  CHECK_FALSE(is_maximal_uniformly_definite(mplus, Sign::Negative));

  const Space h = build::signs_space({1, 1});
  CHECK(is_maximal_uniformly_definite(Subspace(h), Sign::Negative));
  CHECK_FALSE(is_maximal_uniformly_definite(Subspace(h), Sign::Positive));

  CHECK(j_orthogonal(line(s, {1, 0, 0}), line(s, {0, 0, 1})));
  CHECK_FALSE(j_orthogonal(mplus, mminus));
  CHECK(std::abs(max_abs(mplus.basis().transpose() * s.symmetry() * mminus.basis()) - 0.5) <
        1e-15);
  CHECK(j_orthogonal(mplus, Subspace(s)));
}

TEST_CASE("sums and intersections") {
  const Space s = build::example_space();
  const Subspace e1 = line(s, {1, 0, 0}), e2 = line(s, {0, 1, 0}), e3 = line(s, {0, 0, 1});
  const Subspace e12 = plane(s, {1, 0, 0}, {0, 1, 0});
  CHECK(same_subspace(subspace_sum(e1, e2), e12));
  CHECK(same_subspace(subspace_sum(e12, e12), e12));
  CHECK(same_subspace(subspace_sum(line(s, {1, 1, 0}), line(s, {1, -1, 0})), e12));

  CHECK(same_subspace(subspace_intersection(e12, plane(s, {0, 1, 0}, {0, 0, 1})), e2));
  CHECK(subspace_intersection(e1, e3).is_zero());
  CHECK(same_subspace(subspace_intersection(e12, e12), e12));

  const Space other = build::signs_space({1, -1});
  CHECK(code_of([&] { subspace_sum(e1, line(other, {1, 0})); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("property: orthogonal projections are idempotent and symmetric") {
  build::Rng rng(29);
  for (int t = 0; t < 100; ++t) {
    const Space s = build::random_space(rng, build::uniform(rng, 1, 6),
                                        build::uniform(rng, 0, 6), t % 2 == 0);
    const auto n = static_cast<Eigen::Index>(s.dimension());
    const Subspace w = span(s, build::gaussian(rng, n, static_cast<Eigen::Index>(
                                                          build::uniform(rng, 1, n))));
    const Operator p = orthogonal_projection(w);
    CHECK(max_abs(p * p - p) <= 1e-12);
    CHECK(max_abs(p.transpose() - p) <= 1e-12);
    CHECK(max_abs(w.basis().transpose() * w.basis() -
                  Eigen::MatrixXd::Identity(w.basis().cols(), w.basis().cols())) <= 1e-10);
  }
}

TEST_CASE("property: J-orthogonal projections") {
  build::Rng rng(31);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const Space s = build::random_space(rng, build::uniform(rng, 1, 5),
                                        build::uniform(rng, 1, 5), t % 2 == 0);
    const auto n = static_cast<Eigen::Index>(s.dimension());
    const Subspace w = span(s, build::gaussian(rng, n, static_cast<Eigen::Index>(
                                                          build::uniform(rng, 1, n))));
    const auto g = gramian(w);
    if (std::abs(g.eigenvalues.front()) < 1e-3 ||
        std::abs(g.eigenvalues.back()) < 1e-3) {
      continue;
    }
    bool near_zero = false;
    for (double l : g.eigenvalues) near_zero = near_zero || std::abs(l) < 1e-3;
    if (near_zero) continue;
    ++checked;
    const Operator q = j_projection(w);
    CHECK(max_abs(q * q - q) <= 1e-9);
    CHECK(max_abs(j_adjoint(s, q) - q) <= 1e-9);
    CHECK(max_abs(q * w.basis() - w.basis()) <= 1e-9);
  }
  CHECK(checked > 50);

  // Q = pi exactly when J commutes with pi.
  const Space s = build::example_space();
  const Subspace e12 = plane(s, {1, 0, 0}, {0, 1, 0});
  CHECK(max_abs(j_projection(e12) - orthogonal_projection(e12)) <= 1e-15);
  const Subspace tilted = line(s, {0.5, 0, r3 / 2});
  const Operator pi = orthogonal_projection(tilted);
  CHECK(max_abs(s.symmetry() * pi - pi * s.symmetry()) > 0.1);
  CHECK(max_abs(j_projection(tilted) - pi) > 0.1);
}

TEST_CASE("property: classification ignores the spanning set") {
  build::Rng rng(37);
  for (int t = 0; t < 100; ++t) {
    const Space s = build::random_space(rng, build::uniform(rng, 1, 5),
                                        build::uniform(rng, 1, 5), t % 2 == 1);
    const auto n = static_cast<Eigen::Index>(s.dimension());
    const auto k = static_cast<Eigen::Index>(build::uniform(rng, 1, n));
    Eigen::MatrixXd v;
    switch (t % 3) {
      case 0: v = build::gaussian(rng, n, k); break;
      case 1: v = build::rotated_canonical(rng, s).first.leftCols(
                  std::min<Eigen::Index>(k, static_cast<Eigen::Index>(s.kappa_plus())));
              break;
      default: v = build::rotated_canonical(rng, s).second.leftCols(
                   std::min<Eigen::Index>(k, static_cast<Eigen::Index>(s.kappa_minus())));
    }
    // Shuffle, rescale and add a dependent column.
    Eigen::MatrixXd alt(n, v.cols() + 1);
    for (Eigen::Index c = 0; c < v.cols(); ++c)
      alt.col(c) = v.col(v.cols() - 1 - c) * build::uniform_real(rng, 0.1, 10.0);
    alt.col(v.cols()) = v * build::gaussian(rng, v.cols(), 1);
    CHECK(classify(span(s, v)) == classify(span(s, alt)));
  }
}

TEST_CASE("property: cone angle is decreasing in gamma") {
  double prev = cone_angle_from_modulus(1e-6);
  for (int i = 1; i <= 1000; ++i) {
    const double g = i / 1000.0;
    const double c = cone_angle_from_modulus(g);
    CHECK(c <= prev + 1e-15);
    CHECK(c >= 1 / std::sqrt(2.0) - 1e-15);
    CHECK(c < 1.0);
    prev = c;
  }
  CHECK(std::abs(cone_angle_from_modulus(1.0) - 1 / std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("property: isotropic and deficiency dimensions add up") {
  build::Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const std::size_t kp = build::uniform(rng, 2, 6), km = build::uniform(rng, 1, 6);
    const Space s = build::random_space(rng, kp, km, t % 2 == 0);
    const auto [p, q] = build::rotated_canonical(rng, s);
    const auto a = static_cast<Eigen::Index>(build::uniform(rng, 1, std::min(kp, km)));
    const auto b = static_cast<Eigen::Index>(build::uniform(rng, 0, kp - a));
    Eigen::MatrixXd v(static_cast<Eigen::Index>(s.dimension()), a + b);
    v.leftCols(a) = (p.leftCols(a) + q.leftCols(a)) / std::sqrt(2.0);
    v.rightCols(b) = p.middleCols(a, b);
    const Subspace m = span(s, v * build::random_orthogonal(rng, a + b));
    const Subspace iso = isotropic_part(m), def = deficiency_part(m);
    CHECK(iso.dimension() + def.dimension() == m.dimension());
    CHECK(iso.dimension() == static_cast<std::size_t>(a));
    CHECK(max_abs(iso.basis().transpose() * def.basis()) <= 1e-9);
  }
}

TEST_CASE("property: Gram spectrum does not depend on the orthonormal basis") {
  build::Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const Space s = build::random_space(rng, build::uniform(rng, 1, 5),
                                        build::uniform(rng, 1, 5), t % 2 == 0);
    const auto n = static_cast<Eigen::Index>(s.dimension());
    const Subspace w = span(s, build::gaussian(rng, n, static_cast<Eigen::Index>(
                                                          build::uniform(rng, 1, n))));
    const Subspace rotated = Subspace::from_orthonormal(
        s, w.basis() * build::random_orthogonal(rng, w.basis().cols()));
    const auto a = gramian(w).eigenvalues, b = gramian(rotated).eigenvalues;
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-9);
    // Independent check against the Jacobi oracle.
    const auto g = gram_matrix(w);
    const auto ref = oracle::jacobi_eigenvalues(build::rows(g));
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - ref[i]) <= 1e-12);
  }
}
