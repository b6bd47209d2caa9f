#pragma once

// Subspaces of a Krein space and their behaviour under the indefinite form.
//
// A subspace is stored through a Hilbert-orthonormal basis B (n x d), so
// pi = B B^T and the Gramian compression G = B^T J B are both one-liners and
// every spectrum below is independent of the particular basis chosen.

#include <optional>
#include <span>
#include <vector>

#include "krein/core.hpp"

namespace krein {

enum class SubspaceClass {
  UniformlyPositive,
  UniformlyNegative,
  Neutral,
  Degenerate,
  Indefinite,
  Zero,
};

const char* to_string(SubspaceClass c) noexcept;

class Subspace {
 public:
  /// The zero subspace (d = 0) of s.
  explicit Subspace(const Space& s);

  /// Adopts `basis` as is. Columns must be Hilbert-orthonormal within 1e-10.
  static Subspace from_orthonormal(const Space& s, Eigen::MatrixXd basis);

  const Space& space() const noexcept { return space_; }
  const Eigen::MatrixXd& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(basis_.cols());
  }
  bool is_zero() const noexcept { return basis_.cols() == 0; }

 private:
  Subspace(const Space& s, Eigen::MatrixXd basis)
      : space_(s), basis_(std::move(basis)) {}

  Space space_;
  Eigen::MatrixXd basis_;
};

struct GramSpectrum {
  std::vector<double> eigenvalues;  // ascending
  std::optional<double> gamma;      // absent when every eigenvalue is cut off
};

/// Span of the columns of `vectors`. A Hilbert-orthonormal input is kept
/// verbatim; anything else goes through an SVD and singular values at or
/// below tol * sigma_max are dropped.
Subspace span(const Space& s, const Eigen::MatrixXd& vectors,
              double tol = kRankCutoff);
Subspace span(const Space& s, std::span<const Vector> vectors,
              double tol = kRankCutoff);

Operator orthogonal_projection(const Subspace& w);

/// Gram compression B^T J B of w as a d x d matrix.
Eigen::MatrixXd gram_matrix(const Subspace& w);

/// Eigenvalues of the Gramian and gamma = min{|l| : |l| > cutoff}.
/// Throws ZeroSubspace.
GramSpectrum gramian(const Subspace& w, double cutoff = kDefaultTol);

SubspaceClass classify(const Subspace& w, double tol = kDefaultTol);

/// Throws ZeroSubspace or AllNeutral.
double reduced_min_modulus(const Subspace& w, double tol = kDefaultTol);

/// (1/sqrt2) (sqrt((1+a)/2) + sqrt((1-a)/2)) for a in (0, 1].
double cone_angle_from_modulus(double gamma);

/// Angle to the neutral cone. Throws NotUniformlyDefinite.
double cone_angle(const Subspace& w, double tol = kDefaultTol);

/// J-orthogonal projection Q = B G^-1 B^T J. Throws DegenerateSubspace.
Operator j_projection(const Subspace& w, double tol = kDefaultTol);

/// M0 = M cap M^[perp], spanned by Gramian eigenvectors with |l| <= tol.
Subspace isotropic_part(const Subspace& w, double tol = kDefaultTol);
/// M minus M0, spanned by Gramian eigenvectors with |l| > tol.
Subspace deficiency_part(const Subspace& w, double tol = kDefaultTol);

/// Uniformly definite of the given sign with dimension equal to the matching
/// inertia count of J. The zero subspace is maximal exactly when that count
/// is zero.
bool is_maximal_uniformly_definite(const Subspace& w, Sign sign,
                                   double tol = kDefaultTol);

/// max |B_a^T J B_b| <= tol.
bool j_orthogonal(const Subspace& a, const Subspace& b,
                  double tol = kDefaultTol);

Subspace subspace_sum(const Subspace& a, const Subspace& b,
                      double tol = kRankCutoff);
Subspace subspace_intersection(const Subspace& a, const Subspace& b,
                               double tol = kDefaultTol);

/// Hilbert-orthogonal projections agree within tol.
bool same_subspace(const Subspace& a, const Subspace& b,
                   double tol = kDefaultTol);

}  // namespace krein
