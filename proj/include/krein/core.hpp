#pragma once

// Finite-dimensional Krein space kernel: the fundamental symmetry J, the
// indefinite form [x, y] = <Jx, y> and J-adjoints A# = J A^T J.
//
// All matrices are dense real Eigen types. The associated Hilbert metric is
// the Euclidean one, so Hilbert norms and orthogonality are the usual ones.

#include <memory>
#include <span>

#include <Eigen/Dense>

#include "krein/error.hpp"

namespace krein {

using Vector = Eigen::VectorXd;
using Operator = Eigen::MatrixXd;

/// Default tolerance of every boolean predicate.
inline constexpr double kDefaultTol = 1e-9;
/// Relative singular-value cutoff used when building subspace bases.
inline constexpr double kRankCutoff = 1e-10;

enum class Sign : int { Positive = 1, Negative = -1 };

inline int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// Max-absolute-entry norm, the fixed matrix norm of all residual checks.
double max_abs(const Eigen::Ref<const Eigen::MatrixXd>& m);

/// A Krein space K = R^n equipped with a fundamental symmetry J.
///
/// Cheap to copy; the underlying data is shared and immutable.
class Space {
 public:
  std::size_t dimension() const noexcept;
  const Eigen::MatrixXd& symmetry() const noexcept;
  std::size_t kappa_plus() const noexcept;
  std::size_t kappa_minus() const noexcept;

  /// Orthonormal eigenbases of J for +1 and -1 (canonical K+ and K-).
  const Eigen::MatrixXd& positive_basis() const noexcept;
  const Eigen::MatrixXd& negative_basis() const noexcept;

  bool same_as(const Space& other) const noexcept;

 private:
  struct Data;
  explicit Space(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  friend Space make_space(std::span<const int> signs);
  friend Space make_space(const Eigen::MatrixXd& symmetry, double tol);

  std::shared_ptr<const Data> data_;
};

/// J = diag(signs). Each entry must be +1 or -1.
Space make_space(std::span<const int> signs);
/// General symmetric involution. Throws NotSymmetric or NotAnInvolution.
Space make_space(const Eigen::MatrixXd& symmetry, double tol = kDefaultTol);

/// x^T J y.
double indefinite_inner(const Space& s, const Vector& x, const Vector& y);

/// J a^T J.
Operator j_adjoint(const Space& s, const Operator& a);

/// max |j_adjoint(a) - a|.
double j_selfadjoint_residual(const Space& s, const Operator& a);

bool is_j_selfadjoint(const Space& s, const Operator& a,
                      double tol = kDefaultTol);

// Throws DimensionMismatch when the sizes disagree with the space.
void require_vector(const Space& s, const Vector& x, const char* what);
void require_square(const Space& s, const Operator& a, const char* what);

}  // namespace krein
