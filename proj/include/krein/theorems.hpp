#pragma once

// Executable forms of the J-fusion frame results: unions and sums of
// families, canonical duals, the subset identity, the characterization of
// uniformly positive deficiency subspaces, and a Douglas range-inclusion
// oracle.

#include <optional>
#include <utility>
#include <vector>

#include "krein/fusion.hpp"

namespace krein {

struct CombineResult {
  Family family;
  FrameAnalysis analysis;
};

/// Concatenates the members of f1 and f2 (f1 first) and analyzes the union.
CombineResult combine(const Family& f1, const Family& f2,
                      const AnalysisOptions& options = {});

/// T*_X T_Y + T*_Y T_X = 0 on (M+, [.,.]) and on (M-, -[.,.]), with the
/// synthesis operators built from the stored member bases. Requires equal
/// member counts, weights, signs and member dimensions; throws
/// MismatchedFamilies otherwise.
bool cross_term_condition(const Family& fx, const Family& fy,
                          double tol = kDefaultTol);

/// Largest entry of the two anti-commutators. Same preconditions.
double cross_term_residual(const Family& fx, const Family& fy,
                           double tol = kDefaultTol);

/// Members X_i + Y_i with the shared weights v_i. Throws MismatchedFamilies
/// or IndefiniteMember.
Family sum_family(const Family& fx, const Family& fy,
                  double tol = kDefaultTol);

struct DualResult {
  Family dual;
  /// max |frame_operator(dual) - S^-1|; reported, not asserted.
  double operator_residual;
  FrameAnalysis dual_analysis;
  double condition_number;
};

/// {(S^-1 W_i, v_i)}. Throws SingularFrameOperator when cond(S) >= 1/tol and
/// IndefiniteMember when an image subspace is not uniformly definite.
DualResult canonical_dual(const Family& f, FrameVariant variant,
                          double tol = kDefaultTol);

struct IdentityReport {
  double lhs_direct = 0;
  double rhs_direct = 0;
  double lhs_projection = 0;  // projection-form sums, term by term
  double rhs_projection = 0;
  double residual_direct = 0;
  double residual_projection = 0;
  double residual_forms = 0;
  /// max |(P - P^2) - (Q - Q^2)| with P = S^-1 S^{I1}, Q = S^-1 S^{I1^c}.
  double operator_residual = 0;
};

/// Throws SingularFrameOperator or BadIndex.
IdentityReport identity_check(const Family& f,
                              const std::vector<std::size_t>& subset,
                              const Vector& x, FrameVariant variant,
                              double tol = kDefaultTol);

struct BesselReport {
  bool holds = false;
  std::optional<double> lower;  // A
  std::optional<double> upper;  // B
  SubspaceClass deficiency_class = SubspaceClass::Zero;
  std::optional<double> deficiency_gamma;
  std::size_t dimension = 0;          // dim M
  std::size_t isotropic_dimension = 0;  // dim M0
  bool nonnegative = false;           // [f, f] >= 0 on M
};

/// Bessel-type inequality on M = closed span of the raw members; members
/// are not required to be definite. Throws EmptyFamily or NonPositiveWeight.
BesselReport bessel_inequality_check(
    const Space& s, const std::vector<std::pair<Subspace, double>>& members,
    double tol = kDefaultTol);
BesselReport bessel_inequality_check(const Family& f,
                                     double tol = kDefaultTol);

struct DouglasReport {
  bool range_inclusion = false;  // rank([b | a]) == rank(b)
  std::optional<double> lambda;  // smallest l with a a^T <= l^2 b b^T
  bool factor_exists = false;    // a = b x solvable
  bool consistent = false;       // the three routes agree
  double factor_residual = 0;
};

/// Three independent routes to R(a) subset R(b). Throws DimensionMismatch.
DouglasReport douglas_check(const Operator& a, const Operator& b,
                            double tol = kDefaultTol);

}  // namespace krein
