#pragma once

// Dense helpers shared by the implementation files. Not installed.

#include <Eigen/Dense>

#include "krein/error.hpp"

namespace krein::detail {

inline Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& a) {
  return 0.5 * (a + a.transpose());
}

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns, orthonormal
};

inline SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return {Eigen::VectorXd(0), Eigen::MatrixXd(0, 0)};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetrize(a));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Eigenvalues of the pencil (a, g) with g symmetric positive definite,
/// reduced through g = L L^T to L^-1 a L^-T. Ascending.
inline Eigen::VectorXd pencil_eigenvalues(const Eigen::MatrixXd& a,
                                          const Eigen::MatrixXd& g) {
  Eigen::LLT<Eigen::MatrixXd> llt(symmetrize(g));
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::InvalidArgument,
                "pencil metric is not positive definite");
  }
  const Eigen::MatrixXd lower = llt.matrixL();
  Eigen::MatrixXd c = lower.triangularView<Eigen::Lower>().solve(symmetrize(a));
  c = lower.triangularView<Eigen::Lower>()
          .solve(c.transpose())
          .transpose();
  return symmetric_eigen(c).values;
}

/// Number of singular values above cutoff * sigma_max.
inline Eigen::Index numerical_rank(const Eigen::MatrixXd& a, double cutoff) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff * s(0)) ++r;
  }
  return r;
}

}  // namespace krein::detail
