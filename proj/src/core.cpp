#include "krein/core.hpp"

#include <cmath>
#include <string>

#include "linalg.hpp"

namespace krein {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAnInvolution: return "NotAnInvolution";
    case ErrorCode::ZeroSubspace: return "ZeroSubspace";
    case ErrorCode::AllNeutral: return "AllNeutral";
    case ErrorCode::NotUniformlyDefinite: return "NotUniformlyDefinite";
    case ErrorCode::DegenerateSubspace: return "DegenerateSubspace";
    case ErrorCode::IndefiniteMember: return "IndefiniteMember";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::ZeroMember: return "ZeroMember";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::MismatchedFamilies: return "MismatchedFamilies";
    case ErrorCode::SingularFrameOperator: return "SingularFrameOperator";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::InfeasibleRequest: return "InfeasibleRequest";
  }
  return "Unknown";
}

double max_abs(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

struct Space::Data {
  Eigen::MatrixXd j;
  Eigen::MatrixXd positive;
  Eigen::MatrixXd negative;
};

std::size_t Space::dimension() const noexcept {
  return static_cast<std::size_t>(data_->j.rows());
}
const Eigen::MatrixXd& Space::symmetry() const noexcept { return data_->j; }
std::size_t Space::kappa_plus() const noexcept {
  return static_cast<std::size_t>(data_->positive.cols());
}
std::size_t Space::kappa_minus() const noexcept {
  return static_cast<std::size_t>(data_->negative.cols());
}
const Eigen::MatrixXd& Space::positive_basis() const noexcept {
  return data_->positive;
}
const Eigen::MatrixXd& Space::negative_basis() const noexcept {
  return data_->negative;
}

bool Space::same_as(const Space& other) const noexcept {
  if (data_ == other.data_) return true;
  return data_->j.rows() == other.data_->j.rows() &&
         data_->j == other.data_->j;
}

Space make_space(std::span<const int> signs) {
  if (signs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "signature must be nonempty");
  }
  const auto n = static_cast<Eigen::Index>(signs.size());
  auto data = std::make_shared<Space::Data>();
  data->j = Eigen::MatrixXd::Zero(n, n);
  Eigen::Index plus = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const int s = signs[static_cast<std::size_t>(i)];
    if (s != 1 && s != -1) {
      throw Error(ErrorCode::InvalidArgument,
                  "signature entry " + std::to_string(i) + " is not +1 or -1");
    }
    data->j(i, i) = s;
    if (s == 1) ++plus;
  }
  data->positive = Eigen::MatrixXd::Zero(n, plus);
  data->negative = Eigen::MatrixXd::Zero(n, n - plus);
  Eigen::Index p = 0, m = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (signs[static_cast<std::size_t>(i)] == 1) {
      data->positive(i, p++) = 1.0;
    } else {
      data->negative(i, m++) = 1.0;
    }
  }
  return Space(std::move(data));
}

Space make_space(const Eigen::MatrixXd& symmetry, double tol) {
  const auto n = symmetry.rows();
  if (n == 0 || symmetry.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "fundamental symmetry must be a nonempty square matrix");
  }
  if (!symmetry.allFinite()) {
    throw Error(ErrorCode::InvalidArgument,
                "fundamental symmetry has non-finite entries");
  }
  if (max_abs(symmetry - symmetry.transpose()) > tol) {
    throw Error(ErrorCode::NotSymmetric, "fundamental symmetry is not symmetric");
  }
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  if (max_abs(symmetry * symmetry - identity) > tol) {
    throw Error(ErrorCode::NotAnInvolution,
                "fundamental symmetry does not square to the identity");
  }
  const auto eig = detail::symmetric_eigen(symmetry);
  Eigen::Index minus = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (eig.values(i) < 0) ++minus;
  }
  auto data = std::make_shared<Space::Data>();
  data->j = symmetry;
  // Eigenvalues ascend, so the -1 block comes first.
  data->negative = eig.vectors.leftCols(minus);
  data->positive = eig.vectors.rightCols(n - minus);
  return Space(std::move(data));
}

void require_vector(const Space& s, const Vector& x, const char* what) {
  if (static_cast<std::size_t>(x.size()) != s.dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(x.size()) +
                    ", expected " + std::to_string(s.dimension()));
  }
}

void require_square(const Space& s, const Operator& a, const char* what) {
  const auto n = static_cast<Eigen::Index>(s.dimension());
  if (a.rows() != n || a.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " must be " + std::to_string(n) + "x" +
                    std::to_string(n));
  }
}

double indefinite_inner(const Space& s, const Vector& x, const Vector& y) {
  require_vector(s, x, "x");
  require_vector(s, y, "y");
  return x.dot(s.symmetry() * y);
}

Operator j_adjoint(const Space& s, const Operator& a) {
  require_square(s, a, "operator");
  const auto& j = s.symmetry();
  return j * a.transpose() * j;
}

double j_selfadjoint_residual(const Space& s, const Operator& a) {
  return max_abs(j_adjoint(s, a) - a);
}

bool is_j_selfadjoint(const Space& s, const Operator& a, double tol) {
  return j_selfadjoint_residual(s, a) <= tol * std::max(1.0, max_abs(a));
}

}  // namespace krein
