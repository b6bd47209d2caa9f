#include "krein/subspace.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "linalg.hpp"

namespace krein {

namespace {

constexpr double kOrthonormalTol = 1e-10;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2;
// Inputs this close to orthonormal are adopted without refactoring.
constexpr double kVerbatimTol = 1e-12;

void require_same_space(const Subspace& a, const Subspace& b) {
  if (!a.space().same_as(b.space())) {
    throw Error(ErrorCode::DimensionMismatch,
                "subspaces live in different Krein spaces");
  }
}

// Deterministic sign: the first entry of largest modulus is positive.
void fix_column_signs(Eigen::MatrixXd& basis) {
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    Eigen::Index row = 0;
    basis.col(c).cwiseAbs().maxCoeff(&row);
    if (basis(row, c) < 0) basis.col(c) *= -1.0;
  }
}

Eigen::MatrixXd columns_where(const Eigen::MatrixXd& basis,
                              const detail::SymmetricEigen& eig, double tol,
                              bool keep_small) {
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if ((std::abs(eig.values(i)) <= tol) == keep_small) ++count;
  }
  Eigen::MatrixXd z(eig.vectors.rows(), count);
  Eigen::Index c = 0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if ((std::abs(eig.values(i)) <= tol) == keep_small) {
      z.col(c++) = eig.vectors.col(i);
    }
  }
  return basis * z;
}

}  // namespace

const char* to_string(SubspaceClass c) noexcept {
  switch (c) {
    case SubspaceClass::UniformlyPositive: return "UniformlyPositive";
    case SubspaceClass::UniformlyNegative: return "UniformlyNegative";
    case SubspaceClass::Neutral: return "Neutral";
    case SubspaceClass::Degenerate: return "Degenerate";
    case SubspaceClass::Indefinite: return "Indefinite";
    case SubspaceClass::Zero: return "Zero";
  }
  return "Unknown";
}

Subspace::Subspace(const Space& s)
    : space_(s),
      basis_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(s.dimension()), 0)) {}

Subspace Subspace::from_orthonormal(const Space& s, Eigen::MatrixXd basis) {
  if (static_cast<std::size_t>(basis.rows()) != s.dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "basis rows do not match the space dimension");
  }
  const auto d = basis.cols();
  if (max_abs(basis.transpose() * basis - Eigen::MatrixXd::Identity(d, d)) >
      kOrthonormalTol) {
    throw Error(ErrorCode::InvalidArgument, "basis is not orthonormal");
  }
  return Subspace(s, std::move(basis));
}

Subspace span(const Space& s, const Eigen::MatrixXd& vectors, double tol) {
  if (static_cast<std::size_t>(vectors.rows()) != s.dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "spanning vectors have length " +
                    std::to_string(vectors.rows()) + ", expected " +
                    std::to_string(s.dimension()));
  }
  if (!vectors.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "spanning vectors are not finite");
  }
  const auto k = vectors.cols();
  if (k == 0) return Subspace(s);
  if (max_abs(vectors.transpose() * vectors -
              Eigen::MatrixXd::Identity(k, k)) <= kVerbatimTol) {
    return Subspace::from_orthonormal(s, vectors);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(vectors, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return Subspace(s);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol * sv(0)) ++rank;
  Eigen::MatrixXd basis = svd.matrixU().leftCols(rank);
  fix_column_signs(basis);
  return Subspace::from_orthonormal(s, std::move(basis));
}

Subspace span(const Space& s, std::span<const Vector> vectors, double tol) {
  const auto n = static_cast<Eigen::Index>(s.dimension());
  Eigen::MatrixXd columns(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    require_vector(s, vectors[i], "spanning vector");
    columns.col(static_cast<Eigen::Index>(i)) = vectors[i];
  }
  return span(s, columns, tol);
}

Operator orthogonal_projection(const Subspace& w) {
  return w.basis() * w.basis().transpose();
}

Eigen::MatrixXd gram_matrix(const Subspace& w) {
  return detail::symmetrize(w.basis().transpose() * w.space().symmetry() *
                            w.basis());
}

GramSpectrum gramian(const Subspace& w, double cutoff) {
  if (w.is_zero()) {
    throw Error(ErrorCode::ZeroSubspace, "Gramian of the zero subspace");
  }
  const auto eig = detail::symmetric_eigen(gram_matrix(w));
  GramSpectrum out;
  out.eigenvalues.assign(eig.values.data(),
                         eig.values.data() + eig.values.size());
  for (double l : out.eigenvalues) {
    const double a = std::abs(l);
    if (a > cutoff && (!out.gamma || a < *out.gamma)) out.gamma = a;
  }
  return out;
}

SubspaceClass classify(const Subspace& w, double tol) {
  if (w.is_zero()) return SubspaceClass::Zero;
  const auto eig = detail::symmetric_eigen(gram_matrix(w));
  std::size_t pos = 0, neg = 0, neutral = 0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double l = eig.values(i);
    if (l >= tol) {
      ++pos;
    } else if (l <= -tol) {
      ++neg;
    } else {
      ++neutral;
    }
  }
  if (pos > 0 && neg > 0) return SubspaceClass::Indefinite;
  if (neutral == w.dimension()) return SubspaceClass::Neutral;
  if (neutral > 0) return SubspaceClass::Degenerate;
  return pos > 0 ? SubspaceClass::UniformlyPositive
                 : SubspaceClass::UniformlyNegative;
}

double reduced_min_modulus(const Subspace& w, double tol) {
  const auto spectrum = gramian(w, tol);
  if (!spectrum.gamma) {
    throw Error(ErrorCode::AllNeutral,
                "every Gramian eigenvalue is below the cutoff");
  }
  return *spectrum.gamma;
}

double cone_angle_from_modulus(double gamma) {
  const double a = std::min(gamma, 1.0);
  return (std::sqrt((1.0 + a) / 2.0) + std::sqrt(std::max(0.0, 1.0 - a) / 2.0)) *
         kInvSqrt2;
}

double cone_angle(const Subspace& w, double tol) {
  const auto c = classify(w, tol);
  if (c != SubspaceClass::UniformlyPositive &&
      c != SubspaceClass::UniformlyNegative) {
    throw Error(ErrorCode::NotUniformlyDefinite,
                std::string("cone angle needs a uniformly definite subspace, got ") +
                    to_string(c));
  }
  // With B orthonormal, G = I - 2 (V_-^T B)^T (V_-^T B) on a positive subspace,
  // so (1 - gamma)/2 = s^2 for s the largest singular value of the component
  // in the opposite canonical part. Using s avoids the square-root blow-up of
  // rounding in gamma near 1.
  const Eigen::MatrixXd& other = c == SubspaceClass::UniformlyPositive
                                     ? w.space().negative_basis()
                                     : w.space().positive_basis();
  double sv = 0.0;
  if (other.cols() > 0) {
    const Eigen::MatrixXd comp = other.transpose() * w.basis();
    sv = Eigen::JacobiSVD<Eigen::MatrixXd>(comp).singularValues()(0);
  }
  sv = std::min(sv, std::sqrt(0.5));
  return (std::sqrt(std::max(0.0, 1.0 - sv * sv)) + sv) * kInvSqrt2;
}

Operator j_projection(const Subspace& w, double tol) {
  const auto n = static_cast<Eigen::Index>(w.space().dimension());
  if (w.is_zero()) return Operator::Zero(n, n);
  const Eigen::MatrixXd g = gram_matrix(w);
  const auto eig = detail::symmetric_eigen(g);
  if (eig.values.cwiseAbs().minCoeff() <= tol) {
    throw Error(ErrorCode::DegenerateSubspace,
                "Gramian is singular, the J-orthogonal projection does not exist");
  }
  const Eigen::MatrixXd g_inv = eig.vectors *
                                eig.values.cwiseInverse().asDiagonal() *
                                eig.vectors.transpose();
  return w.basis() * g_inv * w.basis().transpose() * w.space().symmetry();
}

Subspace isotropic_part(const Subspace& w, double tol) {
  if (w.is_zero()) return w;
  const auto eig = detail::symmetric_eigen(gram_matrix(w));
  return Subspace::from_orthonormal(w.space(),
                                    columns_where(w.basis(), eig, tol, true));
}

Subspace deficiency_part(const Subspace& w, double tol) {
  if (w.is_zero()) return w;
  const auto eig = detail::symmetric_eigen(gram_matrix(w));
  return Subspace::from_orthonormal(w.space(),
                                    columns_where(w.basis(), eig, tol, false));
}

bool is_maximal_uniformly_definite(const Subspace& w, Sign sign, double tol) {
  const auto& s = w.space();
  const std::size_t kappa =
      sign == Sign::Positive ? s.kappa_plus() : s.kappa_minus();
  if (w.is_zero()) return kappa == 0;
  const auto expected = sign == Sign::Positive
                            ? SubspaceClass::UniformlyPositive
                            : SubspaceClass::UniformlyNegative;
  return classify(w, tol) == expected && w.dimension() == kappa;
}

bool j_orthogonal(const Subspace& a, const Subspace& b, double tol) {
  require_same_space(a, b);
  if (a.is_zero() || b.is_zero()) return true;
  return max_abs(a.basis().transpose() * a.space().symmetry() * b.basis()) <=
         tol;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b, double tol) {
  require_same_space(a, b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  Eigen::MatrixXd columns(a.basis().rows(), a.basis().cols() + b.basis().cols());
  columns << a.basis(), b.basis();
  return span(a.space(), columns, tol);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b,
                               double tol) {
  require_same_space(a, b);
  if (a.is_zero() || b.is_zero()) return Subspace(a.space());
  const auto da = a.basis().cols();
  const auto db = b.basis().cols();
  Eigen::MatrixXd stacked(a.basis().rows(), da + db);
  stacked << a.basis(), -b.basis();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<Eigen::Index> null_columns;
  for (Eigen::Index i = 0; i < da + db; ++i) {
    if (i >= sv.size() || sv(i) <= tol) null_columns.push_back(i);
  }
  if (null_columns.empty()) return Subspace(a.space());
  Eigen::MatrixXd coords(da, static_cast<Eigen::Index>(null_columns.size()));
  for (std::size_t c = 0; c < null_columns.size(); ++c) {
    coords.col(static_cast<Eigen::Index>(c)) =
        svd.matrixV().col(null_columns[c]).head(da);
  }
  return span(a.space(), Eigen::MatrixXd(a.basis() * coords));
}

bool same_subspace(const Subspace& a, const Subspace& b, double tol) {
  require_same_space(a, b);
  return a.dimension() == b.dimension() &&
         max_abs(orthogonal_projection(a) - orthogonal_projection(b)) <= tol;
}

}  // namespace krein
