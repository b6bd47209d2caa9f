#include "krein/generator.hpp"

#include <cmath>
#include <random>
#include <string>

namespace krein {

namespace {

Eigen::MatrixXd gaussian(std::mt19937_64& rng, Eigen::Index rows,
                         Eigen::Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = normal(rng);
  }
  return m;
}

// Haar-distributed orthogonal matrix from the QR factors of a Gaussian one.
Eigen::MatrixXd random_orthogonal(std::mt19937_64& rng, Eigen::Index k) {
  if (k == 0) return Eigen::MatrixXd(0, 0);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian(rng, k, k));
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(k, k);
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < k; ++i) {
    if (r(i, i) < 0) q.col(i) *= -1.0;
  }
  return q;
}

[[noreturn]] void infeasible(const std::string& why) {
  throw Error(ErrorCode::InfeasibleRequest, why);
}

}  // namespace

Family random_family(const Space& s, std::size_t positive,
                     std::size_t negative, const std::vector<std::size_t>& dims,
                     std::uint64_t seed, const RandomFamilyOptions& options) {
  const std::size_t count = positive + negative;
  if (count == 0) infeasible("a family needs at least one member");
  if (dims.size() != count) {
    infeasible("expected " + std::to_string(count) + " member dimensions, got " +
               std::to_string(dims.size()));
  }
  std::size_t total_plus = 0, total_minus = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const bool pos = i < positive;
    const std::size_t kappa = pos ? s.kappa_plus() : s.kappa_minus();
    if (dims[i] == 0 || dims[i] > kappa) {
      infeasible("member " + std::to_string(i) + " of dimension " +
                 std::to_string(dims[i]) + " does not fit a definite subspace of " +
                 "dimension " + std::to_string(kappa));
    }
    (pos ? total_plus : total_minus) += dims[i];
  }
  if (options.force_frame &&
      (total_plus < s.kappa_plus() || total_minus < s.kappa_minus())) {
    infeasible("member dimensions cannot span maximal definite subspaces");
  }
  if (!(options.max_boost >= 0.0)) infeasible("boost must be non-negative");

  std::mt19937_64 rng(seed);
  const auto kp = static_cast<Eigen::Index>(s.kappa_plus());
  const auto km = static_cast<Eigen::Index>(s.kappa_minus());
  const auto n = static_cast<Eigen::Index>(s.dimension());
  Eigen::MatrixXd plus = s.positive_basis() * random_orthogonal(rng, kp);
  Eigen::MatrixXd minus = s.negative_basis() * random_orthogonal(rng, km);

  if (options.max_boost > 0.0) {
    // Hyperbolic rotations in the planes (plus_k, minus_k) are J-unitary and
    // carry the canonical pair onto another fundamental decomposition.
    std::uniform_real_distribution<double> rapidity(0.0, options.max_boost);
    Eigen::MatrixXd boost = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index k = 0; k < std::min(kp, km); ++k) {
      const double t = rapidity(rng);
      const Eigen::VectorXd p = plus.col(k);
      const Eigen::VectorXd q = minus.col(k);
      boost += (std::cosh(t) - 1.0) * (p * p.transpose() + q * q.transpose()) +
               std::sinh(t) * (p * q.transpose() + q * p.transpose());
    }
    plus = boost * plus;
    minus = boost * minus;
  }

  std::uniform_real_distribution<double> log_weight(std::log(0.5), std::log(2.0));
  std::vector<std::pair<Subspace, double>> members;
  members.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const bool pos = i < positive;
    const Eigen::MatrixXd& host = pos ? plus : minus;
    const Eigen::MatrixXd coeffs =
        gaussian(rng, host.cols(), static_cast<Eigen::Index>(dims[i]));
    members.emplace_back(span(s, Eigen::MatrixXd(host * coeffs)),
                         std::exp(log_weight(rng)));
  }
  return make_family(s, members);
}

}  // namespace krein
