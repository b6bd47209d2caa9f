#include "krein/theorems.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "linalg.hpp"

namespace krein {

namespace {

void require_same_space(const Family& a, const Family& b) {
  if (!a.space().same_as(b.space())) {
    throw Error(ErrorCode::DimensionMismatch,
                "families live in different Krein spaces");
  }
}

void require_matching(const Family& fx, const Family& fy, double tol,
                      bool same_dimensions) {
  require_same_space(fx, fy);
  if (fx.size() != fy.size()) {
    throw Error(ErrorCode::MismatchedFamilies,
                "families have " + std::to_string(fx.size()) + " and " +
                    std::to_string(fy.size()) + " members");
  }
  for (std::size_t i = 0; i < fx.size(); ++i) {
    const auto& x = fx[i];
    const auto& y = fy[i];
    const std::string where = "member " + std::to_string(i);
    if (x.sign != y.sign) {
      throw Error(ErrorCode::MismatchedFamilies, where + " differs in sign");
    }
    if (std::abs(x.weight - y.weight) > tol * std::max(1.0, x.weight)) {
      throw Error(ErrorCode::MismatchedFamilies, where + " differs in weight");
    }
    if (same_dimensions && x.subspace.dimension() != y.subspace.dimension()) {
      throw Error(ErrorCode::MismatchedFamilies,
                  where + " differs in dimension");
    }
  }
}

// Synthesis operator of the members of one sign, blocks v_i B_i.
Eigen::MatrixXd signed_synthesis(const Family& f, Sign sign) {
  Eigen::Index cols = 0;
  for (auto i : f.indices(sign)) cols += f[i].subspace.basis().cols();
  Eigen::MatrixXd t(static_cast<Eigen::Index>(f.space().dimension()), cols);
  Eigen::Index at = 0;
  for (auto i : f.indices(sign)) {
    const auto& b = f[i].subspace.basis();
    t.middleCols(at, b.cols()) = f[i].weight * b;
    at += b.cols();
  }
  return t;
}

struct Inverse {
  Operator value;
  double condition;
};

Inverse invert_frame_operator(const Operator& s, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(s);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  const double condition = smallest > 0.0
                               ? sv(0) / smallest
                               : std::numeric_limits<double>::infinity();
  if (!(condition < 1.0 / tol)) {
    throw Error(ErrorCode::SingularFrameOperator,
                "frame operator is singular (condition number " +
                    std::to_string(condition) + ")");
  }
  return {s.fullPivLu().inverse(), condition};
}

std::vector<Subspace> image_subspaces(const Family& f, const Operator& map) {
  std::vector<Subspace> out;
  out.reserve(f.size());
  for (const auto& m : f.members()) {
    out.push_back(span(f.space(), Eigen::MatrixXd(map * m.subspace.basis())));
  }
  return out;
}

}  // namespace

CombineResult combine(const Family& f1, const Family& f2,
                      const AnalysisOptions& options) {
  require_same_space(f1, f2);
  std::vector<std::pair<Subspace, double>> members;
  members.reserve(f1.size() + f2.size());
  for (const auto& m : f1.members()) members.emplace_back(m.subspace, m.weight);
  for (const auto& m : f2.members()) members.emplace_back(m.subspace, m.weight);
  Family family = make_family(f1.space(), members, options.tol);
  FrameAnalysis analysis = analyze(family, options);
  return {std::move(family), std::move(analysis)};
}

double cross_term_residual(const Family& fx, const Family& fy, double tol) {
  require_matching(fx, fy, tol, true);
  const auto& j = fx.space().symmetry();
  double residual = 0.0;
  for (Sign sign : {Sign::Positive, Sign::Negative}) {
    const Eigen::MatrixXd tx = signed_synthesis(fx, sign);
    const Eigen::MatrixXd ty = signed_synthesis(fy, sign);
    // Adjoints in (M+-, +-[.,.]): T* = +-T^T J.
    const Eigen::MatrixXd c = to_int(sign) * (tx.transpose() * j * ty);
    residual = std::max(residual, max_abs(c + c.transpose()));
  }
  return residual;
}

bool cross_term_condition(const Family& fx, const Family& fy, double tol) {
  return cross_term_residual(fx, fy, tol) <= tol;
}

Family sum_family(const Family& fx, const Family& fy, double tol) {
  require_matching(fx, fy, tol, false);
  std::vector<std::pair<Subspace, double>> members;
  members.reserve(fx.size());
  for (std::size_t i = 0; i < fx.size(); ++i) {
    members.emplace_back(subspace_sum(fx[i].subspace, fy[i].subspace),
                         fx[i].weight);
  }
  return make_family(fx.space(), members, tol);
}

DualResult canonical_dual(const Family& f, FrameVariant variant, double tol) {
  const Operator s = frame_operator(f, variant);
  const Inverse inv = invert_frame_operator(s, tol);
  const auto images = image_subspaces(f, inv.value);
  std::vector<std::pair<Subspace, double>> members;
  members.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    members.emplace_back(images[i], f[i].weight);
  }
  try {
    Family dual = make_family(f.space(), members, tol);
    const double residual =
        max_abs(frame_operator(dual, variant) - inv.value);
    FrameAnalysis analysis = analyze(dual, AnalysisOptions{tol});
    return {std::move(dual), residual, std::move(analysis), inv.condition};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IndefiniteMember) throw;
    throw Error(ErrorCode::IndefiniteMember,
                std::string("canonical dual violates definiteness: ") + e.what());
  }
}

IdentityReport identity_check(const Family& f,
                              const std::vector<std::size_t>& subset,
                              const Vector& x, FrameVariant variant,
                              double tol) {
  require_vector(f.space(), x, "x");
  const auto first = normalize_subset(f, subset);
  const auto second = complement(f, first);
  const Operator s = frame_operator(f, variant);
  const Inverse inv = invert_frame_operator(s, tol);
  const auto& space = f.space();
  const auto& j = space.symmetry();

  const Operator s1 = partial_frame_operator(f, first, variant);
  const Operator s2 = partial_frame_operator(f, second, variant);
  const Vector g1 = s1 * x;
  const Vector g2 = s2 * x;

  IdentityReport out;
  out.lhs_direct = indefinite_inner(space, g1, x) -
                   indefinite_inner(space, inv.value * g1, g1);
  out.rhs_direct = indefinite_inner(space, g2, x) -
                   indefinite_inner(space, inv.value * g2, g2);

  const auto duals = image_subspaces(f, inv.value);
  const Vector jx = j * x;
  auto projection_form = [&](const std::vector<std::size_t>& part,
                             const Vector& g) {
    double value = 0.0;
    for (auto i : part) {
      const auto& m = f[i];
      const Vector p = orthogonal_projection(m.subspace) * jx;
      value += to_int(m.sign) * m.weight * m.weight *
               indefinite_inner(space, p, jx);
    }
    const Vector jg = j * g;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto& m = f[i];
      const Vector p = orthogonal_projection(duals[i]) * jg;
      value -= to_int(m.sign) * m.weight * m.weight *
               indefinite_inner(space, p, jg);
    }
    return value;
  };
  out.lhs_projection = projection_form(first, g1);
  out.rhs_projection = projection_form(second, g2);

  out.residual_direct = std::abs(out.lhs_direct - out.rhs_direct);
  out.residual_projection = std::abs(out.lhs_projection - out.rhs_projection);
  out.residual_forms = std::max(std::abs(out.lhs_direct - out.lhs_projection),
                                std::abs(out.rhs_direct - out.rhs_projection));

  const Operator p = inv.value * s1;
  const Operator q = inv.value * s2;
  out.operator_residual = max_abs((p - p * p) - (q - q * q));
  return out;
}

BesselReport bessel_inequality_check(
    const Space& s, const std::vector<std::pair<Subspace, double>>& members,
    double tol) {
  if (members.empty()) {
    throw Error(ErrorCode::EmptyFamily, "Bessel check needs at least one member");
  }
  const auto n = static_cast<Eigen::Index>(s.dimension());
  Eigen::Index cols = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& [w, v] = members[i];
    if (!w.space().same_as(s)) {
      throw Error(ErrorCode::DimensionMismatch,
                  "member " + std::to_string(i) + " belongs to a different space");
    }
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "member " + std::to_string(i) + " has a non-positive weight");
    }
    cols += w.basis().cols();
  }
  Eigen::MatrixXd columns(n, cols);
  Operator weighted = Operator::Zero(n, n);
  Eigen::Index at = 0;
  for (const auto& [w, v] : members) {
    columns.middleCols(at, w.basis().cols()) = w.basis();
    at += w.basis().cols();
    weighted += (v * v) * orthogonal_projection(w);
  }

  BesselReport out;
  const Subspace m = span(s, columns);
  out.dimension = m.dimension();
  if (m.is_zero()) return out;

  const auto& j = s.symmetry();
  const auto eig = detail::symmetric_eigen(gram_matrix(m));
  std::vector<Eigen::Index> kept;
  out.nonnegative = true;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) < -tol) out.nonnegative = false;
    if (std::abs(eig.values(i)) > tol) kept.push_back(i);
  }
  out.isotropic_dimension = m.dimension() - kept.size();

  const Subspace deficiency = deficiency_part(m, tol);
  out.deficiency_class = classify(deficiency, tol);
  if (!deficiency.is_zero()) {
    out.deficiency_gamma = gramian(deficiency, tol).gamma;
  }
  if (!out.nonnegative || kept.empty()) return out;

  Eigen::MatrixXd z(eig.vectors.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    z.col(static_cast<Eigen::Index>(c)) = eig.vectors.col(kept[c]);
  }
  // q(f) = sum v_i^2 <J pi_{W_i} J f, f> and p(f) = [f, f] on M - M0.
  const Eigen::MatrixXd b = m.basis() * z;
  const Eigen::MatrixXd q = b.transpose() * j * weighted * j * b;
  const Eigen::MatrixXd p = b.transpose() * j * b;
  const Eigen::VectorXd l = detail::pencil_eigenvalues(q, p);
  out.lower = l(0);
  out.upper = l(l.size() - 1);
  out.holds = *out.lower > tol;
  return out;
}

BesselReport bessel_inequality_check(const Family& f, double tol) {
  std::vector<std::pair<Subspace, double>> members;
  for (const auto& m : f.members()) members.emplace_back(m.subspace, m.weight);
  return bessel_inequality_check(f.space(), members, tol);
}

DouglasReport douglas_check(const Operator& a, const Operator& b, double tol) {
  const auto n = a.rows();
  if (n == 0 || a.cols() != n || b.rows() != n || b.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "Douglas check needs two square matrices of equal size");
  }
  DouglasReport out;
  const double scale = std::max(1.0, max_abs(a));

  // Range inclusion through ranks.
  Eigen::MatrixXd joined(n, 2 * n);
  joined << b, a;
  out.range_inclusion = detail::numerical_rank(joined, kRankCutoff) ==
                        detail::numerical_rank(b, kRankCutoff);

  // Majorization a a^T <= l^2 b b^T, solved on R(b).
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  while (r < sv.size() && sv(0) > 0.0 && sv(r) > kRankCutoff * sv(0)) ++r;
  const Eigen::MatrixXd u = svd.matrixU().leftCols(r);
  const Eigen::MatrixXd outside =
      a - u * (u.transpose() * a);
  if (max_abs(outside) <= tol * scale) {
    if (r == 0) {
      out.lambda = 0.0;
    } else {
      const Eigen::MatrixXd ar = u.transpose() * a * a.transpose() * u;
      const Eigen::MatrixXd br = sv.head(r).array().square().matrix().asDiagonal();
      const Eigen::VectorXd l = detail::pencil_eigenvalues(ar, br);
      out.lambda = std::sqrt(std::max(0.0, l(l.size() - 1)));
    }
  }

  // Factorization a = b x.
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(n, n);
  cod.setThreshold(kRankCutoff);
  cod.compute(b);
  const Eigen::MatrixXd x = cod.solve(a);
  out.factor_residual = max_abs(b * x - a);
  out.factor_exists = out.factor_residual <= tol * scale;

  out.consistent = out.range_inclusion == out.lambda.has_value() &&
                   out.range_inclusion == out.factor_exists;
  return out;
}

}  // namespace krein
