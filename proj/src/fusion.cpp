#include "krein/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "linalg.hpp"

namespace krein {

namespace {

Subspace aggregate_span(const Space& s, const std::vector<Member>& members,
                        const std::vector<std::size_t>& indices) {
  Eigen::Index cols = 0;
  for (auto i : indices) cols += members[i].subspace.basis().cols();
  Eigen::MatrixXd columns(static_cast<Eigen::Index>(s.dimension()), cols);
  Eigen::Index at = 0;
  for (auto i : indices) {
    const auto& b = members[i].subspace.basis();
    columns.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return span(s, columns);
}

// Projection used inside a frame operator term.
Operator member_operator(const Space& s, const Member& m, FrameVariant variant) {
  if (variant == FrameVariant::Literal) {
    const Operator pi = orthogonal_projection(m.subspace);
    return s.symmetry() * pi * s.symmetry();
  }
  return j_projection(m.subspace, 0.0);
}

Operator accumulate(const Family& f, const std::vector<std::size_t>& indices,
                    FrameVariant variant) {
  const auto n = static_cast<Eigen::Index>(f.space().dimension());
  Operator total = Operator::Zero(n, n);
  for (auto i : indices) {
    const Member& m = f[i];
    total += (to_int(m.sign) * m.weight * m.weight) *
             member_operator(f.space(), m, variant);
  }
  return total;
}

std::vector<std::size_t> all_indices(const Family& f) {
  std::vector<std::size_t> idx(f.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

struct SignedPencil {
  FrameBounds bounds;
  std::vector<std::size_t> modulus_active;
};

// Extreme generalized eigenvalues of (sum v_i^2 B^T J P_i B, B^T J B) on the
// aggregate of one sign. The negative side is solved in (M-, -[.,.]) and
// reported in the A-, B- sign convention.
SignedPencil signed_pencil(const Family& f, Sign sign, ProjectionMode mode,
                           double tol) {
  const auto& s = f.space();
  const auto& b = f.aggregate(sign).basis();
  const auto& j = s.symmetry();
  const double orient = to_int(sign);
  const Eigen::MatrixXd metric = orient * detail::symmetrize(b.transpose() * j * b);
  Eigen::MatrixXd form = Eigen::MatrixXd::Zero(b.cols(), b.cols());
  SignedPencil out{};
  for (auto i : f.indices(sign)) {
    const Member& m = f[i];
    const Operator p = mode == ProjectionMode::Ambient
                           ? orthogonal_projection(m.subspace)
                           : j_projection(m.subspace, 0.0);
    const Eigen::MatrixXd term =
        orient * detail::symmetrize(b.transpose() * j * p * b);
    if (detail::symmetric_eigen(term).values.minCoeff() < -tol) {
      out.modulus_active.push_back(i);
    }
    form += (m.weight * m.weight) * term;
  }
  const Eigen::VectorXd l = detail::pencil_eigenvalues(form, metric);
  out.bounds.lower = orient * l(0);
  out.bounds.upper = orient * l(l.size() - 1);
  return out;
}

bool is_tight(const FrameBounds& b, double tol) {
  return std::abs(b.lower - b.upper) <= tol * std::max(1.0, std::abs(b.lower));
}

}  // namespace

const char* to_string(FrameVariant v) noexcept {
  return v == FrameVariant::Literal ? "literal" : "jsa";
}

Family::Family(const Space& s, std::vector<Member> members)
    : space_(s), members_(std::move(members)), m_plus_(s), m_minus_(s) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    (members_[i].sign == Sign::Positive ? plus_ : minus_).push_back(i);
  }
  m_plus_ = aggregate_span(s, members_, plus_);
  m_minus_ = aggregate_span(s, members_, minus_);
}

std::size_t Family::direct_sum_dimension() const noexcept {
  std::size_t d = 0;
  for (const auto& m : members_) d += m.subspace.dimension();
  return d;
}

Family make_family(const Space& s,
                   const std::vector<std::pair<Subspace, double>>& members,
                   double tol) {
  std::vector<Member> out;
  out.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& [w, v] = members[i];
    const std::string where = "member " + std::to_string(i);
    if (!w.space().same_as(s)) {
      throw Error(ErrorCode::DimensionMismatch,
                  where + " belongs to a different space");
    }
    if (w.is_zero()) throw Error(ErrorCode::ZeroMember, where + " is the zero subspace");
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::NonPositiveWeight,
                  where + " has a non-positive weight");
    }
    const auto c = classify(w, tol);
    if (c == SubspaceClass::UniformlyPositive) {
      out.push_back({w, v, Sign::Positive});
    } else if (c == SubspaceClass::UniformlyNegative) {
      out.push_back({w, v, Sign::Negative});
    } else {
      throw Error(ErrorCode::IndefiniteMember,
                  where + " is not uniformly definite (" + to_string(c) + ")");
    }
  }
  return Family(s, std::move(out));
}

Family from_vector_system(
    const Space& s,
    const std::vector<std::pair<std::vector<Vector>, double>>& groups,
    double tol) {
  std::vector<std::pair<Subspace, double>> members;
  members.reserve(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].first.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "vector group " + std::to_string(i) + " is empty");
    }
    members.emplace_back(span(s, groups[i].first), groups[i].second);
  }
  return make_family(s, members, tol);
}

Eigen::MatrixXd synthesis_matrix(const Family& f) {
  Eigen::MatrixXd t(static_cast<Eigen::Index>(f.space().dimension()),
                    static_cast<Eigen::Index>(f.direct_sum_dimension()));
  Eigen::Index at = 0;
  for (const auto& m : f.members()) {
    const auto& b = m.subspace.basis();
    t.middleCols(at, b.cols()) = m.weight * b;
    at += b.cols();
  }
  return t;
}

namespace {

Eigen::VectorXd flatten(const Family& f, const DirectSumVector& g) {
  if (g.blocks.size() != f.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "direct-sum vector has " + std::to_string(g.blocks.size()) +
                    " blocks, family has " + std::to_string(f.size()) +
                    " members");
  }
  Eigen::VectorXd flat(static_cast<Eigen::Index>(f.direct_sum_dimension()));
  Eigen::Index at = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto d = static_cast<Eigen::Index>(f[i].subspace.dimension());
    if (g.blocks[i].size() != d) {
      throw Error(ErrorCode::DimensionMismatch,
                  "block " + std::to_string(i) + " has the wrong length");
    }
    flat.segment(at, d) = g.blocks[i];
    at += d;
  }
  return flat;
}

DirectSumVector split(const Family& f, const Eigen::VectorXd& flat) {
  DirectSumVector out;
  Eigen::Index at = 0;
  for (const auto& m : f.members()) {
    const auto d = static_cast<Eigen::Index>(m.subspace.dimension());
    out.blocks.emplace_back(flat.segment(at, d));
    at += d;
  }
  return out;
}

}  // namespace

Vector synthesize(const Family& f, const DirectSumVector& g) {
  return synthesis_matrix(f) * flatten(f, g);
}

Eigen::MatrixXd analysis_literal_matrix(const Family& f) {
  const auto& j = f.space().symmetry();
  Eigen::MatrixXd t(static_cast<Eigen::Index>(f.direct_sum_dimension()),
                    static_cast<Eigen::Index>(f.space().dimension()));
  Eigen::Index at = 0;
  for (const auto& m : f.members()) {
    const auto& b = m.subspace.basis();
    // (J B)^T pi_{JW} = B^T J, since J B is an orthonormal basis of J W.
    t.middleRows(at, b.cols()) = (to_int(m.sign) * m.weight) * b.transpose() * j;
    at += b.cols();
  }
  return t;
}

DirectSumVector analysis_literal(const Family& f, const Vector& x) {
  require_vector(f.space(), x, "x");
  return split(f, analysis_literal_matrix(f) * x);
}

double direct_sum_pairing(const Family& f, const DirectSumVector& g,
                          const DirectSumVector& h) {
  const Eigen::VectorXd a = flatten(f, g);
  const Eigen::VectorXd b = flatten(f, h);
  double total = 0.0;
  Eigen::Index at = 0;
  for (const auto& m : f.members()) {
    const auto d = static_cast<Eigen::Index>(m.subspace.dimension());
    total += to_int(m.sign) * a.segment(at, d).dot(b.segment(at, d));
    at += d;
  }
  return total;
}

Operator frame_operator(const Family& f, FrameVariant variant) {
  return accumulate(f, all_indices(f), variant);
}

std::vector<std::size_t> normalize_subset(const Family& f,
                                          std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (!subset.empty() && subset.back() >= f.size()) {
    throw Error(ErrorCode::BadIndex,
                "index " + std::to_string(subset.back()) +
                    " is out of range for a family of " +
                    std::to_string(f.size()) + " members");
  }
  return subset;
}

std::vector<std::size_t> complement(const Family& f,
                                    const std::vector<std::size_t>& subset) {
  const auto normalized = normalize_subset(f, subset);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!std::binary_search(normalized.begin(), normalized.end(), i)) {
      out.push_back(i);
    }
  }
  return out;
}

Operator partial_frame_operator(const Family& f,
                                const std::vector<std::size_t>& subset,
                                FrameVariant variant) {
  return accumulate(f, normalize_subset(f, subset), variant);
}

FrameAnalysis analyze(const Family& f, const AnalysisOptions& options) {
  const double tol = options.tol;
  FrameAnalysis out;
  out.mode = options.mode;
  out.m_plus_class = classify(f.m_plus(), tol);
  out.m_minus_class = classify(f.m_minus(), tol);
  out.is_j_fusion_frame =
      is_maximal_uniformly_definite(f.m_plus(), Sign::Positive, tol) &&
      is_maximal_uniformly_definite(f.m_minus(), Sign::Negative, tol);

  bool parseval_on_span = true;
  bool zeta_defined = true;
  double zeta = 0.0;
  for (Sign sign : {Sign::Positive, Sign::Negative}) {
    const Subspace& agg = f.aggregate(sign);
    const auto cls = sign == Sign::Positive ? out.m_plus_class : out.m_minus_class;
    const auto definite = sign == Sign::Positive
                              ? SubspaceClass::UniformlyPositive
                              : SubspaceClass::UniformlyNegative;
    bool& tight = sign == Sign::Positive ? out.tight_plus : out.tight_minus;
    auto& bounds = sign == Sign::Positive ? out.plus : out.minus;
    auto& gamma = sign == Sign::Positive ? out.alpha_plus : out.beta_plus;

    if (agg.is_zero()) {
      tight = true;
      zeta += cone_angle_from_modulus(1.0);
      continue;
    }
    gamma = gramian(agg, tol).gamma;
    if (cls != definite) {
      tight = false;
      parseval_on_span = false;
      zeta_defined = false;
      continue;
    }
    auto pencil = signed_pencil(f, sign, options.mode, tol);
    bounds = pencil.bounds;
    out.modulus_active.insert(out.modulus_active.end(),
                              pencil.modulus_active.begin(),
                              pencil.modulus_active.end());
    tight = is_tight(pencil.bounds, tol);
    parseval_on_span = parseval_on_span && tight &&
                       std::abs(pencil.bounds.lower - to_int(sign)) <= tol;
    zeta += cone_angle(agg, tol);
  }
  std::sort(out.modulus_active.begin(), out.modulus_active.end());
  out.parseval_on_span = parseval_on_span;
  out.parseval = out.is_j_fusion_frame && parseval_on_span;
  if (zeta_defined) out.zeta = zeta;
  return out;
}

bool is_onb_of_subspaces(const Family& f, double tol) {
  for (Sign sign : {Sign::Positive, Sign::Negative}) {
    const auto& idx = f.indices(sign);
    std::size_t total = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      total += f[idx[a]].subspace.dimension();
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (!j_orthogonal(f[idx[a]].subspace, f[idx[b]].subspace, tol)) {
          return false;
        }
      }
    }
    const std::size_t kappa = sign == Sign::Positive ? f.space().kappa_plus()
                                                     : f.space().kappa_minus();
    if (total != kappa || f.aggregate(sign).dimension() != total) return false;
    if (!is_maximal_uniformly_definite(f.aggregate(sign), sign, tol)) {
      return false;
    }
  }
  return j_orthogonal(f.m_plus(), f.m_minus(), tol);
}

bool is_disjoint(const Family& f, double tol) {
  return subspace_intersection(f.m_plus(), f.m_minus(), tol).is_zero();
}

bool is_strictly_disjoint(const Family& f, double tol) {
  return j_orthogonal(f.m_plus(), f.m_minus(), tol);
}

}  // namespace krein
