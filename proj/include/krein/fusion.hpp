#pragma once

// Weighted families of uniformly definite subspaces and J-fusion frame
// analytics: synthesis/analysis/frame operators, frame bounds on the
// aggregate spans M+ and M-, tightness, Parseval detection and zeta.

#include <optional>
#include <utility>
#include <vector>

#include "krein/subspace.hpp"

namespace krein {

enum class FrameVariant {
  Literal,      // sum sigma_i v_i^2 pi_{J W_i}
  JSelfAdjoint  // sum sigma_i v_i^2 Q_{W_i}
};

const char* to_string(FrameVariant v) noexcept;

/// How the member projections act on M+ / M- when computing bounds.
enum class ProjectionMode {
  Ambient,      // Hilbert projection pi_{W_i} restricted to M+-
  JOrthogonal   // J-orthogonal projection Q_{W_i}
};

struct Member {
  Subspace subspace;
  double weight;
  Sign sign;
};

class Family {
 public:
  const Space& space() const noexcept { return space_; }
  const std::vector<Member>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Member& operator[](std::size_t i) const { return members_.at(i); }

  const std::vector<std::size_t>& plus_indices() const noexcept { return plus_; }
  const std::vector<std::size_t>& minus_indices() const noexcept { return minus_; }
  const std::vector<std::size_t>& indices(Sign s) const noexcept {
    return s == Sign::Positive ? plus_ : minus_;
  }

  /// Closed spans of the positive / negative members.
  const Subspace& m_plus() const noexcept { return m_plus_; }
  const Subspace& m_minus() const noexcept { return m_minus_; }
  const Subspace& aggregate(Sign s) const noexcept {
    return s == Sign::Positive ? m_plus_ : m_minus_;
  }

  /// Sum of member dimensions, the size of the direct-sum coordinate space.
  std::size_t direct_sum_dimension() const noexcept;

 private:
  Family(const Space& s, std::vector<Member> members);
  friend Family make_family(const Space&,
                            const std::vector<std::pair<Subspace, double>>&,
                            double);

  Space space_;
  std::vector<Member> members_;
  std::vector<std::size_t> plus_;
  std::vector<std::size_t> minus_;
  Subspace m_plus_;
  Subspace m_minus_;
};

/// Classifies each member and splits the index set by sign. Throws
/// ZeroMember, NonPositiveWeight or IndefiniteMember.
Family make_family(const Space& s,
                   const std::vector<std::pair<Subspace, double>>& members,
                   double tol = kDefaultTol);

/// W_i = span(group_i); then make_family.
Family from_vector_system(
    const Space& s,
    const std::vector<std::pair<std::vector<Vector>, double>>& groups,
    double tol = kDefaultTol);

/// Element of the direct sum of the W_i: block i holds coordinates against
/// the stored basis of W_i.
struct DirectSumVector {
  std::vector<Vector> blocks;
};

/// n x (sum d_i) matrix with blocks v_i B_i.
Eigen::MatrixXd synthesis_matrix(const Family& f);
Vector synthesize(const Family& f, const DirectSumVector& g);

/// (sum d_i) x n matrix whose block i maps f to the coordinates of
/// sigma_i v_i pi_{J W_i} f against the basis J B_i of J W_i.
Eigen::MatrixXd analysis_literal_matrix(const Family& f);
DirectSumVector analysis_literal(const Family& f, const Vector& x);

/// Signed block pairing sum_i sigma_i <g_i, h_i>, the pairing in which T and
/// the literal analysis operator are adjoint.
double direct_sum_pairing(const Family& f, const DirectSumVector& g,
                          const DirectSumVector& h);

Operator frame_operator(const Family& f, FrameVariant variant);

/// Same formula restricted to `subset`. Throws BadIndex.
Operator partial_frame_operator(const Family& f,
                                const std::vector<std::size_t>& subset,
                                FrameVariant variant);

/// Sorted, deduplicated copy. Throws BadIndex for entries >= size.
std::vector<std::size_t> normalize_subset(const Family& f,
                                          std::vector<std::size_t> subset);
std::vector<std::size_t> complement(const Family& f,
                                    const std::vector<std::size_t>& subset);

struct FrameBounds {
  double lower;  // A+ or A-
  double upper;  // B+ or B-
};

struct FrameAnalysis {
  bool is_j_fusion_frame = false;
  SubspaceClass m_plus_class = SubspaceClass::Zero;
  SubspaceClass m_minus_class = SubspaceClass::Zero;
  /// A+ <= B+ on M+; present only when M+ is uniformly positive.
  std::optional<FrameBounds> plus;
  /// B- <= A- < 0 on M-; `lower` holds A-, `upper` holds B-.
  std::optional<FrameBounds> minus;
  bool tight_plus = false;
  bool tight_minus = false;
  /// Tight with A+ = 1 and A- = -1 on whichever aggregates are nonzero,
  /// regardless of maximality.
  bool parseval_on_span = false;
  bool parseval = false;
  std::optional<double> alpha_plus;
  std::optional<double> beta_plus;
  std::optional<double> zeta;
  /// Members whose individual term [pi_{W_i} f, f] changes sign on the
  /// aggregate, i.e. where the modulus in the frame inequality is active.
  std::vector<std::size_t> modulus_active;
  ProjectionMode mode = ProjectionMode::Ambient;
};

struct AnalysisOptions {
  double tol = kDefaultTol;
  ProjectionMode mode = ProjectionMode::Ambient;
};

FrameAnalysis analyze(const Family& f, const AnalysisOptions& options = {});

bool is_onb_of_subspaces(const Family& f, double tol = kDefaultTol);
bool is_disjoint(const Family& f, double tol = kDefaultTol);
bool is_strictly_disjoint(const Family& f, double tol = kDefaultTol);

}  // namespace krein
