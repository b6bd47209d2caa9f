#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "problem.hpp"

namespace cli {

using nlohmann::json;

namespace {

// Residual thresholds of the assertable checks.
constexpr double kIdentityResidual = 1e-8;
constexpr double kIdentityOperatorResidual = 1e-9;

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

struct Context {
  Problem problem;
  SpacePtr space;
  double tol = 1e-9;
  std::string variant_name;
  kf_variant variant = KF_VARIANT_JSA;
  kf_analysis_options analysis{};
};

kf_projection_mode parse_projection(const std::string& name) {
  if (name == "ambient") return KF_PROJECTION_AMBIENT;
  if (name == "j-orthogonal") return KF_PROJECTION_J_ORTHOGONAL;
  throw InvalidInput("--projection", "expected \"ambient\" or \"j-orthogonal\"");
}

Context load(const Options& o) {
  if (o.file.empty()) throw InvalidInput("--file", "a problem file is required");
  Context c;
  c.problem = parse_problem(read_file(o.file));
  c.tol = o.tol.value_or(c.problem.tolerance);
  if (!(c.tol > 0.0)) throw InvalidInput("--tol", "tolerance must be positive");
  c.variant_name = o.variant.value_or(c.problem.variant);
  c.variant = parse_variant(c.variant_name);
  c.analysis.tol = c.tol;
  c.analysis.mode = parse_projection(o.projection);
  c.space = make_space(c.problem);
  return c;
}

json header(const Context& c, const std::string& command) {
  return json{{"tool", {{"name", "krein-frames"}, {"version", kf_version()}}},
              {"command", command},
              {"input_digest", "fnv1a64:" + c.problem.digest},
              {"variant", c.variant_name},
              {"tolerance", c.tol},
              {"diagnostics", json::array()}};
}

std::vector<std::size_t> all_indices(const Problem& p) {
  std::vector<std::size_t> out(p.subspaces.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

json matrix_json(const std::vector<double>& data, std::size_t rows,
                 std::size_t cols) {
  json m = json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    json row = json::array();
    for (std::size_t k = 0; k < cols; ++k) row.push_back(data[r * cols + k]);
    m.push_back(row);
  }
  return m;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

struct Analysis {
  kf_frame_analysis value{};
  std::vector<std::size_t> modulus_active;
};

Analysis analyze(const kf_family* f, const kf_analysis_options& opts) {
  Analysis a;
  a.modulus_active.resize(kf_family_size(f));
  check(kf_family_analyze(f, &opts, &a.value, a.modulus_active.data(),
                          a.modulus_active.size()),
        "analyze");
  a.modulus_active.resize(a.value.modulus_active_count);
  return a;
}

json analysis_json(const Analysis& a, kf_projection_mode mode) {
  const kf_frame_analysis& v = a.value;
  return json{{"is_j_fusion_frame", v.is_j_fusion_frame != 0},
              {"m_plus_class", kf_class_name(v.m_plus_class)},
              {"m_minus_class", kf_class_name(v.m_minus_class)},
              {"a_plus", v.a_plus},
              {"b_plus", v.b_plus},
              {"a_minus", v.a_minus},
              {"b_minus", v.b_minus},
              {"tight_plus", v.tight_plus != 0},
              {"tight_minus", v.tight_minus != 0},
              {"parseval_on_span", v.parseval_on_span != 0},
              {"parseval", v.parseval != 0},
              {"alpha_plus", v.alpha_plus},
              {"beta_plus", v.beta_plus},
              {"zeta", v.zeta},
              {"modulus_active", a.modulus_active},
              {"projection", mode == KF_PROJECTION_AMBIENT ? "ambient" : "j-orthogonal"}};
}

json members_json(const kf_family* f, const std::vector<std::string>& names) {
  json out = json::array();
  for (std::size_t i = 0; i < kf_family_size(f); ++i) {
    kf_subspace* w = nullptr;
    double weight = 0;
    int sign = 0;
    check(kf_family_member(f, i, &w, &weight, &sign), "member");
    SubspacePtr owned(w);
    json m{{"index", i},
           {"weight", weight},
           {"sign", sign},
           {"dimension", kf_subspace_dimension(w)}};
    if (i < names.size()) m["name"] = names[i];
    out.push_back(m);
  }
  return out;
}

std::vector<std::string> names_of(const Problem& p,
                                  const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(p.subspaces[i].name);
  return out;
}

json frame_operator_json(const Context& c, const kf_family* f,
                         kf_variant variant) {
  const std::size_t n = c.problem.dimension;
  std::vector<double> s(n * n);
  check(kf_family_frame_operator(f, variant, s.data()), "frame operator");
  double residual = 0;
  check(kf_j_selfadjoint_residual(c.space.get(), s.data(), &residual),
        "residual");
  return json{{"matrix", matrix_json(s, n, n)},
              {"j_selfadjoint_residual", residual},
              {"j_selfadjoint", residual <= c.tol}};
}

int flag(const kf_family* f, double tol,
         kf_status (*pred)(const kf_family*, double, int*)) {
  int out = 0;
  check(pred(f, tol, &out), "predicate");
  return out;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "n/a";
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

// Two disjoint index lists from the "group" fields, in order of first
// appearance. Without groups, union splits by member sign.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_groups(
    const Context& c, bool allow_sign_split, std::string* labels) {
  const auto& subs = c.problem.subspaces;
  const bool any = std::any_of(subs.begin(), subs.end(),
                               [](const auto& e) { return e.group.has_value(); });
  std::vector<std::size_t> first, second;
  if (!any) {
    if (!allow_sign_split) {
      throw InvalidInput("subspaces", "every subspace needs a \"group\" field");
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
      kf_subspace_class cls;
      SubspacePtr w = make_subspace(c.space.get(), subs[i]);
      check(kf_subspace_classify(w.get(), c.tol, &cls), "classify");
      (cls == KF_CLASS_UNIFORMLY_NEGATIVE ? second : first).push_back(i);
    }
    *labels = "sign";
  } else {
    std::vector<std::string> order;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!subs[i].group) {
        throw InvalidInput("subspaces[" + std::to_string(i) + "].group",
                           "missing while other subspaces are grouped");
      }
      if (std::find(order.begin(), order.end(), *subs[i].group) == order.end())
        order.push_back(*subs[i].group);
    }
    if (order.size() != 2) {
      throw InvalidInput("subspaces", "expected exactly two groups, found " +
                                          std::to_string(order.size()));
    }
    for (std::size_t i = 0; i < subs.size(); ++i)
      (*subs[i].group == order[0] ? first : second).push_back(i);
    *labels = order[0] + "," + order[1];
  }
  if (first.empty() || second.empty()) {
    throw InvalidInput("subspaces", "both parts must be non-empty");
  }
  return {first, second};
}

Outcome check_onb(const Context& c, json r) {
  FamilyPtr f = make_family(c.space.get(), c.problem, all_indices(c.problem), c.tol);
  const int onb = flag(f.get(), c.tol, kf_family_is_onb);
  const Analysis a = analyze(f.get(), c.analysis);
  r["which"] = "onb";
  r["result"] = {{"is_onb_of_subspaces", onb != 0},
                 {"analysis", analysis_json(a, c.analysis.mode)}};
  r["verdict"] = onb != 0;
  return {r, onb ? kExitPass : kExitFail,
          "onb: " + yes(onb) + ", parseval: " + yes(a.value.parseval) +
              ", zeta " + fmt(a.value.zeta)};
}

Outcome check_union(const Context& c, json r) {
  std::string labels;
  const auto [i1, i2] = split_groups(c, true, &labels);
  FamilyPtr f1 = make_family(c.space.get(), c.problem, i1, c.tol);
  FamilyPtr f2 = make_family(c.space.get(), c.problem, i2, c.tol);
  kf_family* u = nullptr;
  check(kf_family_combine(f1.get(), f2.get(), c.tol, &u), "combine");
  FamilyPtr uni(u);
  const Analysis a1 = analyze(f1.get(), c.analysis);
  const Analysis a2 = analyze(f2.get(), c.analysis);
  const Analysis au = analyze(uni.get(), c.analysis);
  const int strict = flag(uni.get(), c.tol, kf_family_is_strictly_disjoint);
  const int disjoint = flag(uni.get(), c.tol, kf_family_is_disjoint);
  const bool hypotheses = a1.value.parseval && a2.value.parseval && strict;
  std::vector<std::size_t> order = i1;
  order.insert(order.end(), i2.begin(), i2.end());
  r["which"] = "union";
  r["result"] = {{"split", labels},
                 {"first", {{"members", names_of(c.problem, i1)},
                            {"analysis", analysis_json(a1, c.analysis.mode)}}},
                 {"second", {{"members", names_of(c.problem, i2)},
                             {"analysis", analysis_json(a2, c.analysis.mode)}}},
                 {"union", {{"members", names_of(c.problem, order)},
                            {"analysis", analysis_json(au, c.analysis.mode)},
                            {"disjoint", disjoint != 0},
                            {"strictly_disjoint", strict != 0}}},
                 {"hypotheses_hold", hypotheses}};
  const bool ok = au.value.parseval != 0;
  if (ok && !strict) {
    r["diagnostics"].push_back(
        "union is Parseval although the parts are not strictly disjoint");
  }
  if (hypotheses && !ok) {
    r["diagnostics"].push_back("parts are Parseval and strictly disjoint but the union is not");
  }
  r["verdict"] = ok;
  return {r, ok ? kExitPass : kExitFail,
          "union parseval: " + yes(ok) + ", strictly disjoint: " + yes(strict)};
}

Outcome check_sum(const Context& c, json r) {
  std::string labels;
  const auto [ix, iy] = split_groups(c, false, &labels);
  FamilyPtr fx = make_family(c.space.get(), c.problem, ix, c.tol);
  FamilyPtr fy = make_family(c.space.get(), c.problem, iy, c.tol);
  int holds = 0;
  double residual = 0;
  const kf_status st = kf_family_cross_term(fx.get(), fy.get(), c.tol, &holds, &residual);
  if (st == KF_ERR_MISMATCHED_FAMILIES) throw InvalidInput("subspaces", kf_last_error());
  check(st, "cross term");
  const Analysis ax = analyze(fx.get(), c.analysis);
  const Analysis ay = analyze(fy.get(), c.analysis);
  r["which"] = "sum";
  json result{{"groups", labels},
              {"x", analysis_json(ax, c.analysis.mode)},
              {"y", analysis_json(ay, c.analysis.mode)},
              {"cross_term_condition", holds != 0},
              {"cross_term_residual", residual}};
  const bool hypotheses = ax.value.parseval && ay.value.parseval && holds;
  result["hypotheses_hold"] = hypotheses;

  kf_family* s = nullptr;
  const kf_status sst = kf_family_sum(fx.get(), fy.get(), c.tol, &s);
  bool ok = false;
  if (sst == KF_OK) {
    FamilyPtr sum(s);
    const Analysis as = analyze(sum.get(), c.analysis);
    result["sum"] = {{"members", members_json(sum.get(), {})},
                     {"analysis", analysis_json(as, c.analysis.mode)}};
    ok = as.value.parseval != 0;
  } else if (sst == KF_ERR_INDEFINITE_MEMBER) {
    result["sum"] = nullptr;
    r["diagnostics"].push_back(std::string("sum family: ") + kf_last_error());
  } else {
    check(sst, "sum");
  }
  if (hypotheses && !ok) {
    r["diagnostics"].push_back(
        "cross-term condition holds for Parseval parts but the sum is not Parseval");
  }
  r["result"] = result;
  r["verdict"] = ok;
  return {r, ok ? kExitPass : kExitFail,
          "sum parseval: " + yes(ok) + ", cross-term condition: " + yes(holds) +
              " (residual " + fmt(residual) + ")"};
}

json identity_json(const kf_identity_report& v) {
  return json{{"lhs_direct", v.lhs_direct},
              {"rhs_direct", v.rhs_direct},
              {"lhs_projection", v.lhs_projection},
              {"rhs_projection", v.rhs_projection},
              {"residual_direct", v.residual_direct},
              {"residual_projection", v.residual_projection},
              {"residual_forms", v.residual_forms},
              {"operator_residual", v.operator_residual}};
}

Outcome check_identity(const Context& c, const Options& o, json r) {
  const bool single = o.subset_set || !o.vector.empty();
  if (single && o.trials) {
    throw InvalidInput("--trials", "cannot be combined with --subset/--vector");
  }
  if (!single && !o.trials) {
    throw InvalidInput("--which identity", "needs --subset and --vector, or --trials");
  }
  FamilyPtr f = make_family(c.space.get(), c.problem, all_indices(c.problem), c.tol);
  const std::size_t n = c.problem.dimension;
  const std::size_t m = kf_family_size(f.get());

  auto run = [&](const std::vector<std::size_t>& subset,
                 const std::vector<double>& x) {
    kf_identity_report rep{};
    const kf_status st = kf_family_identity_check(
        f.get(), subset.data(), subset.size(), x.data(), c.variant, c.tol, &rep);
    if (st == KF_ERR_BAD_INDEX) throw InvalidInput("--subset", kf_last_error());
    check(st, "identity");
    return rep;
  };

  double max_direct = 0, max_projection = 0, max_operator = 0;
  json result;
  if (single) {
    if (!o.subset_set) throw InvalidInput("--subset", "required with --vector");
    if (o.vector.size() != n) {
      throw InvalidInput("--vector", "expected " + std::to_string(n) +
                                         " entries, got " + std::to_string(o.vector.size()));
    }
    const kf_identity_report rep = run(o.subset, o.vector);
    max_direct = rep.residual_direct;
    max_projection = rep.residual_projection;
    max_operator = rep.operator_residual;
    result = identity_json(rep);
    result["subset"] = o.subset;
    result["vector"] = o.vector;
  } else {
    if (*o.trials == 0) throw InvalidInput("--trials", "must be positive");
    std::mt19937_64 rng(o.seed);
    std::bernoulli_distribution coin(0.5);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t t = 0; t < *o.trials; ++t) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < m; ++i)
        if (coin(rng)) subset.push_back(i);
      std::vector<double> x(n);
      for (auto& v : x) v = normal(rng);
      const kf_identity_report rep = run(subset, x);
      max_direct = std::max(max_direct, rep.residual_direct);
      max_projection = std::max(max_projection, rep.residual_projection);
      max_operator = std::max(max_operator, rep.operator_residual);
    }
    result = {{"trials", *o.trials},
              {"seed", o.seed},
              {"max_residual_direct", max_direct},
              {"max_residual_projection", max_projection},
              {"max_operator_residual", max_operator}};
  }
  const bool asserted = c.variant == KF_VARIANT_JSA;
  const bool ok = max_direct <= kIdentityResidual &&
                  max_operator <= kIdentityOperatorResidual;
  result["asserted"] = asserted;
  result["thresholds"] = {{"residual_direct", kIdentityResidual},
                          {"operator_residual", kIdentityOperatorResidual}};
  if (!asserted) {
    r["diagnostics"].push_back(
        "identity residuals are reported but not asserted for the literal variant");
  }
  r["diagnostics"].push_back("residual_projection is a diagnostic baseline and is not asserted");
  r["which"] = "identity";
  r["result"] = result;
  r["verdict"] = asserted ? json(ok) : json(nullptr);
  return {r, (!asserted || ok) ? kExitPass : kExitFail,
          "identity: max residual_direct " + fmt(max_direct) + ", max operator residual " +
              fmt(max_operator) + (asserted ? "" : " (not asserted)")};
}

Outcome check_bessel(const Context& c, json r) {
  std::vector<SubspacePtr> owned;
  std::vector<const kf_subspace*> members;
  std::vector<double> weights;
  for (const auto& e : c.problem.subspaces) {
    owned.push_back(make_subspace(c.space.get(), e));
    members.push_back(owned.back().get());
    weights.push_back(e.weight);
  }
  kf_bessel_report b{};
  const kf_status st = kf_bessel_check(c.space.get(), members.data(), weights.data(),
                                       members.size(), c.tol, &b);
  if (st == KF_ERR_EMPTY_FAMILY || st == KF_ERR_NON_POSITIVE_WEIGHT) {
    throw InvalidInput("subspaces", kf_last_error());
  }
  check(st, "bessel");
  r["which"] = "bessel";
  r["result"] = {{"holds", b.holds != 0},
                 {"lower", b.lower},
                 {"upper", b.upper},
                 {"deficiency_class", kf_class_name(b.deficiency_class)},
                 {"deficiency_gamma", b.deficiency_gamma},
                 {"dimension", b.dimension},
                 {"isotropic_dimension", b.isotropic_dimension},
                 {"nonnegative", b.nonnegative != 0}};
  r["verdict"] = b.holds != 0;
  return {r, b.holds ? kExitPass : kExitFail,
          std::string("bessel inequality: ") + yes(b.holds) + ", deficiency part " +
              kf_class_name(b.deficiency_class)};
}

Outcome check_dual(const Context& c, json r) {
  FamilyPtr f = make_family(c.space.get(), c.problem, all_indices(c.problem), c.tol);
  kf_family* d = nullptr;
  kf_dual_diagnostics diag{nan(), nan()};
  const kf_status st = kf_family_canonical_dual(f.get(), c.variant, c.tol, &d, &diag);
  r["which"] = "dual";
  if (st == KF_ERR_SINGULAR_FRAME_OPERATOR || st == KF_ERR_INDEFINITE_MEMBER) {
    r["diagnostics"].push_back(kf_last_error());
    r["result"] = nullptr;
    r["verdict"] = false;
    return {r, kExitFail, std::string("dual: ") + kf_last_error()};
  }
  check(st, "dual");
  FamilyPtr dual(d);
  const Analysis a = analyze(dual.get(), c.analysis);
  r["result"] = {{"members", members_json(dual.get(), names_of(c.problem, all_indices(c.problem)))},
                 {"analysis", analysis_json(a, c.analysis.mode)},
                 {"frame_operator", frame_operator_json(c, dual.get(), c.variant)},
                 {"operator_residual", diag.operator_residual},
                 {"condition_number", diag.condition_number}};
  r["diagnostics"].push_back(
      "operator_residual compares the dual frame operator with the inverse and is not asserted");
  const bool ok = a.value.is_j_fusion_frame != 0;
  r["verdict"] = ok;
  return {r, ok ? kExitPass : kExitFail,
          "dual is a J-fusion frame: " + yes(ok) + ", |S_dual - S^-1| " +
              fmt(diag.operator_residual)};
}

Outcome check_douglas(const Options& o) {
  std::optional<Problem> p;
  std::string bytes;
  if (!o.file.empty()) {
    bytes = read_file(o.file);
    p = parse_problem(bytes);
  }
  auto operand = [&](const std::string& path, const std::optional<Matrix>& fallback,
                     const char* name) {
    if (!path.empty()) {
      const std::string text = read_file(path);
      bytes += text;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error&) {
        throw InvalidInput(path, "malformed JSON");
      }
      return parse_matrix_json(j, path);
    }
    if (fallback) return *fallback;
    throw InvalidInput(std::string("--") + name,
                       std::string("operator ") + name + " is required");
  };
  const Matrix a = operand(o.a_file, p ? p->operator_a : std::nullopt, "a");
  const Matrix b = operand(o.b_file, p ? p->operator_b : std::nullopt, "b");
  if (a.size() != b.size()) {
    throw InvalidInput("operators", "a and b must have the same size");
  }
  const double tol = o.tol.value_or(p ? p->tolerance : 1e-9);
  std::vector<double> fa, fb;
  for (const auto& row : a) fa.insert(fa.end(), row.begin(), row.end());
  for (const auto& row : b) fb.insert(fb.end(), row.begin(), row.end());
  kf_douglas_report d{};
  check(kf_douglas_check(a.size(), fa.data(), fb.data(), tol, &d), "douglas");

  json r{{"tool", {{"name", "krein-frames"}, {"version", kf_version()}}},
         {"command", "check"},
         {"which", "douglas"},
         {"input_digest", "fnv1a64:" + fnv1a_hex(bytes)},
         {"variant", p ? p->variant : std::string("jsa")},
         {"tolerance", tol},
         {"diagnostics", json::array()}};
  r["result"] = {{"range_inclusion", d.range_inclusion != 0},
                 {"lambda", d.lambda},
                 {"factor_exists", d.factor_exists != 0},
                 {"consistent", d.consistent != 0},
                 {"factor_residual", d.factor_residual}};
  r["verdict"] = d.consistent != 0;
  return {r, d.consistent ? kExitPass : kExitFail,
          "douglas: inclusion " + yes(d.range_inclusion) + ", lambda " + fmt(d.lambda) +
              ", routes agree: " + yes(d.consistent)};
}

}  // namespace

Outcome cmd_classify(const Options& o) {
  Context c = load(o);
  json r = header(c, "classify");
  json subs = json::array();
  std::ostringstream summary;
  for (const auto& e : c.problem.subspaces) {
    SubspacePtr w = make_subspace(c.space.get(), e);
    const std::size_t d = kf_subspace_dimension(w.get());
    kf_subspace_class cls;
    check(kf_subspace_classify(w.get(), c.tol, &cls), "classify");
    json entry{{"name", e.name}, {"dimension", d}, {"class", kf_class_name(cls)}};
    std::vector<double> eig(d);
    if (d > 0) check(kf_subspace_gram_eigenvalues(w.get(), eig.data()), "gramian");
    entry["gram_eigenvalues"] = eig;
    double gamma = nan();
    if (d > 0 && cls != KF_CLASS_NEUTRAL) {
      check(kf_subspace_reduced_min_modulus(w.get(), c.tol, &gamma), "gamma");
    }
    entry["gamma"] = gamma;
    double c0 = nan();
    if (cls == KF_CLASS_UNIFORMLY_POSITIVE || cls == KF_CLASS_UNIFORMLY_NEGATIVE) {
      check(kf_subspace_cone_angle(w.get(), c.tol, &c0), "cone angle");
      int maximal = 0;
      check(kf_subspace_is_maximal(w.get(), cls == KF_CLASS_UNIFORMLY_POSITIVE ? 1 : -1,
                                   c.tol, &maximal),
            "maximal");
      entry["maximal"] = maximal != 0;
    } else {
      entry["maximal"] = false;
    }
    entry["cone_angle"] = c0;
    subs.push_back(entry);
    summary << e.name << ": " << kf_class_name(cls) << ", gamma " << fmt(gamma) << "\n";
  }
  std::size_t kp = 0, km = 0;
  check(kf_space_inertia(c.space.get(), &kp, &km), "inertia");
  r["space"] = {{"dimension", c.problem.dimension}, {"kappa_plus", kp}, {"kappa_minus", km}};
  r["result"] = {{"subspaces", subs}};
  std::string text = summary.str();
  if (!text.empty()) text.pop_back();
  return {r, kExitPass, text};
}

Outcome cmd_analyze(const Options& o) {
  Context c = load(o);
  json r = header(c, "analyze");
  const auto idx = all_indices(c.problem);
  FamilyPtr f = make_family(c.space.get(), c.problem, idx, c.tol);
  const Analysis a = analyze(f.get(), c.analysis);
  json result = analysis_json(a, c.analysis.mode);
  result["members"] = members_json(f.get(), names_of(c.problem, idx));
  result["frame_operator"] = frame_operator_json(c, f.get(), c.variant);
  result["onb_of_subspaces"] = flag(f.get(), c.tol, kf_family_is_onb) != 0;
  result["disjoint"] = flag(f.get(), c.tol, kf_family_is_disjoint) != 0;
  result["strictly_disjoint"] =
      flag(f.get(), c.tol, kf_family_is_strictly_disjoint) != 0;
  if (!a.modulus_active.empty()) {
    r["diagnostics"].push_back(
        "some members change sign of [pi_W f, f] on their aggregate; bounds use the modulus");
  }
  r["result"] = result;
  const bool ok = a.value.is_j_fusion_frame != 0;
  r["verdict"] = ok;
  return {r, ok ? kExitPass : kExitFail,
          "J-fusion frame: " + yes(ok) + ", parseval: " + yes(a.value.parseval) +
              ", A+ " + fmt(a.value.a_plus) + ", B+ " + fmt(a.value.b_plus) +
              ", A- " + fmt(a.value.a_minus) + ", B- " + fmt(a.value.b_minus) +
              ", zeta " + fmt(a.value.zeta)};
}

Outcome cmd_check(const Options& o) {
  if (o.which == "douglas") return check_douglas(o);
  static const char* known[] = {"onb", "union", "sum", "identity", "bessel", "dual"};
  if (std::find(std::begin(known), std::end(known), o.which) == std::end(known)) {
    throw InvalidInput("--which",
                       "expected onb, union, sum, identity, bessel, douglas or dual");
  }
  Context c = load(o);
  json r = header(c, "check");
  if (o.which == "onb") return check_onb(c, r);
  if (o.which == "union") return check_union(c, r);
  if (o.which == "sum") return check_sum(c, r);
  if (o.which == "identity") return check_identity(c, o, r);
  if (o.which == "bessel") return check_bessel(c, r);
  return check_dual(c, r);
}

Outcome cmd_random(const Options& o) {
  if (o.signs.empty()) throw InvalidInput("--signs", "required, e.g. --signs 1,1,-1");
  if (o.variant) parse_variant(*o.variant);
  if (o.dimension && *o.dimension != o.signs.size()) {
    throw InvalidInput("--dimension", "does not match the number of signs");
  }
  if (o.members.size() != 2) {
    throw InvalidInput("--members", "expected two counts: positive,negative");
  }
  kf_space* raw = nullptr;
  if (kf_space_from_signs(o.signs.data(), o.signs.size(), &raw) != KF_OK) {
    throw InvalidInput("--signs", kf_last_error());
  }
  SpacePtr space(raw);
  std::size_t kp = 0, km = 0;
  check(kf_space_inertia(space.get(), &kp, &km), "inertia");
  const std::size_t pos = o.members[0], neg = o.members[1];
  std::vector<std::size_t> dims = o.dims;
  if (dims.empty()) {
    // Spread each inertia count over the members of that sign.
    for (std::size_t i = 0; i < pos; ++i)
      dims.push_back(std::max<std::size_t>(1, kp / pos + (i < kp % pos ? 1 : 0)));
    for (std::size_t i = 0; i < neg; ++i)
      dims.push_back(std::max<std::size_t>(1, km / neg + (i < km % neg ? 1 : 0)));
  }
  kf_family* f = nullptr;
  const kf_status st = kf_random_family(space.get(), pos, neg, dims.data(), dims.size(),
                                        o.seed, o.boost, 1, &f);
  if (st == KF_ERR_INFEASIBLE_REQUEST || st == KF_ERR_INVALID_ARGUMENT) {
    throw InvalidInput("--members", kf_last_error());
  }
  check(st, "random");
  FamilyPtr family(f);

  const std::size_t n = o.signs.size();
  json subs = json::array();
  for (std::size_t i = 0; i < kf_family_size(f); ++i) {
    kf_subspace* w = nullptr;
    double weight = 0;
    check(kf_family_member(f, i, &w, &weight, nullptr), "member");
    SubspacePtr owned(w);
    const std::size_t d = kf_subspace_dimension(w);
    std::vector<double> basis(n * d);
    check(kf_subspace_basis(w, basis.data()), "basis");
    json span = json::array();
    for (std::size_t k = 0; k < d; ++k) {
      json v = json::array();
      for (std::size_t r = 0; r < n; ++r) v.push_back(basis[r * d + k]);
      span.push_back(v);
    }
    subs.push_back({{"name", "W" + std::to_string(i + 1)}, {"span", span}, {"weight", weight}});
  }
  json r{{"dimension", n},
         {"symmetry", {{"type", "diagonal"}, {"signs", o.signs}}},
         {"subspaces", subs},
         {"options", {{"tolerance", o.tol.value_or(1e-9)},
                      {"variant", o.variant.value_or("jsa")}}},
         {"generator", {{"tool", "krein-frames"},
                        {"version", kf_version()},
                        {"seed", o.seed},
                        {"members", o.members},
                        {"dims", dims},
                        {"boost", o.boost}}}};
  return {r, kExitPass,
          "random family: " + std::to_string(pos) + " positive, " + std::to_string(neg) +
              " negative members, seed " + std::to_string(o.seed)};
}

}  // namespace cli
