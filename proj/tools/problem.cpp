#include "problem.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace cli {

using nlohmann::json;

void check(kf_status status, const char* call) {
  if (status != KF_OK) {
    throw LibraryError(status, std::string(call) + ": " + kf_last_error());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(where, std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw InvalidInput(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InvalidInput(where, "expected a finite number");
  return v;
}

std::vector<double> vector_of(const json& j, std::size_t n,
                              const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where, "expected an array of numbers");
  if (j.size() != n) {
    throw InvalidInput(where, "expected " + std::to_string(n) + " entries, got " +
                                  std::to_string(j.size()));
  }
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Matrix square(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where, "expected an array of rows");
  if (j.size() != n) {
    throw InvalidInput(where, "expected " + std::to_string(n) + " rows, got " +
                                  std::to_string(j.size()));
  }
  Matrix m;
  for (std::size_t r = 0; r < n; ++r) {
    m.push_back(vector_of(j[r], n, where + "[" + std::to_string(r) + "]"));
  }
  return m;
}

std::vector<double> flatten(const Matrix& m) {
  std::vector<double> out;
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

Matrix parse_matrix_json(const json& j, const std::string& where) {
  const json& rows = j.is_object() ? field(j, "rows", where) : j;
  const std::string at = j.is_object() ? where + ".rows" : where;
  if (!rows.is_array() || rows.empty()) {
    throw InvalidInput(at, "expected a non-empty array of rows");
  }
  return square(rows, rows.size(), at);
}

Problem parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(line_column(text, e.byte == 0 ? 0 : e.byte - 1),
                       "malformed JSON");
  }
  if (!doc.is_object()) throw InvalidInput("$", "expected a JSON object");

  Problem p;
  p.digest = fnv1a_hex(text);
  const json& dim = field(doc, "dimension", "$");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) {
    throw InvalidInput("dimension", "expected a positive integer");
  }
  p.dimension = dim.get<std::size_t>();
  const std::size_t n = p.dimension;

  const json& sym = field(doc, "symmetry", "$");
  if (!sym.is_object()) throw InvalidInput("symmetry", "expected an object");
  const json& type = field(sym, "type", "symmetry");
  if (type == "diagonal") {
    const json& signs = field(sym, "signs", "symmetry");
    const auto values = vector_of(signs, n, "symmetry.signs");
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i] != 1.0 && values[i] != -1.0) {
        throw InvalidInput("symmetry.signs[" + std::to_string(i) + "]",
                           "expected +1 or -1");
      }
      p.signs.push_back(static_cast<int>(values[i]));
    }
  } else if (type == "matrix") {
    p.symmetry_rows = square(field(sym, "rows", "symmetry"), n, "symmetry.rows");
  } else {
    throw InvalidInput("symmetry.type", "expected \"diagonal\" or \"matrix\"");
  }

  const json& subs = field(doc, "subspaces", "$");
  if (!subs.is_array()) throw InvalidInput("subspaces", "expected an array");
  std::set<std::string> names;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const std::string at = "subspaces[" + std::to_string(i) + "]";
    const json& s = subs[i];
    if (!s.is_object()) throw InvalidInput(at, "expected an object");
    SubspaceEntry e;
    const json& name = field(s, "name", at);
    if (!name.is_string()) throw InvalidInput(at + ".name", "expected a string");
    e.name = name.get<std::string>();
    if (!names.insert(e.name).second) {
      throw InvalidInput(at + ".name", "duplicate name \"" + e.name + "\"");
    }
    const json& span = field(s, "span", at);
    if (!span.is_array() || span.empty()) {
      throw InvalidInput(at + ".span", "expected a non-empty array of vectors");
    }
    for (std::size_t k = 0; k < span.size(); ++k) {
      e.span.push_back(
          vector_of(span[k], n, at + ".span[" + std::to_string(k) + "]"));
    }
    e.weight = s.contains("weight") ? number(s["weight"], at + ".weight") : 1.0;
    if (!(e.weight > 0.0)) throw InvalidInput(at + ".weight", "weight must be positive");
    if (s.contains("group")) {
      if (!s["group"].is_string()) throw InvalidInput(at + ".group", "expected a string");
      e.group = s["group"].get<std::string>();
    }
    p.subspaces.push_back(std::move(e));
  }

  if (doc.contains("options")) {
    const json& opt = doc["options"];
    if (!opt.is_object()) throw InvalidInput("options", "expected an object");
    if (opt.contains("tolerance")) {
      p.tolerance = number(opt["tolerance"], "options.tolerance");
      if (!(p.tolerance > 0.0)) {
        throw InvalidInput("options.tolerance", "tolerance must be positive");
      }
    }
    if (opt.contains("variant")) {
      if (!opt["variant"].is_string()) {
        throw InvalidInput("options.variant", "expected a string");
      }
      p.variant = opt["variant"].get<std::string>();
      if (p.variant != "literal" && p.variant != "jsa") {
        throw InvalidInput("options.variant", "expected \"literal\" or \"jsa\"");
      }
    }
  }

  if (doc.contains("operators")) {
    const json& ops = doc["operators"];
    if (!ops.is_object()) throw InvalidInput("operators", "expected an object");
    if (ops.contains("a")) p.operator_a = parse_matrix_json(ops["a"], "operators.a");
    if (ops.contains("b")) p.operator_b = parse_matrix_json(ops["b"], "operators.b");
  }
  return p;
}

SpacePtr make_space(const Problem& p) {
  kf_space* s = nullptr;
  kf_status st;
  if (!p.signs.empty()) {
    st = kf_space_from_signs(p.signs.data(), p.signs.size(), &s);
  } else {
    const auto rows = flatten(p.symmetry_rows);
    st = kf_space_from_matrix(rows.data(), p.dimension, p.tolerance, &s);
  }
  if (st != KF_OK) throw InvalidInput("symmetry", kf_last_error());
  return SpacePtr(s);
}

SubspacePtr make_subspace(const kf_space* space, const SubspaceEntry& e) {
  const auto vectors = flatten(e.span);
  kf_subspace* w = nullptr;
  check(kf_subspace_span(space, vectors.data(), e.span.size(), 1e-10, &w),
        "span");
  return SubspacePtr(w);
}

FamilyPtr make_family(const kf_space* space, const Problem& p,
                      const std::vector<std::size_t>& indices, double tol) {
  std::vector<SubspacePtr> owned;
  std::vector<const kf_subspace*> members;
  std::vector<double> weights;
  for (auto i : indices) {
    owned.push_back(make_subspace(space, p.subspaces[i]));
    members.push_back(owned.back().get());
    weights.push_back(p.subspaces[i].weight);
  }
  kf_family* f = nullptr;
  const kf_status st =
      kf_family_create(space, members.data(), weights.data(), members.size(), tol, &f);
  if (st == KF_ERR_INDEFINITE_MEMBER || st == KF_ERR_ZERO_MEMBER ||
      st == KF_ERR_NON_POSITIVE_WEIGHT || st == KF_ERR_EMPTY_FAMILY) {
    throw InvalidInput("subspaces", kf_last_error());
  }
  check(st, "family");
  return FamilyPtr(f);
}

kf_variant parse_variant(const std::string& name) {
  if (name == "literal") return KF_VARIANT_LITERAL;
  if (name == "jsa") return KF_VARIANT_JSA;
  throw InvalidInput("--variant", "expected \"literal\" or \"jsa\"");
}

}  // namespace cli
