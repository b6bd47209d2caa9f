#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "krein/krein_frames.h"

namespace cli {

// Exit codes of every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalid = 2;

/// Input rejected before any analysis ran. `where` is a field path or a
/// line:column position.
struct InvalidInput : std::runtime_error {
  InvalidInput(std::string where, const std::string& what)
      : std::runtime_error(what), where(std::move(where)) {}
  std::string where;
};

/// A library call failed; carries the C status.
struct LibraryError : std::runtime_error {
  LibraryError(kf_status status, const std::string& what)
      : std::runtime_error(what), status(status) {}
  kf_status status;
};

void check(kf_status status, const char* call);

struct SpaceDeleter { void operator()(kf_space* p) const { kf_space_free(p); } };
struct SubspaceDeleter { void operator()(kf_subspace* p) const { kf_subspace_free(p); } };
struct FamilyDeleter { void operator()(kf_family* p) const { kf_family_free(p); } };

using SpacePtr = std::unique_ptr<kf_space, SpaceDeleter>;
using SubspacePtr = std::unique_ptr<kf_subspace, SubspaceDeleter>;
using FamilyPtr = std::unique_ptr<kf_family, FamilyDeleter>;

using Matrix = std::vector<std::vector<double>>;

struct SubspaceEntry {
  std::string name;
  std::vector<std::vector<double>> span;
  double weight = 1.0;
  std::optional<std::string> group;
};

struct Problem {
  std::size_t dimension = 0;
  std::vector<int> signs;   // set for diagonal symmetries
  Matrix symmetry_rows;     // set for matrix symmetries
  std::vector<SubspaceEntry> subspaces;
  double tolerance = 1e-9;
  std::string variant = "jsa";
  std::optional<Matrix> operator_a;
  std::optional<Matrix> operator_b;
  std::string digest;  // FNV-1a of the raw bytes
};

std::string read_file(const std::string& path);
std::string fnv1a_hex(const std::string& bytes);

/// Parses and validates a problem file. Throws InvalidInput.
Problem parse_problem(const std::string& text);
/// A bare row-major matrix or an object with a "rows" field.
Matrix parse_matrix_json(const nlohmann::json& j, const std::string& where);

SpacePtr make_space(const Problem& p);
SubspacePtr make_subspace(const kf_space* space, const SubspaceEntry& e);

/// Family of the entries whose indices are listed, in order.
FamilyPtr make_family(const kf_space* space, const Problem& p,
                      const std::vector<std::size_t>& indices, double tol);

kf_variant parse_variant(const std::string& name);

}  // namespace cli
