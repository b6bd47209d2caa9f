#pragma once

#include <stdexcept>
#include <string>

namespace krein {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotSymmetric,
  NotAnInvolution,
  ZeroSubspace,
  AllNeutral,
  NotUniformlyDefinite,
  DegenerateSubspace,
  IndefiniteMember,
  NonPositiveWeight,
  ZeroMember,
  BadIndex,
  MismatchedFamilies,
  SingularFrameOperator,
  EmptyFamily,
  InfeasibleRequest,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace krein
