#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace popuc {

/// Broad category of a failure. The CLI maps these onto exit codes.
enum class ErrorCategory {
  Config,     ///< malformed input or parameters out of range
  Numerical,  ///< a computation could not meet its tolerance
  Verification,
};

/// Base class of every error thrown by the library. `name()` is the
/// machine-readable identifier written into CLI error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string name, ErrorCategory category, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)), category_(category) {}

  const std::string& name() const noexcept { return name_; }
  ErrorCategory category() const noexcept { return category_; }

 private:
  std::string name_;
  ErrorCategory category_;
};

#define POPUC_DEFINE_ERROR(Type, Category)                       \
  class Type : public Error {                                    \
   public:                                                       \
    explicit Type(const std::string& message)                    \
        : Error(#Type, ErrorCategory::Category, message) {}      \
  };

POPUC_DEFINE_ERROR(DomainError, Config)
POPUC_DEFINE_ERROR(DegreeError, Config)
POPUC_DEFINE_ERROR(UnsupportedFamily, Config)
POPUC_DEFINE_ERROR(NotUnimodular, Config)
POPUC_DEFINE_ERROR(DiskViolation, Config)
POPUC_DEFINE_ERROR(IndexMismatch, Config)
POPUC_DEFINE_ERROR(ConfigError, Config)

POPUC_DEFINE_ERROR(PoleError, Numerical)
POPUC_DEFINE_ERROR(QuadratureError, Numerical)
POPUC_DEFINE_ERROR(NotPositiveDefinite, Numerical)
POPUC_DEFINE_ERROR(SingularGram, Numerical)
POPUC_DEFINE_ERROR(DegenerateEvaluation, Numerical)
POPUC_DEFINE_ERROR(ConvergenceError, Numerical)
POPUC_DEFINE_ERROR(OffCircle, Numerical)
POPUC_DEFINE_ERROR(CollisionError, Numerical)
POPUC_DEFINE_ERROR(NotAZero, Numerical)
POPUC_DEFINE_ERROR(EigenpairError, Numerical)
POPUC_DEFINE_ERROR(MatchingError, Numerical)

POPUC_DEFINE_ERROR(VerificationFailure, Verification)

#undef POPUC_DEFINE_ERROR

std::string_view to_string(ErrorCategory category) noexcept;

}  // namespace popuc
