#include "popuc/errors.hpp"

namespace popuc {

std::string_view to_string(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::Config:
      return "config";
    case ErrorCategory::Numerical:
      return "numerical";
    case ErrorCategory::Verification:
      return "verification";
  }
  return "unknown";
}

}  // namespace popuc
