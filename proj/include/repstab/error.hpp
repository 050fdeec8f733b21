#pragma once

#include <stdexcept>
#include <string>

namespace repstab {

// Domain errors map to CLI exit code 1; anything derived from std::invalid_argument
// is treated as a usage problem (exit 2).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct PaddingRange : DomainError {
  using DomainError::DomainError;
};
struct EmptyPartition : DomainError {
  using DomainError::DomainError;
};
struct NotACharacter : DomainError {
  using DomainError::DomainError;
};
struct DegreeMismatch : DomainError {
  using DomainError::DomainError;
};
struct HorizonTooSmall : DomainError {
  using DomainError::DomainError;
};
struct BettiMismatch : DomainError {
  using DomainError::DomainError;
};
struct RangeError : DomainError {
  using DomainError::DomainError;
};
struct FeasibilityExceeded : DomainError {
  using DomainError::DomainError;
};
struct NonCommuting : DomainError {
  using DomainError::DomainError;
};
struct NotAComplex : DomainError {
  using DomainError::DomainError;
};
struct NotEquivariant : DomainError {
  using DomainError::DomainError;
};
struct WindowTooShort : DomainError {
  using DomainError::DomainError;
};
struct InsufficientWindow : DomainError {
  using DomainError::DomainError;
};

}  // namespace repstab
