#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wilsonlab {

enum class ErrorKind {
  NotPrime,
  NotPIntegral,
  NotDivisible,
  PrecisionExhausted,
  MixedContext,
  NotInvertible,
  NotCoprime,
  IndexOutOfTable,
  PreconditionViolated,
  InadmissibleCase,
  InadmissibleTier,
  HypothesisViolated,
  InvariantViolated,
  UnknownCheck,
  UnknownRange,
  CacheFormat,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotPIntegral: return "NotPIntegral";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::MixedContext: return "MixedContext";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::IndexOutOfTable: return "IndexOutOfTable";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InadmissibleCase: return "InadmissibleCase";
    case ErrorKind::InadmissibleTier: return "InadmissibleTier";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::UnknownRange: return "UnknownRange";
    case ErrorKind::CacheFormat: return "CacheFormat";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is the stable, serializable
/// part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace wilsonlab
