#pragma once

#include <stdexcept>
#include <string>

namespace renyi {

enum class ErrorKind {
  EmptyInput,
  NegativeEntry,
  SumOutOfTolerance,
  DimensionMismatch,
  SupportMismatch,
  ZeroProbability,
  InvalidRange,
  DomainViolation,
  RatioOutOfRange,
  BracketNotFound,
  CertificateViolation,
  EpsilonTooLarge,
  InvalidSpec,
  TruncationFailure,
  ParseError,
};

constexpr const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::SumOutOfTolerance: return "SumOutOfTolerance";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SupportMismatch: return "SupportMismatch";
    case ErrorKind::ZeroProbability: return "ZeroProbability";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::RatioOutOfRange: return "RatioOutOfRange";
    case ErrorKind::BracketNotFound: return "BracketNotFound";
    case ErrorKind::CertificateViolation: return "CertificateViolation";
    case ErrorKind::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::TruncationFailure: return "TruncationFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Failures that come from the numerics (a search or series that did not
/// converge) rather than from invalid input.
constexpr bool is_numerical_failure(ErrorKind kind) noexcept {
  return kind == ErrorKind::BracketNotFound || kind == ErrorKind::TruncationFailure ||
         kind == ErrorKind::CertificateViolation;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace renyi
