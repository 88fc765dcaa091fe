#pragma once

#include <stdexcept>
#include <string>

namespace cda {

/// Failure categories surfaced by the library. Bench grid cells record the
/// category name, so the set is closed and stringable.
enum class ErrorKind {
  kNonPositivePart,
  kTooShort,
  kNotZeroSum,
  kDimensionMismatch,
  kRankDeficient,
  kNoConvergence,
  kNeighborhoodTooLarge,
  kEigenFailure,
  kDegenerateLabels,
  kNonFinite,
  kUnknownLabel,
  kBadN,
  kBadCovariance,
  kBadSpec,
  kClassTooSmall,
  kParseError,
  kMissingColumn,
  kZeroHandling,
  kIo,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace cda
