#include "cda/error.hpp"

namespace cda {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonPositivePart: return "NonPositivePart";
    case ErrorKind::kTooShort: return "TooShort";
    case ErrorKind::kNotZeroSum: return "NotZeroSum";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kRankDeficient: return "RankDeficient";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kNeighborhoodTooLarge: return "NeighborhoodTooLarge";
    case ErrorKind::kEigenFailure: return "EigenFailure";
    case ErrorKind::kDegenerateLabels: return "DegenerateLabels";
    case ErrorKind::kNonFinite: return "NonFinite";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kBadN: return "BadN";
    case ErrorKind::kBadCovariance: return "BadCovariance";
    case ErrorKind::kBadSpec: return "BadSpec";
    case ErrorKind::kClassTooSmall: return "ClassTooSmall";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kMissingColumn: return "MissingColumn";
    case ErrorKind::kZeroHandling: return "ZeroHandling";
    case ErrorKind::kIo: return "IoError";
  }
  return "UnknownError";
}

}  // namespace cda
