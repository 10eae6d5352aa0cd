#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmink {

enum class ErrorKind {
  NotHermitian,
  TraceNotOne,
  NotPositive,
  NoConvergence,
  NegativeEigenvalueBeyondTolerance,
  NonPositiveExponent,
  IndexOutOfRange,
  PartitionMismatch,
  ShrinkNotAllowed,
  DimensionMismatch,
  ParameterOutOfRange,
  BadRank,
  NotNormalized,
  NegativeProbability,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every library failure carries a machine-checkable kind plus a message
/// naming the violated condition and, where meaningful, the measured defect.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qmink
