#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gclab {

enum class ErrorKind {
  NonSymmetric,
  NonPositiveDeterminant,
  ComplexSpectrum,
  InvalidState,
  DomainError,
  NumericalDegeneracy,
  NotSymmetric,
  UnphysicalChannel,
  ReferencePhase,
  NotEntangledAtStart,
  MethodDisagreement,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the core library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gclab
