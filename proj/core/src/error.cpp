#include "gclab/error.hpp"

namespace gclab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::NonPositiveDeterminant: return "NonPositiveDeterminant";
    case ErrorKind::ComplexSpectrum: return "ComplexSpectrum";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::UnphysicalChannel: return "UnphysicalChannel";
    case ErrorKind::ReferencePhase: return "ReferencePhase";
    case ErrorKind::NotEntangledAtStart: return "NotEntangledAtStart";
    case ErrorKind::MethodDisagreement: return "MethodDisagreement";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace gclab
