#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "gclab/channel.hpp"
#include "gclab/covariance.hpp"
#include "gclab/polynomial.hpp"

namespace gclab {

/// Evolution horizon in units of 1/gamma used to decide "never separable".
inline constexpr double kSeparabilityHorizon = 60.0;

/// Determinant invariants of sigma(t) as polynomials in k = e^{-gamma t},
/// for a standard-form initial state. Coefficients are indexed by power.
struct InvariantPolynomials {
  std::array<double, 5> sigma{};
  std::array<double, 3> alpha{};
  std::array<double, 3> beta{};
  double gamma2{};

  double det_sigma(double k) const noexcept;
  double det_alpha(double k) const noexcept;
  double det_beta(double k) const noexcept;
  double det_gamma(double k) const noexcept { return gamma2 * k * k; }
  double delta_tilde(double k) const noexcept { return det_alpha(k) + det_beta(k) - 2.0 * det_gamma(k); }
};

/// Closed-form coefficients for a standard-form state in an uncorrelated
/// channel. Bath 1 must follow the reference phase convention (Im M1 = 0);
/// anything else is a ReferencePhase error.
InvariantPolynomials invariant_polynomials(const StandardForm& sf, const ChannelSpec& channel);

/// u k^4 + v k^3 + w k^2 + y k + z = 4 Det sigma(k) + 1/4 - DeltaTilde(k).
/// Vanishes exactly where the PPT inequality is saturated and is negative
/// while the state is entangled.
struct SeparabilityQuartic {
  double u{}, v{}, w{}, y{}, z{};

  double operator()(double k) const noexcept { return (((u * k + v) * k + w) * k + y) * k + z; }
  Polynomial polynomial() const { return Polynomial{z, y, w, v, u}; }
};

/// Coefficients that cancel to within rounding of their inputs are set to zero.
SeparabilityQuartic separability_quartic(const InvariantPolynomials& p);

enum class TentMethod { Quartic, Bisection, ClosedForm };

std::string_view to_string(TentMethod method) noexcept;

struct EntanglementTimeResult {
  /// Empty when the state never becomes separable.
  std::optional<double> t_ent;
  /// e^{-gamma t_ent}; 0 for never.
  double k_ent{};
  TentMethod method{TentMethod::Quartic};
  /// n~_-(t_ent) - 1/2 recomputed from the evolved matrix.
  double residual{};
  /// n~_- only touches 1/2 at t_ent.
  bool tangent{};
  /// Root bracketed on the direct n~_-(t) path, when one was found.
  std::optional<double> k_bisection;

  bool never() const noexcept { return !t_ent.has_value(); }
};

/// Time after which an entangled standard form becomes separable.
///
/// The largest quartic root in (0, 1) is cross-checked against a bisection
/// of n~_-(t) - 1/2 over gamma t in [0, kSeparabilityHorizon]; the two must
/// agree to 1e-7 in k or MethodDisagreement is thrown.
EntanglementTimeResult entanglement_time(const StandardForm& sf, const ChannelSpec& channel);

/// n~_-(t) - 1/2 along the exact evolution, for gamma t = scaled_time.
double ppt_margin(const CovarianceMatrix& sigma0, const CovarianceMatrix& sigma_inf, double scaled_time);

struct TentBounds {
  double lower{};
  double upper{};
};

/// Bounds on t_ent for a symmetric state (a, c1, c2) in two equal thermal
/// baths with mean photon number n_bath. Infinite bounds mean never.
TentBounds symmetric_tent_bounds(double a, double c1, double c2, double n_bath, double gamma);

/// Exact t_ent of a squeezed thermal state in equal thermal baths; empty for
/// vacuum baths, 0 when the state is not entangled to begin with.
std::optional<double> squeezed_thermal_tent(double mu_state, double r, double n_bath, double gamma);

}  // namespace gclab
