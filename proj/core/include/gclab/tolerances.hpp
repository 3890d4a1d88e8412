#pragma once

namespace gclab {

/// Quadrature variance of the vacuum (hbar = 1).
inline constexpr double kVacuumVariance = 0.5;

namespace tol {
/// Absolute, entrywise.
inline constexpr double symmetry = 1e-12;
/// Slack on physical bounds: n_- >= 1/2, mu <= 1, |M|^2 <= N(N+1).
inline constexpr double physical = 1e-9;
/// Radicands and eigenvalues this close to a threshold are clamped onto it.
inline constexpr double clamp = 1e-12;
/// a == b test for symmetric standard forms.
inline constexpr double symmetric_form = 1e-9;
/// Two baths are equal when all six scalars agree to this.
inline constexpr double same_bath = 1e-12;
/// Standard-form reconstruction discriminant.
inline constexpr double discriminant = 1e-10;
}  // namespace tol

}  // namespace gclab
