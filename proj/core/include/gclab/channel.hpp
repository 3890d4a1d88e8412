#pragma once

#include <complex>

#include "gclab/covariance.hpp"

namespace gclab {

/// Master-equation parameters of one bath: thermal-like N and the complex
/// bath correlation ("squeezing") M.
struct NMParameters {
  double N{};
  std::complex<double> M{};
};

/// Phenomenological triple of one bath: purity mu of its stationary state,
/// squeezing r and squeezing angle phi in (-pi/2, pi/2].
///
/// Orientation: M = -|M| e^{-2i phi}, so phi = 0 squeezes the x quadrature.
struct BathParameters {
  double mu{1.0};
  double r{0.0};
  double phi{0.0};
};

BathParameters phenomenological_from_nm(double N, std::complex<double> M);
NMParameters nm_from_phenomenological(double mu, double r, double phi);

/// One mode's Gaussian environment; keeps both parametrizations in sync.
class Bath {
 public:
  static Bath from_phenomenological(double mu, double r, double phi);
  static Bath from_nm(double N, std::complex<double> M);
  static Bath thermal(double mean_photons);
  static Bath vacuum();

  double mu() const noexcept { return params_.mu; }
  double r() const noexcept { return params_.r; }
  double phi() const noexcept { return params_.phi; }
  double N() const noexcept { return nm_.N; }
  std::complex<double> M() const noexcept { return nm_.M; }
  const BathParameters& phenomenological() const noexcept { return params_; }
  const NMParameters& nm() const noexcept { return nm_; }

  /// Stationary single-mode covariance matrix of this bath.
  Mat2 asymptotic_block() const noexcept;

 private:
  Bath(BathParameters p, NMParameters nm) : params_(p), nm_(nm) {}

  BathParameters params_;
  NMParameters nm_;
};

/// All six scalars (mu, r, phi, N, Re M, Im M) agree to tol::same_bath.
bool same_bath(const Bath& lhs, const Bath& rhs) noexcept;

/// Two uncorrelated baths with a common damping rate (1/time).
struct ChannelSpec {
  Bath bath1 = Bath::vacuum();
  Bath bath2 = Bath::vacuum();
  double gamma{1.0};

  /// True when both baths have zero squeezing.
  bool thermal() const noexcept;
};

/// sigma_1inf (+) sigma_2inf.
CovarianceMatrix asymptotic_covariance(const ChannelSpec& spec);

}  // namespace gclab
