#include "gclab/channel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gclab/error.hpp"
#include "gclab/tolerances.hpp"

namespace gclab {
namespace {

// Maps an angle onto (-pi/2, pi/2].
double wrap_half_turn(double phi) {
  constexpr double pi = std::numbers::pi;
  double w = std::remainder(phi, pi);
  if (w <= -pi / 2) w += pi;
  return w;
}

}  // namespace

BathParameters phenomenological_from_nm(double N, std::complex<double> M) {
  const double m2 = std::norm(M);
  if (N < -tol::physical || m2 > N * (N + 1.0) + tol::physical) {
    std::ostringstream os;
    os << "bath violates |M|^2 <= N(N+1): N = " << N << ", |M|^2 = " << m2;
    throw Error(ErrorKind::UnphysicalChannel, os.str());
  }
  BathParameters p;
  const double radicand = (2.0 * N + 1.0) * (2.0 * N + 1.0) - 4.0 * m2;
  p.mu = std::min(1.0, 1.0 / std::sqrt(radicand));
  // cosh 2r = sqrt(1 + 4 mu^2 |M|^2)  <=>  sinh 2r = 2 mu |M|.
  p.r = 0.5 * std::asinh(2.0 * p.mu * std::sqrt(m2));
  p.phi = m2 > 0.0 ? wrap_half_turn(0.5 * (std::numbers::pi - std::arg(M))) : 0.0;
  return p;
}

NMParameters nm_from_phenomenological(double mu, double r, double phi) {
  if (!(mu > 0.0 && mu <= 1.0)) {
    throw Error(ErrorKind::DomainError, "bath purity must lie in (0, 1], got " + std::to_string(mu));
  }
  if (!(r >= 0.0)) {
    throw Error(ErrorKind::DomainError, "bath squeezing must be >= 0, got " + std::to_string(r));
  }
  NMParameters nm;
  nm.N = std::cosh(2.0 * r) / (2.0 * mu) - 0.5;
  nm.M = -(std::sinh(2.0 * r) / (2.0 * mu)) * std::polar(1.0, -2.0 * phi);
  return nm;
}

Bath Bath::from_phenomenological(double mu, double r, double phi) {
  const BathParameters p{mu, r, r > 0.0 ? wrap_half_turn(phi) : 0.0};
  return Bath(p, nm_from_phenomenological(p.mu, p.r, p.phi));
}

Bath Bath::from_nm(double N, std::complex<double> M) {
  return Bath(phenomenological_from_nm(N, M), NMParameters{N, M});
}

Bath Bath::thermal(double mean_photons) { return from_nm(mean_photons, {}); }

Bath Bath::vacuum() { return Bath(BathParameters{}, NMParameters{}); }

Mat2 Bath::asymptotic_block() const noexcept {
  const double diag = kVacuumVariance + nm_.N;
  return {diag + nm_.M.real(), nm_.M.imag(), nm_.M.imag(), diag - nm_.M.real()};
}

bool same_bath(const Bath& lhs, const Bath& rhs) noexcept {
  auto close = [](double x, double y) { return std::abs(x - y) <= tol::same_bath; };
  return close(lhs.mu(), rhs.mu()) && close(lhs.r(), rhs.r()) && close(lhs.phi(), rhs.phi()) &&
         close(lhs.N(), rhs.N()) && close(lhs.M().real(), rhs.M().real()) &&
         close(lhs.M().imag(), rhs.M().imag());
}

bool ChannelSpec::thermal() const noexcept { return bath1.M() == 0.0 && bath2.M() == 0.0; }

CovarianceMatrix asymptotic_covariance(const ChannelSpec& spec) {
  CovarianceMatrix m = CovarianceMatrix::block_diagonal(spec.bath1.asymptotic_block(), spec.bath2.asymptotic_block());
  const ValidationReport report = validate_covariance(m);
  if (!report.bona_fide) {
    throw Error(ErrorKind::UnphysicalChannel, "asymptotic bath state violates the uncertainty relation");
  }
  return m;
}

}  // namespace gclab
