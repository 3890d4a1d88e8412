#include "gclab/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "gclab/error.hpp"
#include "gclab/evolution.hpp"
#include "gclab/measures.hpp"
#include "gclab/tolerances.hpp"

namespace gclab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kScanStep = 0.005;
constexpr double kAgreement = 1e-7;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Zero when |value| is within rounding noise of the terms that produced it.
double snap(double value, double scale) { return std::abs(value) <= 64.0 * kEps * scale ? 0.0 : value; }

}  // namespace

double InvariantPolynomials::det_sigma(double k) const noexcept {
  return (((sigma[4] * k + sigma[3]) * k + sigma[2]) * k + sigma[1]) * k + sigma[0];
}

double InvariantPolynomials::det_alpha(double k) const noexcept { return (alpha[2] * k + alpha[1]) * k + alpha[0]; }

double InvariantPolynomials::det_beta(double k) const noexcept { return (beta[2] * k + beta[1]) * k + beta[0]; }

InvariantPolynomials invariant_polynomials(const StandardForm& sf, const ChannelSpec& channel) {
  const Bath& b1 = channel.bath1;
  const Bath& b2 = channel.bath2;
  if (std::abs(b1.M().imag()) > tol::physical * std::max(1.0, std::abs(b1.M()))) {
    throw Error(ErrorKind::ReferencePhase,
                "bath 1 must have real M (phi1 = 0 or pi/2), got phi1 = " + num(b1.phi()));
  }

  const double a = sf.a, b = sf.b;
  const double sp = sf.c1 * sf.c1 + sf.c2 * sf.c2;
  const double sm = sf.c1 * sf.c1 - sf.c2 * sf.c2;
  const double m1 = b1.mu(), m2 = b2.mu();
  const double C1 = std::cosh(2.0 * b1.r());
  const double S1 = std::sinh(2.0 * b1.r()) * std::cos(2.0 * b1.phi());
  const double C2 = std::cosh(2.0 * b2.r());
  const double S2 = std::sinh(2.0 * b2.r()) * std::cos(2.0 * b2.phi());

  const double A1 = C1 / m1, A2 = C2 / m2;
  const double D1 = 1.0 / (4.0 * m1 * m1), D2 = 1.0 / (4.0 * m2 * m2);
  const double p = 1.0 / (4.0 * m1 * m2);
  const double q = D1 * D2;  // 1 / (16 mu1^2 mu2^2)
  const double aC1 = a * C1 / (4.0 * m1 * m2 * m2);
  const double bC2 = b * C2 / (4.0 * m1 * m1 * m2);
  const double cc = C1 * C2 * p + S1 * S2 * p;
  const double cs = S1 * C2 * p + C1 * S2 * p;
  const double loc_p = a * C2 / (2.0 * m2) + b * C1 / (2.0 * m1);
  const double loc_m = a * S2 / (2.0 * m2) + b * S1 / (2.0 * m1);

  InvariantPolynomials out;
  out.sigma[4] = a * a * b * b + a * a * D2 + b * b * D1 - a * a * b * A2 - a * b * b * A1 + a * b * A1 * A2 - aC1 - bC2 +
                 sp * (loc_p - cc - a * b) + sm * (loc_m - cs) + sf.c1 * sf.c1 * sf.c2 * sf.c2 + q;
  out.sigma[3] = -2.0 * a * a * D2 - 2.0 * b * b * D1 + a * a * b * A2 + a * b * b * A1 - 2.0 * a * b * A1 * A2 +
                 3.0 * aC1 + 3.0 * bC2 - sm * (loc_m - 2.0 * cs) - sp * (loc_p - 2.0 * cc) - 4.0 * q;
  out.sigma[2] = a * a * D2 + b * b * D1 + a * b * A1 * A2 - 3.0 * aC1 - 3.0 * bC2 - sp * cc - sm * cs + 6.0 * q;
  out.sigma[1] = aC1 + bC2 - 4.0 * q;
  out.sigma[0] = q;

  out.alpha = {D1, a * A1 - 2.0 * D1, a * a - a * A1 + D1};
  out.beta = {D2, b * A2 - 2.0 * D2, b * b - b * A2 + D2};
  out.gamma2 = sf.c1 * sf.c2;
  return out;
}

SeparabilityQuartic separability_quartic(const InvariantPolynomials& p) {
  const auto& s = p.sigma;
  SeparabilityQuartic q;
  q.u = 4.0 * s[4];
  q.v = 4.0 * s[3];
  q.w = snap(4.0 * s[2] - p.alpha[2] - p.beta[2] + 2.0 * p.gamma2,
             std::abs(4.0 * s[2]) + std::abs(p.alpha[2]) + std::abs(p.beta[2]) + 2.0 * std::abs(p.gamma2));
  q.y = snap(4.0 * s[1] - p.alpha[1] - p.beta[1], std::abs(4.0 * s[1]) + std::abs(p.alpha[1]) + std::abs(p.beta[1]));
  q.z = snap(4.0 * s[0] - p.alpha[0] - p.beta[0] + 0.25, std::abs(4.0 * s[0]) + p.alpha[0] + p.beta[0] + 0.25);
  return q;
}

std::string_view to_string(TentMethod method) noexcept {
  switch (method) {
    case TentMethod::Quartic: return "quartic";
    case TentMethod::Bisection: return "bisection";
    case TentMethod::ClosedForm: return "closed_form";
  }
  return "unknown";
}

double ppt_margin(const CovarianceMatrix& sigma0, const CovarianceMatrix& sigma_inf, double scaled_time) {
  return symplectic_spectrum(evolve(sigma0, sigma_inf, 1.0, scaled_time)).nt_minus - kVacuumVariance;
}

EntanglementTimeResult entanglement_time(const StandardForm& sf, const ChannelSpec& channel) {
  if (!(channel.gamma > 0.0)) throw Error(ErrorKind::DomainError, "gamma must be > 0, got " + num(channel.gamma));
  const CovarianceMatrix sigma0 = sf.matrix();
  if (log_negativity(sigma0).separable) {
    throw Error(ErrorKind::NotEntangledAtStart, "initial state is separable");
  }
  const CovarianceMatrix sigma_inf = asymptotic_covariance(channel);
  const SeparabilityQuartic quartic = separability_quartic(invariant_polynomials(sf, channel));

  std::optional<PolynomialRoot> kq;
  for (const PolynomialRoot& root : real_roots(quartic.polynomial(), 0.0, 1.0)) {
    if (root.value > 0.0 && root.value < 1.0) kq = root;
  }

  // First sign change of n~_- - 1/2 in gamma t.
  std::optional<double> sb;
  const auto margin = [&](double s) { return ppt_margin(sigma0, sigma_inf, s); };
  const auto scale = [](const CovarianceMatrix& m) {
    const SymplecticInvariants inv = local_invariants(m);
    return inv.det_alpha + inv.det_beta + 2.0 * std::abs(inv.det_gamma);
  };
  const double noise = 256.0 * kEps * std::max({1.0, scale(sigma0), scale(sigma_inf)});
  const int steps = static_cast<int>(std::lround(kSeparabilityHorizon / kScanStep));
  double lo = 0.0;
  for (int i = 1; i <= steps; ++i) {
    const double hi = i * kScanStep;
    if (margin(hi) > noise) {
      double l = lo, h = hi;
      for (int it = 0; it < 200 && h - l > 4.0 * kEps * h; ++it) {
        const double mid = 0.5 * (l + h);
        (margin(mid) >= 0.0 ? h : l) = mid;
      }
      sb = h;
      break;
    }
    lo = hi;
  }

  EntanglementTimeResult out;
  if (sb) out.k_bisection = std::exp(-*sb);
  const auto finish = [&](double k, double scaled, TentMethod method) {
    out.k_ent = k;
    out.t_ent = scaled / channel.gamma;
    out.method = method;
    out.residual = margin(scaled);
    return out;
  };

  if (kq) {
    const double k = kq->value;
    out.tangent = kq->tangent;
    // A crossing past the horizon counts as k = 0 for the agreement test.
    if (kq->tangent || std::abs(out.k_bisection.value_or(0.0) - k) <= kAgreement) {
      return finish(k, -std::log(k), TentMethod::Quartic);
    }
    throw Error(ErrorKind::MethodDisagreement,
                "quartic root k = " + num(k) + " but bisection gives k = " +
                    (out.k_bisection ? num(*out.k_bisection) : std::string("none")));
  }
  if (sb) return finish(*out.k_bisection, *sb, TentMethod::Bisection);

  // No crossing either way: only consistent if the asymptotic state sits on the PPT boundary.
  const double nt_inf = 0.5 / std::max(channel.bath1.mu(), channel.bath2.mu());
  if (nt_inf - kVacuumVariance > tol::physical) {
    throw Error(ErrorKind::MethodDisagreement, "no separability crossing found although the asymptotic state is separable");
  }
  out.method = TentMethod::Quartic;
  out.residual = margin(kSeparabilityHorizon);
  return out;
}

TentBounds symmetric_tent_bounds(double a, double c1, double c2, double n_bath, double gamma) {
  if (!(n_bath >= 0.0)) throw Error(ErrorKind::DomainError, "bath photon number must be >= 0, got " + num(n_bath));
  if (!(gamma > 0.0)) throw Error(ErrorKind::DomainError, "gamma must be > 0, got " + num(gamma));
  const auto bound = [&](double c) {
    const double excess = c - a + kVacuumVariance;
    if (excess <= 0.0) return 0.0;
    if (n_bath == 0.0) return std::numeric_limits<double>::infinity();
    return std::log1p(excess / n_bath) / gamma;
  };
  const double lo = std::min(std::abs(c1), std::abs(c2));
  const double hi = std::max(std::abs(c1), std::abs(c2));
  return {bound(lo), bound(hi)};
}

std::optional<double> squeezed_thermal_tent(double mu_state, double r, double n_bath, double gamma) {
  if (!(mu_state > 0.0 && mu_state <= 1.0)) {
    throw Error(ErrorKind::DomainError, "state purity must lie in (0, 1], got " + num(mu_state));
  }
  if (!(r >= 0.0)) throw Error(ErrorKind::DomainError, "squeezing must be >= 0, got " + num(r));
  if (!(n_bath >= 0.0)) throw Error(ErrorKind::DomainError, "bath photon number must be >= 0, got " + num(n_bath));
  if (!(gamma > 0.0)) throw Error(ErrorKind::DomainError, "gamma must be > 0, got " + num(gamma));
  const double root_mu = std::sqrt(mu_state);
  const double excess = root_mu - std::exp(-2.0 * r);
  if (excess <= 0.0) return 0.0;
  if (n_bath == 0.0) return std::nullopt;
  return std::log1p(excess / (2.0 * root_mu * n_bath)) / gamma;
}

}  // namespace gclab
