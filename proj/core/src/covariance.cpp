#include "gclab/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gclab/error.hpp"
#include "gclab/tolerances.hpp"

namespace gclab {
namespace {

bool cholesky_succeeds(const CovarianceMatrix& m) {
  const std::size_t n = m.dim();
  std::array<double, 16> l{};
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l[j * n + k] * l[j * n + k];
    if (!(d > tol::clamp)) return false;
    const double ljj = std::sqrt(d);
    l[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = 0.5 * (m(i, j) + m(j, i));
      for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = s / ljj;
    }
  }
  return true;
}

void require_two_mode(const CovarianceMatrix& m, const char* what) {
  if (m.mode_count() != 2) {
    throw Error(ErrorKind::DomainError, std::string(what) + " needs a two-mode (4x4) matrix");
  }
}

void require_symmetric(const CovarianceMatrix& m) {
  const double residual = m.symmetry_residual();
  if (residual > tol::symmetry) {
    std::ostringstream os;
    os << "symmetry residual " << residual << " exceeds " << tol::symmetry;
    throw Error(ErrorKind::NonSymmetric, os.str());
  }
}

}  // namespace

Mat2 phase_rotation(double theta) noexcept {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, s, -s, c};
}

Mat2 single_mode_squeezer(double r) noexcept { return {std::exp(-r), 0.0, 0.0, std::exp(r)}; }

CovarianceMatrix CovarianceMatrix::one_mode(const std::array<double, 4>& rows) noexcept {
  CovarianceMatrix m;
  m.modes_ = 1;
  std::copy(rows.begin(), rows.end(), m.e_.begin());
  return m;
}

CovarianceMatrix CovarianceMatrix::two_mode(const std::array<double, 16>& rows) noexcept {
  CovarianceMatrix m;
  m.modes_ = 2;
  m.e_ = rows;
  return m;
}

CovarianceMatrix CovarianceMatrix::from_rows(std::span<const double> rows) {
  if (rows.size() == 4) return one_mode({rows[0], rows[1], rows[2], rows[3]});
  if (rows.size() == 16) {
    std::array<double, 16> e{};
    std::copy(rows.begin(), rows.end(), e.begin());
    return two_mode(e);
  }
  throw Error(ErrorKind::DomainError,
              "covariance matrix must have 4 or 16 entries, got " + std::to_string(rows.size()));
}

CovarianceMatrix CovarianceMatrix::vacuum(int mode_count) {
  if (mode_count == 1) return one_mode({kVacuumVariance, 0.0, 0.0, kVacuumVariance});
  if (mode_count == 2) return block_diagonal({kVacuumVariance, 0, 0, kVacuumVariance}, {kVacuumVariance, 0, 0, kVacuumVariance});
  throw Error(ErrorKind::DomainError, "mode count must be 1 or 2");
}

CovarianceMatrix CovarianceMatrix::block_diagonal(const Mat2& alpha, const Mat2& beta) noexcept {
  return two_mode({alpha.xx, alpha.xp, 0.0, 0.0,  //
                   alpha.px, alpha.pp, 0.0, 0.0,  //
                   0.0, 0.0, beta.xx, beta.xp,    //
                   0.0, 0.0, beta.px, beta.pp});
}

Mat2 CovarianceMatrix::block(std::size_t row, std::size_t col) const noexcept {
  const auto& m = *this;
  return {m(row, col), m(row, col + 1), m(row + 1, col), m(row + 1, col + 1)};
}

double CovarianceMatrix::determinant() const noexcept {
  const auto& m = *this;
  if (modes_ == 1) return alpha().det();
  // Laplace expansion over the 2x2 minors of rows (0,1) and (2,3).
  const double s0 = m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1);
  const double s1 = m(0, 0) * m(1, 2) - m(1, 0) * m(0, 2);
  const double s2 = m(0, 0) * m(1, 3) - m(1, 0) * m(0, 3);
  const double s3 = m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2);
  const double s4 = m(0, 1) * m(1, 3) - m(1, 1) * m(0, 3);
  const double s5 = m(0, 2) * m(1, 3) - m(1, 2) * m(0, 3);
  const double c5 = m(2, 2) * m(3, 3) - m(3, 2) * m(2, 3);
  const double c4 = m(2, 1) * m(3, 3) - m(3, 1) * m(2, 3);
  const double c3 = m(2, 1) * m(3, 2) - m(3, 1) * m(2, 2);
  const double c2 = m(2, 0) * m(3, 3) - m(3, 0) * m(2, 3);
  const double c1 = m(2, 0) * m(3, 2) - m(3, 0) * m(2, 2);
  const double c0 = m(2, 0) * m(3, 1) - m(3, 0) * m(2, 1);
  return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;
}

double CovarianceMatrix::symmetry_residual() const noexcept {
  double r = 0.0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) r = std::max(r, std::abs((*this)(i, j) - (*this)(j, i)));
  return r;
}

CovarianceMatrix StandardForm::matrix() const noexcept {
  return CovarianceMatrix::two_mode({a, 0.0, c1, 0.0,  //
                                     0.0, a, 0.0, c2,  //
                                     c1, 0.0, b, 0.0,  //
                                     0.0, c2, 0.0, b});
}

bool StandardForm::symmetric() const noexcept { return std::abs(a - b) <= tol::symmetric_form; }

namespace {

Mat2 adjugate(const Mat2& m) noexcept { return {m.pp, -m.xp, -m.px, m.xx}; }

Mat2 operator+(const Mat2& l, const Mat2& r) noexcept { return {l.xx + r.xx, l.xp + r.xp, l.px + r.px, l.pp + r.pp}; }

// delta^2 - 4 Det sigma written without the cancellation between the two
// terms: with K = -(omega sigma)^2 in 2x2 blocks, the off-diagonal product
// X Y is a multiple of the identity and the radicand is
// (Det alpha - Det beta)^2 + 2 tr(X Y).
double spectral_radicand(const Mat2& alpha, const Mat2& beta, const Mat2& gamma) noexcept {
  const Mat2 x = adjugate(alpha) * gamma + adjugate(gamma).transposed() * beta;
  const Mat2 y = adjugate(gamma) * alpha + adjugate(beta) * gamma.transposed();
  const double split = alpha.det() - beta.det();
  return split * split + 2.0 * (x * y).trace();
}

std::array<double, 2> pair_from_radicand(double delta, double det_sigma, double radicand) {
  const double scale = std::max(1.0, delta * delta);
  if (radicand < -tol::clamp * scale) {
    std::ostringstream os;
    os << "negative radicand " << radicand << " (delta=" << delta << ", det=" << det_sigma << ")";
    throw Error(ErrorKind::ComplexSpectrum, os.str());
  }
  radicand = std::max(0.0, radicand);
  const double upper_sq = 0.5 * (delta + std::sqrt(radicand));
  if (upper_sq <= tol::clamp * scale) {
    if (upper_sq < -tol::clamp * scale || std::abs(det_sigma) > tol::clamp * scale) {
      throw Error(ErrorKind::ComplexSpectrum, "symplectic eigenvalues are not real");
    }
    return {0.0, 0.0};
  }
  // lower = det / upper avoids the cancellation in delta - sqrt(...).
  double lower_sq = det_sigma / upper_sq;
  if (lower_sq < 0.0) {
    if (lower_sq < -tol::clamp * scale) {
      throw Error(ErrorKind::ComplexSpectrum, "negative determinant gives an imaginary eigenvalue");
    }
    lower_sq = 0.0;
  }
  return {std::sqrt(lower_sq), std::sqrt(upper_sq)};
}

}  // namespace

std::array<double, 2> symplectic_pair(double delta, double det_sigma) {
  return pair_from_radicand(delta, det_sigma, delta * delta - 4.0 * det_sigma);
}

ValidationReport validate_covariance(const CovarianceMatrix& m) {
  ValidationReport report;
  report.symmetry_residual = m.symmetry_residual();
  require_symmetric(m);
  report.determinant = m.determinant();
  if (report.determinant < -tol::clamp) {
    std::ostringstream os;
    os << "determinant " << report.determinant << " is negative";
    throw Error(ErrorKind::NonPositiveDeterminant, os.str());
  }
  report.positive_definite = cholesky_succeeds(m);
  if (m.mode_count() == 1) {
    report.n_minus = std::sqrt(std::max(0.0, report.determinant));
  } else {
    try {
      report.n_minus = symplectic_spectrum(m).n_minus;
    } catch (const Error&) {
      report.n_minus = std::numeric_limits<double>::quiet_NaN();
    }
  }
  report.bona_fide = report.positive_definite && report.n_minus >= kVacuumVariance - tol::physical;
  return report;
}

void require_bona_fide(const CovarianceMatrix& m) {
  const ValidationReport report = validate_covariance(m);
  if (!report.bona_fide) {
    std::ostringstream os;
    os << "not a bona fide covariance matrix (n_- = " << report.n_minus
       << ", positive definite = " << (report.positive_definite ? "yes" : "no") << ")";
    throw Error(ErrorKind::InvalidState, os.str());
  }
}

SymplecticInvariants local_invariants(const CovarianceMatrix& m) {
  require_two_mode(m, "local_invariants");
  require_symmetric(m);
  SymplecticInvariants inv;
  inv.det_alpha = m.alpha().det();
  inv.det_beta = m.beta().det();
  inv.det_gamma = m.gamma().det();
  inv.det_sigma = m.determinant();
  inv.delta = inv.det_alpha + inv.det_beta + 2.0 * inv.det_gamma;
  inv.delta_tilde = inv.det_alpha + inv.det_beta - 2.0 * inv.det_gamma;
  return inv;
}

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& m) {
  const SymplecticInvariants inv = local_invariants(m);
  const Mat2 flip{1.0, 0.0, 0.0, -1.0};
  const Mat2 alpha = m.alpha(), beta = m.beta(), gamma = m.gamma();
  const auto ordinary = pair_from_radicand(inv.delta, inv.det_sigma, spectral_radicand(alpha, beta, gamma));
  const auto transposed = pair_from_radicand(inv.delta_tilde, inv.det_sigma,
                                             spectral_radicand(alpha, flip * beta * flip, gamma * flip));
  return {ordinary[0], ordinary[1], transposed[0], transposed[1]};
}

StandardForm standard_form_from_invariants(const CovarianceMatrix& m) {
  require_two_mode(m, "standard_form_from_invariants");
  require_bona_fide(m);
  const SymplecticInvariants inv = local_invariants(m);
  StandardForm sf;
  sf.a = std::sqrt(inv.det_alpha);
  sf.b = std::sqrt(inv.det_beta);
  // c1^2 and c2^2 are the roots of q^2 - S q + P.
  const double ab = sf.a * sf.b;
  const double product = inv.det_gamma * inv.det_gamma;
  const double sum = (inv.det_alpha * inv.det_beta + product - inv.det_sigma) / ab;
  double disc = sum * sum - 4.0 * product;
  if (disc < -tol::discriminant * std::max(1.0, sum * sum)) {
    std::ostringstream os;
    os << "standard-form discriminant " << disc << " is negative";
    throw Error(ErrorKind::NumericalDegeneracy, os.str());
  }
  disc = std::max(0.0, disc);
  const double q_large = 0.5 * (sum + std::sqrt(disc));
  const double q_small = q_large > 0.0 ? std::max(0.0, product / q_large) : 0.0;
  sf.c1 = std::sqrt(std::max(0.0, q_large));
  const double c2_abs = std::sqrt(q_small);
  sf.c2 = inv.det_gamma < 0.0 ? -c2_abs : c2_abs;
  return sf;
}

StandardForm squeezed_thermal_state(double mu_state, double r) {
  if (!(mu_state > 0.0 && mu_state <= 1.0)) {
    throw Error(ErrorKind::DomainError, "squeezed thermal purity must lie in (0, 1], got " + std::to_string(mu_state));
  }
  const double scale = 1.0 / (2.0 * std::sqrt(mu_state));
  const double a = std::cosh(2.0 * r) * scale;
  const double c = std::sinh(2.0 * r) * scale;
  return {a, a, c, -c};
}

double symmetric_ppt_eigenvalue(const StandardForm& sf) {
  if (!sf.symmetric()) {
    std::ostringstream os;
    os << "standard form is not symmetric (a = " << sf.a << ", b = " << sf.b << ")";
    throw Error(ErrorKind::NotSymmetric, os.str());
  }
  const double a = sf.a;
  const double x = std::abs(sf.c1);
  const double p = std::abs(sf.c2);
  if (sf.c1 * sf.c2 <= 0.0) return std::sqrt(std::max(0.0, (a - x) * (a - p)));
  // Same-sign correlations: the transpose flips c2 and the smaller pair wins.
  return std::sqrt(std::max(0.0, std::min((a - x) * (a + p), (a + x) * (a - p))));
}

CovarianceMatrix transform_local(const CovarianceMatrix& m, const Mat2& s1, const Mat2& s2) noexcept {
  if (m.mode_count() == 1) {
    const Mat2 r = s1.transposed() * m.alpha() * s1;
    return CovarianceMatrix::one_mode({r.xx, r.xp, r.px, r.pp});
  }
  std::array<double, 16> s{};
  s[0] = s1.xx, s[1] = s1.xp, s[4] = s1.px, s[5] = s1.pp;
  s[10] = s2.xx, s[11] = s2.xp, s[14] = s2.px, s[15] = s2.pp;
  std::array<double, 16> tmp{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) acc += m(i, k) * s[k * 4 + j];
      tmp[i * 4 + j] = acc;
    }
  std::array<double, 16> out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) acc += s[k * 4 + i] * tmp[k * 4 + j];
      out[i * 4 + j] = acc;
    }
  return CovarianceMatrix::two_mode(out);
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& m) noexcept {
  CovarianceMatrix t = m;
  const std::size_t p = m.dim() - 1;
  for (std::size_t i = 0; i < p; ++i) {
    t(i, p) = -m(i, p);
    t(p, i) = -m(p, i);
  }
  return t;
}

}  // namespace gclab
