#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace gclab {

/// Real 2x2 matrix, row-major. Used for single-mode blocks and local
/// symplectic maps.
struct Mat2 {
  double xx{}, xp{}, px{}, pp{};

  double det() const noexcept { return xx * pp - xp * px; }
  double trace() const noexcept { return xx + pp; }
  Mat2 transposed() const noexcept { return {xx, px, xp, pp}; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r) noexcept {
    return {l.xx * r.xx + l.xp * r.px, l.xx * r.xp + l.xp * r.pp,
            l.px * r.xx + l.pp * r.px, l.px * r.xp + l.pp * r.pp};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Phase-space rotation exp(theta * omega); symplectic.
Mat2 phase_rotation(double theta) noexcept;
/// diag(e^{-r}, e^{r}); symplectic.
Mat2 single_mode_squeezer(double r) noexcept;

/// Second-moment matrix of a centred one- or two-mode Gaussian state, in
/// quadrature order (x1, p1[, x2, p2]) with vacuum variance 1/2.
///
/// The type holds any real square matrix of the right size; physical
/// validity is checked by validate_covariance() and enforced by every
/// functional that needs it.
class CovarianceMatrix {
 public:
  static CovarianceMatrix one_mode(const std::array<double, 4>& rows) noexcept;
  static CovarianceMatrix two_mode(const std::array<double, 16>& rows) noexcept;
  /// rows.size() must be 4 or 16; anything else is a DomainError.
  static CovarianceMatrix from_rows(std::span<const double> rows);
  static CovarianceMatrix vacuum(int mode_count);
  /// alpha (+) beta, zero off-diagonal block.
  static CovarianceMatrix block_diagonal(const Mat2& alpha, const Mat2& beta) noexcept;

  int mode_count() const noexcept { return modes_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(2 * modes_); }

  double operator()(std::size_t i, std::size_t j) const noexcept { return e_[i * dim() + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return e_[i * dim() + j]; }

  std::span<const double> entries() const noexcept { return {e_.data(), dim() * dim()}; }

  /// Upper-left 2x2 block (the whole matrix for one mode).
  Mat2 alpha() const noexcept { return block(0, 0); }
  /// Lower-right block; two-mode only.
  Mat2 beta() const noexcept { return block(2, 2); }
  /// Upper-right block; two-mode only.
  Mat2 gamma() const noexcept { return block(0, 2); }

  double determinant() const noexcept;
  /// max |m_ij - m_ji|.
  double symmetry_residual() const noexcept;

  friend bool operator==(const CovarianceMatrix&, const CovarianceMatrix&) = default;

 private:
  CovarianceMatrix() = default;
  Mat2 block(std::size_t row, std::size_t col) const noexcept;

  int modes_{2};
  std::array<double, 16> e_{};
};

/// (a, b, c1, c2) of the canonical local-symplectic representative.
struct StandardForm {
  double a{0.5};
  double b{0.5};
  double c1{0.0};
  double c2{0.0};

  CovarianceMatrix matrix() const noexcept;
  bool symmetric() const noexcept;

  friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

struct SymplecticInvariants {
  double det_alpha{};
  double det_beta{};
  double det_gamma{};
  double det_sigma{};
  /// Det alpha + Det beta + 2 Det gamma.
  double delta{};
  /// Same with the sign of Det gamma flipped (partial transpose).
  double delta_tilde{};
};

struct SymplecticSpectrum {
  double n_minus{};
  double n_plus{};
  double nt_minus{};
  double nt_plus{};
};

struct ValidationReport {
  double symmetry_residual{};
  double determinant{};
  /// NaN when the ordinary spectrum is complex.
  double n_minus{};
  bool positive_definite{};
  bool bona_fide{};
};

/// Throws NonSymmetric when the residual exceeds tol::symmetry and
/// NonPositiveDeterminant when Det < 0. A singular matrix (Det within
/// tol::clamp of zero) is reported, not rejected, so degenerate states such as
/// (1, 1, 1, -1) can be diagnosed.
ValidationReport validate_covariance(const CovarianceMatrix& m);

/// validate_covariance() plus InvalidState when the matrix is not bona fide.
void require_bona_fide(const CovarianceMatrix& m);

SymplecticInvariants local_invariants(const CovarianceMatrix& m);

/// Both branches of the two-mode symplectic spectrum from the invariants.
/// Works on non-physical input as long as the spectrum is real; throws
/// ComplexSpectrum otherwise.
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& m);

/// Symplectic eigenvalue pair solving 2n^2 = delta -/+ sqrt(delta^2 - 4 det).
std::array<double, 2> symplectic_pair(double delta, double det_sigma);

/// Convention: c1 >= |c2| >= 0 and sign(c2) = sign(Det gamma).
StandardForm standard_form_from_invariants(const CovarianceMatrix& m);

/// Two-mode squeezed thermal state of global purity mu_state.
StandardForm squeezed_thermal_state(double mu_state, double r);

/// Smallest partially transposed symplectic eigenvalue of a symmetric
/// (a == b) standard form.
double symmetric_ppt_eigenvalue(const StandardForm& sf);

/// (S1 (+) S2)^T m (S1 (+) S2).
CovarianceMatrix transform_local(const CovarianceMatrix& m, const Mat2& s1, const Mat2& s2) noexcept;

/// Mirror reflection p2 -> -p2.
CovarianceMatrix partial_transpose(const CovarianceMatrix& m) noexcept;

}  // namespace gclab
