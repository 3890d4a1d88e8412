#pragma once

#include <initializer_list>
#include <vector>

namespace gclab {

/// Real polynomial, coefficients ordered from the constant term upwards.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);
  Polynomial(std::initializer_list<double> coefficients);

  /// Degree after dropping exactly-zero leading coefficients; -1 for the
  /// zero polynomial.
  int degree() const noexcept;
  const std::vector<double>& coefficients() const noexcept { return c_; }

  double operator()(double x) const noexcept;
  /// Floating-point error bound of operator()(x) (Horner, running sum of |c_i x^i|).
  double evaluation_bound(double x) const noexcept;
  Polynomial derivative() const;

 private:
  std::vector<double> c_;
};

struct PolynomialRoot {
  double value{};
  /// The polynomial touches zero here without changing sign.
  bool tangent{};
};

/// All real roots in [lo, hi], ascending. Roots are isolated between the
/// real critical points (found recursively from the derivative), then
/// bracketed by bisection and polished with guarded Newton steps.
std::vector<PolynomialRoot> real_roots(const Polynomial& p, double lo, double hi);

}  // namespace gclab
