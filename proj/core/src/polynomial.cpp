#include "gclab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gclab {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

int sign_of(const Polynomial& p, double x) {
  const double v = p(x);
  if (std::abs(v) <= p.evaluation_bound(x)) return 0;
  return v > 0.0 ? 1 : -1;
}

// p has opposite strict signs at lo and hi and is monotone in between.
double bracketed_root(const Polynomial& p, double lo, double hi) {
  const Polynomial dp = p.derivative();
  // Raw signs: on a monotone bracket they stay consistent until the interval
  // shrinks into the rounding band around the root.
  const bool negative_lo = p(lo) < 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double v = p(mid);
    if (v == 0.0) {
      lo = hi = mid;
      break;
    }
    ((v < 0.0) == negative_lo ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  const double width = std::max(hi - lo, 4.0 * kEps * std::max(1.0, std::abs(x)));
  for (int iter = 0; iter < 3; ++iter) {
    const double slope = dp(x);
    if (slope == 0.0) break;
    const double next = x - p(x) / slope;
    if (!(std::abs(next - x) <= width)) break;
    x = next;
  }
  return x;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {}

Polynomial::Polynomial(std::initializer_list<double> coefficients) : c_(coefficients) {}

int Polynomial::degree() const noexcept {
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
    if (c_[static_cast<std::size_t>(i)] != 0.0) return i;
  return -1;
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluation_bound(double x) const noexcept {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * ax + std::abs(*it);
  return 8.0 * static_cast<double>(c_.size() + 1) * kEps * acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial{0.0};
  std::vector<double> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
  return Polynomial(std::move(d));
}

std::vector<PolynomialRoot> real_roots(const Polynomial& p, double lo, double hi) {
  std::vector<PolynomialRoot> roots;
  const int deg = p.degree();
  if (deg <= 0 || !(lo <= hi)) return roots;
  if (deg == 1) {
    const double x = -p.coefficients()[0] / p.coefficients()[1];
    if (x >= lo && x <= hi) roots.push_back({x, false});
    return roots;
  }

  std::vector<double> knots{lo};
  for (const PolynomialRoot& c : real_roots(p.derivative(), lo, hi))
    if (c.value > knots.back()) knots.push_back(c.value);
  if (hi > knots.back()) knots.push_back(hi);

  auto push = [&roots](double x, bool tangent) {
    if (!roots.empty() && std::abs(roots.back().value - x) <= 8.0 * kEps * std::max(1.0, std::abs(x))) return;
    roots.push_back({x, tangent});
  };

  for (std::size_t i = 0; i < knots.size(); ++i) {
    const double x = knots[i];
    const int s = sign_of(p, x);
    const bool interior = i > 0 && i + 1 < knots.size();
    if (s == 0) {
      bool tangent = false;
      if (interior) tangent = sign_of(p, knots[i - 1]) * sign_of(p, knots[i + 1]) > 0;
      push(x, tangent);
    }
    if (i + 1 < knots.size()) {
      const int s_next = sign_of(p, knots[i + 1]);
      if (s != 0 && s_next != 0 && s != s_next) push(bracketed_root(p, x, knots[i + 1]), false);
    }
  }
  return roots;
}

}  // namespace gclab
