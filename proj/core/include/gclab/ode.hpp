#pragma once

#include <array>
#include <cstddef>

namespace gclab {

/// Classical fixed-step fourth-order Runge-Kutta for y' = rhs(t, y) on
/// fixed-size real state vectors.
template <std::size_t N, class Rhs>
std::array<double, N> rk4_integrate(Rhs&& rhs, std::array<double, N> y, double t0, double t1, int steps) {
  using State = std::array<double, N>;
  const double h = (t1 - t0) / steps;
  auto shifted = [](const State& base, const State& slope, double scale) {
    State out;
    for (std::size_t i = 0; i < N; ++i) out[i] = base[i] + scale * slope[i];
    return out;
  };
  double t = t0;
  for (int step = 0; step < steps; ++step) {
    const State k1 = rhs(t, y);
    const State k2 = rhs(t + 0.5 * h, shifted(y, k1, 0.5 * h));
    const State k3 = rhs(t + 0.5 * h, shifted(y, k2, 0.5 * h));
    const State k4 = rhs(t + h, shifted(y, k3, h));
    for (std::size_t i = 0; i < N; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    t = t0 + (step + 1) * h;
  }
  return y;
}

}  // namespace gclab
