#include "gclab/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gclab/error.hpp"
#include "gclab/measures.hpp"
#include "gclab/ode.hpp"

namespace gclab {
namespace {

void check_inputs(const CovarianceMatrix& sigma0, const CovarianceMatrix& sigma_inf, double gamma, double t) {
  if (sigma0.mode_count() != 2 || sigma_inf.mode_count() != 2) {
    throw Error(ErrorKind::DomainError, "evolution needs two-mode (4x4) matrices");
  }
  if (!(gamma > 0.0)) throw Error(ErrorKind::DomainError, "damping rate must be > 0");
  if (!(t >= 0.0)) throw Error(ErrorKind::DomainError, "time must be >= 0");
  require_bona_fide(sigma0);
  require_bona_fide(sigma_inf);
}

std::array<double, 16> as_array(const CovarianceMatrix& m) {
  std::array<double, 16> out{};
  std::copy(m.entries().begin(), m.entries().end(), out.begin());
  return out;
}

}  // namespace

CovarianceMatrix evolve(const CovarianceMatrix& sigma0, const CovarianceMatrix& sigma_inf, double gamma, double t) {
  check_inputs(sigma0, sigma_inf, gamma, t);
  const double k = std::exp(-gamma * t);
  const double one_minus_k = -std::expm1(-gamma * t);
  std::array<double, 16> out{};
  for (std::size_t i = 0; i < 16; ++i) out[i] = k * sigma0.entries()[i] + one_minus_k * sigma_inf.entries()[i];
  return CovarianceMatrix::two_mode(out);
}

CovarianceMatrix evolve_ode_oracle(const CovarianceMatrix& sigma0, const CovarianceMatrix& sigma_inf, double gamma,
                                   double t, int steps) {
  check_inputs(sigma0, sigma_inf, gamma, t);
  if (steps < 1) throw Error(ErrorKind::DomainError, "oracle needs at least one step");
  const std::array<double, 16> target = as_array(sigma_inf);
  auto rhs = [&](double, const std::array<double, 16>& y) {
    std::array<double, 16> dy{};
    for (std::size_t i = 0; i < 16; ++i) dy[i] = -gamma * (y[i] - target[i]);
    return dy;
  };
  return CovarianceMatrix::two_mode(rk4_integrate(rhs, as_array(sigma0), 0.0, t, steps));
}

MetricsRow metrics_at(const CovarianceMatrix& sigma, double t) {
  MetricsRow row;
  row.t = t;
  row.purity = purity(sigma);
  const SymplecticSpectrum spectrum = symplectic_spectrum(sigma);
  row.n_minus = spectrum.n_minus;
  row.n_plus = spectrum.n_plus;
  row.von_neumann_entropy = von_neumann_entropy(sigma);
  row.mutual_information = mutual_information(sigma);
  const NegativityResult neg = log_negativity(sigma);
  row.log_negativity = neg.log_negativity;
  row.nt_minus = neg.nt_minus;
  row.separable = neg.separable;
  return row;
}

std::vector<MetricsRow> time_series(const EvolutionProblem& problem) {
  if (problem.times.empty()) throw Error(ErrorKind::DomainError, "time grid is empty");
  for (std::size_t i = 0; i < problem.times.size(); ++i) {
    if (!(problem.times[i] >= 0.0) || (i > 0 && !(problem.times[i] > problem.times[i - 1]))) {
      std::ostringstream os;
      os << "time grid must be strictly increasing and >= 0 (entry " << i << " = " << problem.times[i] << ")";
      throw Error(ErrorKind::DomainError, os.str());
    }
  }
  const CovarianceMatrix sigma0 = problem.initial.matrix();
  const CovarianceMatrix sigma_inf = asymptotic_covariance(problem.channel);
  std::vector<MetricsRow> rows;
  rows.reserve(problem.times.size());
  for (double t : problem.times) rows.push_back(metrics_at(evolve(sigma0, sigma_inf, problem.channel.gamma, t), t));
  return rows;
}

std::vector<double> linear_grid(double t_max, std::size_t points) {
  if (points == 0) throw Error(ErrorKind::DomainError, "grid needs at least one point");
  if (!(t_max >= 0.0)) throw Error(ErrorKind::DomainError, "grid end must be >= 0");
  if (points == 1) return {0.0};
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) grid[i] = t_max * static_cast<double>(i) / static_cast<double>(points - 1);
  return grid;
}

}  // namespace gclab
