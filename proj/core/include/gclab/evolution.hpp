#pragma once

#include <cstddef>
#include <vector>

#include "gclab/channel.hpp"
#include "gclab/covariance.hpp"

namespace gclab {

/// sigma(t) = sigma_inf (1 - e^{-gamma t}) + sigma0 e^{-gamma t}.
/// Both inputs must be bona fide 4x4 matrices; gamma > 0, t >= 0.
CovarianceMatrix evolve(const CovarianceMatrix& sigma0, const CovarianceMatrix& sigma_inf, double gamma, double t);

/// Independent route to evolve(): integrates d sigma/dt = -gamma (sigma - sigma_inf)
/// with `steps` fixed RK4 steps.
CovarianceMatrix evolve_ode_oracle(const CovarianceMatrix& sigma0, const CovarianceMatrix& sigma_inf, double gamma,
                                   double t, int steps);

struct EvolutionProblem {
  StandardForm initial;
  ChannelSpec channel;
  /// Strictly increasing, t >= 0.
  std::vector<double> times;
};

/// One sampled time point of the evolution.
struct MetricsRow {
  double t{};
  double purity{};
  double von_neumann_entropy{};
  double mutual_information{};
  double log_negativity{};
  double nt_minus{};
  double n_minus{};
  double n_plus{};
  bool separable{};
};

MetricsRow metrics_at(const CovarianceMatrix& sigma, double t);

std::vector<MetricsRow> time_series(const EvolutionProblem& problem);

/// `points` equally spaced times on [0, t_max]; a single point gives {0}.
std::vector<double> linear_grid(double t_max, std::size_t points);

}  // namespace gclab
