#pragma once

#include "gclab/covariance.hpp"

namespace gclab {

/// mu = 1 / (2^n sqrt(Det sigma)) for an n-mode state.
double purity(const CovarianceMatrix& m);

/// f(x) = (x + 1/2) ln(x + 1/2) - (x - 1/2) ln(x - 1/2), with f(1/2) = 0.
double entropy_kernel(double x);

/// Two modes: f(n_-) + f(n_+). One mode: the closed form in the purity.
double von_neumann_entropy(const CovarianceMatrix& m);

/// f(a) + f(b) - f(n_-) - f(n_+), with a = sqrt(Det alpha), b = sqrt(Det beta).
double mutual_information(const CovarianceMatrix& m);

struct NegativityResult {
  double log_negativity{};
  double negativity{};
  double nt_minus{};
  bool separable{};
};

/// PPT test and entanglement measures from the smallest partially
/// transposed symplectic eigenvalue.
NegativityResult log_negativity(const CovarianceMatrix& m);

}  // namespace gclab
