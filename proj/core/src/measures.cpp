#include "gclab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gclab/error.hpp"
#include "gclab/tolerances.hpp"

namespace gclab {
namespace {

void require_bona_fide_two_mode(const CovarianceMatrix& m, const char* what) {
  if (m.mode_count() != 2) {
    throw Error(ErrorKind::DomainError, std::string(what) + " needs a two-mode (4x4) matrix");
  }
  require_bona_fide(m);
}

double single_mode_entropy(double mu) {
  if (mu >= 1.0) return 0.0;
  return (1.0 - mu) / (2.0 * mu) * std::log((1.0 + mu) / (1.0 - mu)) - std::log(2.0 * mu / (1.0 + mu));
}

}  // namespace

double purity(const CovarianceMatrix& m) {
  require_bona_fide(m);
  const double norm = m.mode_count() == 1 ? 2.0 : 4.0;
  const double mu = 1.0 / (norm * std::sqrt(m.determinant()));
  if (mu > 1.0 + tol::physical) {
    std::ostringstream os;
    os << "purity " << mu << " exceeds 1";
    throw Error(ErrorKind::InvalidState, os.str());
  }
  return std::min(mu, 1.0);
}

double entropy_kernel(double x) {
  if (!(x >= kVacuumVariance - tol::physical)) {
    std::ostringstream os;
    os << "entropy kernel argument " << x << " is below 1/2";
    throw Error(ErrorKind::DomainError, os.str());
  }
  const double excess = x - kVacuumVariance;
  if (excess <= tol::clamp) return 0.0;
  return (x + kVacuumVariance) * std::log1p(x - kVacuumVariance) - excess * std::log(excess);
}

double von_neumann_entropy(const CovarianceMatrix& m) {
  if (m.mode_count() == 1) return single_mode_entropy(purity(m));
  require_bona_fide(m);
  const SymplecticSpectrum s = symplectic_spectrum(m);
  return entropy_kernel(s.n_minus) + entropy_kernel(s.n_plus);
}

double mutual_information(const CovarianceMatrix& m) {
  require_bona_fide_two_mode(m, "mutual_information");
  const SymplecticInvariants inv = local_invariants(m);
  const SymplecticSpectrum s = symplectic_spectrum(m);
  const double info = entropy_kernel(std::sqrt(inv.det_alpha)) + entropy_kernel(std::sqrt(inv.det_beta)) -
                      entropy_kernel(s.n_minus) - entropy_kernel(s.n_plus);
  return info < 0.0 && info > -tol::physical ? 0.0 : info;
}

NegativityResult log_negativity(const CovarianceMatrix& m) {
  require_bona_fide_two_mode(m, "log_negativity");
  NegativityResult result;
  result.nt_minus = symplectic_spectrum(m).nt_minus;
  result.separable = result.nt_minus >= kVacuumVariance - tol::clamp;
  if (!result.separable) {
    result.log_negativity = -std::log(2.0 * result.nt_minus);
    result.negativity = 0.5 * (1.0 / (2.0 * result.nt_minus) - 1.0);
  }
  return result;
}

}  // namespace gclab
