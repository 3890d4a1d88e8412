#include <doctest.h>

#include <cmath>
#include <vector>

#include "gclab/error.hpp"
#include "gclab/evolution.hpp"
#include "gclab/measures.hpp"
#include "gclab/ode.hpp"
#include "test_support.hpp"

using namespace gclab;
using gclab::testing::close_rel;
using gclab::testing::make_rng;
using gclab::testing::uniform;

namespace {

double max_abs_diff(const CovarianceMatrix& x, const CovarianceMatrix& y) {
  double d = 0.0;
  for (std::size_t k = 0; k < 16; ++k) d = std::max(d, std::abs(x.entries()[k] - y.entries()[k]));
  return d;
}

CovarianceMatrix random_initial(std::mt19937_64& rng) {
  return transform_local(gclab::testing::random_standard_form(rng).matrix(), gclab::testing::random_local_symplectic(rng),
                         gclab::testing::random_local_symplectic(rng));
}

}  // namespace

TEST_CASE("rk4 integrates exponential decay") {
  const auto y = rk4_integrate<1>([](double, const std::array<double, 1>& v) { return std::array<double, 1>{-v[0]}; },
                                  {1.0}, 0.0, 1.0, 100);
  CHECK(y[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-9));
}

TEST_CASE("evolve endpoints") {
  auto rng = make_rng(401);
  const CovarianceMatrix s0 = random_initial(rng);
  const ChannelSpec ch = gclab::testing::random_channel(rng);
  const CovarianceMatrix inf = asymptotic_covariance(ch);
  CHECK(max_abs_diff(evolve(s0, inf, ch.gamma, 0.0), s0) == 0.0);
  CHECK(max_abs_diff(evolve(s0, inf, ch.gamma, 60.0 / ch.gamma), inf) <= 1e-12);
}

TEST_CASE("evolve argument checks") {
  const CovarianceMatrix s0 = StandardForm{2, 1, 1, -1}.matrix();
  const CovarianceMatrix inf = CovarianceMatrix::vacuum(2);
  CHECK_THROWS_AS(evolve(s0, inf, 0.0, 1.0), Error);
  CHECK_THROWS_AS(evolve(s0, inf, 1.0, -1.0), Error);
  CHECK_THROWS_AS(evolve(StandardForm{1, 1, 1, -1}.matrix(), inf, 1.0, 1.0), Error);
  CHECK_THROWS_AS(evolve(CovarianceMatrix::vacuum(1), inf, 1.0, 1.0), Error);
}

TEST_CASE("semigroup property") {
  auto rng = make_rng(402);
  for (int i = 0; i < 500; ++i) {
    const CovarianceMatrix s0 = random_initial(rng);
    const ChannelSpec ch = gclab::testing::random_channel(rng);
    const CovarianceMatrix inf = asymptotic_covariance(ch);
    const double t1 = uniform(rng, 0.0, 3.0), t2 = uniform(rng, 0.0, 3.0);
    const CovarianceMatrix two_step = evolve(evolve(s0, inf, ch.gamma, t1), inf, ch.gamma, t2);
    const CovarianceMatrix one_step = evolve(s0, inf, ch.gamma, t1 + t2);
    for (std::size_t k = 0; k < 16; ++k) CHECK(close_rel(two_step.entries()[k], one_step.entries()[k], 1e-12));
  }
}

TEST_CASE("evolution preserves bona fide states") {
  auto rng = make_rng(403);
  for (int i = 0; i < 1000; ++i) {
    const CovarianceMatrix s0 = random_initial(rng);
    const ChannelSpec ch = gclab::testing::random_channel(rng);
    const CovarianceMatrix out = evolve(s0, asymptotic_covariance(ch), ch.gamma, uniform(rng, 0.0, 20.0));
    CHECK(validate_covariance(out).bona_fide);
    CHECK(gclab::testing::bona_fide_oracle(gclab::testing::to_eigen(out), 1e-10));
  }
}

TEST_CASE("purity tends to the product of bath purities") {
  auto rng = make_rng(404);
  for (int i = 0; i < 200; ++i) {
    const CovarianceMatrix s0 = random_initial(rng);
    const ChannelSpec ch = gclab::testing::random_channel(rng);
    const CovarianceMatrix late = evolve(s0, asymptotic_covariance(ch), ch.gamma, 60.0 / ch.gamma);
    CHECK(purity(late) == doctest::Approx(ch.bath1.mu() * ch.bath2.mu()).epsilon(1e-9));
  }
}

TEST_CASE("correlation block decays exponentially") {
  auto rng = make_rng(405);
  for (int i = 0; i < 200; ++i) {
    const StandardForm sf = gclab::testing::random_standard_form(rng);
    const ChannelSpec ch = gclab::testing::random_channel(rng);
    const double t = uniform(rng, 0.0, 5.0);
    const Mat2 g = evolve(sf.matrix(), asymptotic_covariance(ch), ch.gamma, t).gamma();
    const double k = std::exp(-ch.gamma * t);
    CHECK(std::abs(g.xx - sf.c1 * k) <= 1e-12);
    CHECK(std::abs(g.pp - sf.c2 * k) <= 1e-12);
    CHECK(g.xp == 0.0);
    CHECK(g.px == 0.0);
  }
}

TEST_CASE("ode oracle reproduces the closed form") {
  auto rng = make_rng(406);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CovarianceMatrix s0 = random_initial(rng);
    const ChannelSpec ch = gclab::testing::random_channel(rng);
    const CovarianceMatrix inf = asymptotic_covariance(ch);
    const double t = uniform(rng, 0.0, 5.0) / ch.gamma;
    worst = std::max(worst, max_abs_diff(evolve_ode_oracle(s0, inf, ch.gamma, t, 1000), evolve(s0, inf, ch.gamma, t)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("time series") {
  EvolutionProblem p;
  p.initial = squeezed_thermal_state(1.0, 1.0);
  p.channel = {Bath::thermal(0.5), Bath::thermal(0.5), 1.0};
  p.times = linear_grid(3.0, 301);
  REQUIRE(p.times.size() == 301);
  CHECK(p.times.front() == 0.0);
  CHECK(p.times.back() == 3.0);
  const std::vector<MetricsRow> rows = time_series(p);
  REQUIRE(rows.size() == 301);
  CHECK(rows[0].purity == doctest::Approx(1.0));
  CHECK(rows[0].log_negativity == doctest::Approx(2.0));
  CHECK_FALSE(rows[0].separable);
  CHECK(rows.back().separable);
  // Thermal baths only ever destroy entanglement here.
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].nt_minus >= rows[i - 1].nt_minus - 1e-12);

  p.times = {0.0, 1.0, 1.0};
  CHECK_THROWS_AS(time_series(p), Error);
  p.times = {};
  CHECK_THROWS_AS(time_series(p), Error);
  p.times = {-1.0, 0.0};
  CHECK_THROWS_AS(time_series(p), Error);
  CHECK(linear_grid(2.0, 1) == std::vector<double>{0.0});
}
