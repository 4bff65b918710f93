#include <doctest.h>

#include <cmath>
#include <numbers>

#include "phaselab/classical.hpp"
#include "phaselab/errors.hpp"

using namespace phaselab;

namespace {

constexpr double kPi = std::numbers::pi;

const CentralPotential& unit_bump() {
  static const CentralPotential v = CentralPotential::bump(5.0);
  return v;
}

}  // namespace

TEST_CASE("hard-ball closed forms") {
  const double R = 1.7;
  CHECK(G_ball(0.0, R) == doctest::Approx(2.0 * R));
  CHECK(G_ball(R, R) == 0.0);
  CHECK(G_ball(2.0 * R, R) == 0.0);
  CHECK(sigma_ball(0.0, R) == doctest::Approx(-kPi));
  for (double a : {0.2, 0.9, 1.5}) {
    const double step = 1e-6;
    const double fd = (G_ball(a + step, R) - G_ball(a - step, R)) / (2 * step);
    CHECK(std::abs(fd - sigma_ball(a, R)) < 1e-8);
  }
}

TEST_CASE("scattering angle reference values") {
  // mpmath quadrature of the turning-point integral, bump c = 5.
  CHECK(std::abs(scattering_angle(unit_bump(), 0.3) - -1.9567664758159922) < 1e-8);
  CHECK(std::abs(scattering_angle(unit_bump(), 0.5) - -1.3920911563796223) < 1e-8);
  CHECK(std::abs(scattering_angle(unit_bump(), 0.8) - -0.52858471327574108) < 1e-8);
  CHECK(scattering_angle(unit_bump(), -0.5) == -scattering_angle(unit_bump(), 0.5));
  CHECK(scattering_angle(unit_bump(), 1.2) == 0.0);
  CHECK(scattering_angle(CentralPotential::zero(), 0.4) == 0.0);
  CHECK(scattering_angle(unit_bump(), 0.0) == doctest::Approx(-kPi));
}

TEST_CASE("turning radius") {
  const double eta = 0.45;
  const double rm = turning_radius(unit_bump(), eta);
  CHECK(std::abs(1.0 - eta * eta / (rm * rm) - unit_bump()(rm)) < 1e-12);
  CHECK(turning_radius(CentralPotential::zero(), 0.3) == 0.3);
  CHECK(turning_radius(unit_bump(), 1.4) == 1.4);
}

TEST_CASE("quadrature and trajectory angles agree") {
  for (double eta : {0.05, 0.3, 0.6, 0.95}) {
    CAPTURE(eta);
    const double q = scattering_angle(unit_bump(), eta);
    const double t = trajectory_angle(unit_bump(), eta, 2.0);
    CHECK(std::abs(q - t) < 1e-6);
  }
}

TEST_CASE("trajectory errors") {
  CHECK_THROWS_AS(integrate_trajectory(unit_bump(), 0.3, 0.9, 100.0), ConfigError);
  CHECK_THROWS_AS(integrate_trajectory(unit_bump(), 2.5, 2.0, 100.0), ConfigError);
  CHECK_THROWS_AS(integrate_trajectory(unit_bump(), 0.3, 2.0, 0.5), TrappedTrajectory);
  const auto traj = integrate_trajectory(unit_bump(), 0.3, 2.0, 100.0);
  CHECK(traj.back().r == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(traj.back().rho > 0.0);
}

TEST_CASE("phase generator, sojourn time and the Legendrian relation") {
  const ScatteringProfile p = phase_generator(unit_bump());
  CHECK(p.eta.back() == 1.0);
  CHECK(p.G.back() == 0.0);
  CHECK(std::abs(p.G_at(0.6) - 0.204709021824713) < 1e-7);
  CHECK(p.G_at(1.3) == 0.0);
  for (double eta : {0.2, 0.5, 0.8}) {
    CAPTURE(eta);
    const double tau = sojourn_time(unit_bump(), eta);
    const double T = p.G_at(eta) - eta * p.sigma_at(eta);
    CHECK(std::abs(tau - T) < 1e-5);
  }
  // dT/deta = -eta dSigma/deta
  const double eta = 0.5, step = 1e-3;
  const double dT = (sojourn_time(unit_bump(), eta + step) - sojourn_time(unit_bump(), eta - step)) / (2 * step);
  const double dS = (scattering_angle(unit_bump(), eta + step) - scattering_angle(unit_bump(), eta - step)) / (2 * step);
  CHECK(std::abs(dT + eta * dS) < 1e-3 * std::abs(eta * dS));
}

TEST_CASE("generator from the hard-ball angle reproduces G_b") {
  const double R = 1.0;
  const ScatteringProfile p =
      phase_generator_from_sigma([R](double a) { return sigma_ball(a, R); }, default_alpha_grid(R), R);
  for (double a : {0.01, 0.3, 0.7, 0.9}) {
    CAPTURE(a);
    CHECK(std::abs(p.G_at(a) - G_ball(a, R)) < 1e-9);
  }
  CHECK_THROWS_AS(phase_generator_from_sigma([](double) { return 0.0; }, {0.5, 0.4}, 1.0), ConfigError);
}
