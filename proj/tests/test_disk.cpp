#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "phaselab/classical.hpp"
#include "phaselab/disk.hpp"
#include "phaselab/errors.hpp"
#include "phaselab/specfun.hpp"

using namespace phaselab;

namespace {

constexpr double kPi = std::numbers::pi;

double circ_dist(double a, double b) { return std::abs(std::remainder(a - b, 2.0 * kPi)); }

}  // namespace

TEST_CASE("order 1/2 closed form") {
  // H1_{1/2}(z) = -i sqrt(2/(pi z)) e^{iz}, so x = 2 (kR - pi/2) + pi = 2 kR.
  for (double k : {3.0, 50.0, 400.0})
    for (double R : {0.5, 1.0, 2.0}) CHECK(circ_dist(disk_exact(3, 0, k, R), 2.0 * k * R) < 1e-10);
}

TEST_CASE("exact argument reference values") {
  // mpmath: 2 arg H1_nu(z) + pi mod 2 pi
  CHECK(circ_dist(disk_exact(2, 0, 100.0, 1.0), 0.506366627214581343) < 1e-9);
  CHECK(circ_dist(disk_exact(3, 7, 50.0, 1.0), 3.73250167522300036) < 1e-9);
  // Same value through the integral representation.
  const HankelPair b = hankel1_integral(0.0, 100.0);
  CHECK(circ_dist(2.0 * std::arg(b.h1) + kPi, 0.506366627214581343) < 1e-9);
}

TEST_CASE("exact eigenvalue is unimodular") {
  for (int l : {0, 10, 99, 150}) {
    const HankelPair p = hankel1(l, 100.0);
    const std::complex<double> ev = -p.h1 / std::conj(p.h1);
    CHECK(std::abs(std::abs(ev) - 1.0) < 1e-10);
    CHECK(circ_dist(std::arg(ev), disk_exact(2, l, 100.0, 1.0)) < 1e-10);
  }
}

TEST_CASE("approximation endpoints and domain") {
  CHECK(circ_dist(disk_approx(2, 100, 100.0, 1.0), kPi / 2) < 1e-12);
  CHECK(circ_dist(disk_approx(2, 0, 37.0, 1.0), 2.0 * 37.0 + kPi / 2) < 1e-12);
  CHECK(circ_dist(disk_approx(2, 0, 20.0, 1.5), 2.0 * 20.0 * 1.5 + kPi / 2) < 1e-12);
  CHECK_THROWS_AS(disk_approx(2, 101, 100.0, 1.0), DomainError);
  const DiskEntry e = disk_entry(2, 101, 100.0, 1.0);
  CHECK(std::isnan(e.x_approx));
  CHECK_FALSE(e.in_range);
}

TEST_CASE("in-range filter") {
  // nu/k <= R (1 - (kR)^(-1/3)); at k = 1000, R = 1 the cut is at nu = 900.
  CHECK(disk_in_range(2, 899, 1000.0, 1.0));
  CHECK_FALSE(disk_in_range(2, 901, 1000.0, 1.0));
  CHECK(disk_in_range(4, 898, 1000.0, 1.0));
  CHECK_FALSE(disk_in_range(4, 900, 1000.0, 1.0));
}

TEST_CASE("error sweep rate") {
  const DiskSweep s = disk_error_sweep(2, 1.0, {50, 100, 200, 400});
  CHECK(s.slope <= -0.4);
  CHECK(s.slope >= -0.65);
  for (const auto& row : s.rows) {
    CHECK(row.sup_err <= 2.0);
    CHECK(row.l_in_range > 0);
  }
  CHECK_THROWS_AS(disk_error_sweep(2, 1.0, {100, 50, 200}), ConfigError);
}

TEST_CASE("disk ensemble count") {
  const CircleEnsemble e = disk_ensemble(2, 100.0, 1.0);
  CHECK(e.total_weight() == 201);
  const CircleEnsemble e3 = disk_ensemble(3, 20.0, 1.0);
  CHECK(e3.total_weight() == 21 * 21);
}
