#pragma once

#include <functional>
#include <memory>
#include <vector>

#include <boost/math/interpolators/cubic_hermite.hpp>

#include "phaselab/potential.hpp"

namespace phaselab {

// Sign convention: Sigma is the signed deflection of the outgoing direction
// relative to the incoming one, measured in the sense of the angular motion.
// A repulsive potential gives Sigma < 0; the hard ball gives
// Sigma_b = -2 arccos(alpha/R). G' = Sigma with G(R) = 0, and the Legendrian
// sojourn time is T = G - eta * Sigma, so T' = -eta * Sigma'.

struct TrajectoryState {
  double r, rho, phi, eta, t;
  double v_int;  // integral of V(r(t)) dt since the start
};

struct TrajectoryOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  bool record = true;  // keep every accepted step, not just the endpoints
};

// Integrates r' = 2 rho, rho' = -V'(r) + 2 eta^2/r^3, phi' = 2 eta/r^2 from an
// incoming state at r_start > R (phi = 0) until r returns to r_start. The last
// state is located on r = r_start by bisection on the dense output.
// Throws TrappedTrajectory when t_max is reached first.
std::vector<TrajectoryState> integrate_trajectory(const CentralPotential& pot, double eta,
                                                  double r_start, double t_max,
                                                  const TrajectoryOptions& opt = {});

// Largest root of 1 - eta^2/r^2 - V(r). Throws DegenerateTurningPoint when
// |F'(r_m)| <= 1e-8.
double turning_radius(const CentralPotential& pot, double eta);

// Scattering angle from the turning-point quadrature.
double scattering_angle(const CentralPotential& pot, double eta);

// Scattering angle read off an integrated trajectory started at r_start.
double trajectory_angle(const CentralPotential& pot, double eta, double r_start);

// Sojourn time in the Legendrian normalization: minus the excess of the action
// int xi . x' dt = 2 int (1 - V) dt over the free chord r = a, i.e.
// -2 ((t_out - t_in) - sqrt(a^2 - eta^2)) + 2 int V dt. For the hard ball this
// is the plain time delay at speed 2. Richardson-extrapolated over a in {2R, 4R, 8R}.
double sojourn_time(const CentralPotential& pot, double eta);

// Same quantity at a single chord radius a > R, without extrapolation.
double sojourn_time_at(const CentralPotential& pot, double eta, double a);

struct ScatteringProfile {
  std::vector<double> eta;  // increasing, within (0, R]
  std::vector<double> sigma;
  std::vector<double> T;
  std::vector<double> G;
  double R = 1.0;

  // Cubic Hermite interpolation of G with slopes Sigma; G = 0 for alpha >= R
  // and a quadratic continuation below the first grid point.
  double G_at(double alpha) const;
  double sigma_at(double alpha) const;

  void build_interpolant();

 private:
  std::shared_ptr<boost::math::interpolators::cubic_hermite<std::vector<double>>> interp_;
};

// 512 points on [1e-3 R, R].
std::vector<double> default_alpha_grid(double R, std::size_t n = 512);

// G(alpha) = -int_alpha^R Sigma, accumulated panel by panel with Gauss-Kronrod,
// and T = G - alpha * Sigma.
ScatteringProfile phase_generator(const CentralPotential& pot, const std::vector<double>& alpha_grid);
ScatteringProfile phase_generator(const CentralPotential& pot);

// Same construction from an arbitrary scattering-angle function vanishing above R.
ScatteringProfile phase_generator_from_sigma(const std::function<double(double)>& sigma,
                                             const std::vector<double>& alpha_grid, double R);

// Closed forms for the hard ball of radius R.
double G_ball(double alpha, double R);
double sigma_ball(double alpha, double R);

}  // namespace phaselab
