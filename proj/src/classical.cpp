#include "phaselab/classical.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "phaselab/errors.hpp"
#include "phaselab/parallel.hpp"

namespace phaselab {

namespace {

constexpr double kPi = std::numbers::pi;
using GK15 = boost::math::quadrature::gauss_kronrod<double, 15>;
using GK31 = boost::math::quadrature::gauss_kronrod<double, 31>;

}  // namespace

double turning_radius(const CentralPotential& pot, double eta) {
  eta = std::abs(eta);
  const double R = pot.R();
  if (eta == 0.0) return interaction_region(pot).r0;
  if (eta >= R || pot.is_zero()) return eta;

  auto F = [&](double r) { return 1.0 - eta * eta / (r * r) - pot(r); };
  // F(R) > 0 and F -> -inf at 0, so the first sign change met from above is
  // the largest root.
  constexpr int n = 2048;
  const double lo = 1e-3 * eta;
  double prev_r = R, prev_f = F(R);
  double root = -1.0;
  for (int i = 1; i <= n; ++i) {
    const double r = R - (R - lo) * i / n;
    const double f = F(r);
    if (f <= 0.0) {
      if (f == 0.0) {
        root = r;
      } else {
        std::uintmax_t iters = 200;
        auto stop = [R](double a, double b) { return std::abs(b - a) <= 1e-15 * R; };
        auto br = boost::math::tools::toms748_solve(F, r, prev_r, f, prev_f, stop, iters);
        root = 0.5 * (br.first + br.second);
      }
      break;
    }
    prev_r = r;
    prev_f = f;
  }
  if (root < 0.0) throw NumericalError("turning_radius: no turning point for eta=" + std::to_string(eta));
  const double fp = 2.0 * eta * eta / (root * root * root) - pot.evaluate(root).vp;
  if (std::abs(fp) <= kSimpleZeroTol)
    throw DegenerateTurningPoint("turning_radius: |F'(r_m)| <= 1e-8 at eta=" + std::to_string(eta));
  return root;
}

double scattering_angle(const CentralPotential& pot, double eta) {
  if (eta < 0.0) return -scattering_angle(pot, -eta);
  const double R = pot.R();
  if (eta >= R || pot.is_zero()) return 0.0;
  if (eta == 0.0) return interaction_region(pot).r0 > 0.0 ? -kPi : 0.0;

  const double rm = turning_radius(pot, eta);
  const double e2 = eta * eta;
  const PotentialValue pm = pot.evaluate(rm);
  const double U = std::sqrt(R - rm);

  // r = r_m + u^2 turns the inverse square root at r_m into a smooth integrand
  // 2 eta / (r^2 sqrt(q)) with q = (F(r) - F(r_m)) / u^2. The centrifugal part
  // of q is written without cancellation; the potential part switches to its
  // Taylor expansion where the difference quotient would lose digits.
  auto integrand = [&](double u) {
    const double u2 = u * u;
    const double r = rm + u2;
    const double centrifugal = e2 * (r + rm) / (r * r * rm * rm);
    const double dv = u2 < 1e-6 * R * R ? pm.vp + 0.5 * pm.vpp * u2 : (pot(r) - pm.v) / u2;
    return 2.0 * eta / (r * r * std::sqrt(centrifugal - dv));
  };
  const double inner = GK31::integrate(integrand, 0.0, U, 10, 1e-10);
  return 2.0 * (inner + std::asin(eta / R)) - kPi;
}

std::vector<TrajectoryState> integrate_trajectory(const CentralPotential& pot, double eta,
                                                  double r_start, double t_max,
                                                  const TrajectoryOptions& opt) {
  namespace ode = boost::numeric::odeint;
  using State = std::array<double, 4>;  // r, rho, phi, int V dt

  if (!(r_start > pot.R())) throw ConfigError("integrate_trajectory: r_start must exceed R");
  const double kin = 1.0 - eta * eta / (r_start * r_start);
  if (kin < 0.0) {
    // The free path with this eta never reaches r_start from inside; nothing to integrate.
    throw ConfigError("integrate_trajectory: |eta| must be below r_start");
  }
  auto rhs = [&](const State& x, State& dx, double) {
    const double r = x[0];
    dx[0] = 2.0 * x[1];
    dx[1] = -pot.evaluate(r).vp + 2.0 * eta * eta / (r * r * r);
    dx[2] = 2.0 * eta / (r * r);
    dx[3] = pot(r);
  };

  State x{r_start, -std::sqrt(kin), 0.0, 0.0};
  auto stepper = ode::make_dense_output(opt.atol, opt.rtol, ode::runge_kutta_dopri5<State>());
  stepper.initialize(x, 0.0, 1e-3 * r_start);

  std::vector<TrajectoryState> out;
  out.push_back({x[0], x[1], x[2], eta, 0.0, 0.0});
  while (stepper.current_time() < t_max) {
    const auto [t0, t1] = stepper.do_step(rhs);
    const State& cur = stepper.current_state();
    if (cur[0] >= r_start && cur[1] > 0.0) {
      double lo = t0, hi = t1;
      State mid;
      for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double tm = 0.5 * (lo + hi);
        stepper.calc_state(tm, mid);
        (mid[0] < r_start ? lo : hi) = tm;
      }
      stepper.calc_state(hi, mid);
      out.push_back({mid[0], mid[1], mid[2], eta, hi, mid[3]});
      return out;
    }
    if (opt.record) out.push_back({cur[0], cur[1], cur[2], eta, t1, cur[3]});
  }
  throw TrappedTrajectory("integrate_trajectory: no exit before t_max at eta=" + std::to_string(eta));
}

namespace {

double default_t_max(double r_start, double R) { return 1e3 * (r_start + R); }

}  // namespace

double trajectory_angle(const CentralPotential& pot, double eta, double r_start) {
  TrajectoryOptions opt;
  opt.record = false;
  const auto traj = integrate_trajectory(pot, eta, r_start, default_t_max(r_start, pot.R()), opt);
  const double dphi = traj.back().phi;
  const double free_sweep = kPi - 2.0 * std::asin(std::abs(eta) / r_start);
  return dphi - (eta < 0.0 ? -free_sweep : free_sweep);
}

double sojourn_time_at(const CentralPotential& pot, double eta, double a) {
  TrajectoryOptions opt;
  opt.record = false;
  const auto traj = integrate_trajectory(pot, eta, a, default_t_max(a, pot.R()), opt);
  const double dt = traj.back().t - std::sqrt(a * a - eta * eta);
  return -2.0 * dt + 2.0 * traj.back().v_int;
}

double sojourn_time(const CentralPotential& pot, double eta) {
  const double R = pot.R();
  if (std::abs(eta) >= R || pot.is_zero()) return 0.0;
  const double d2 = sojourn_time_at(pot, eta, 2.0 * R);
  const double d4 = sojourn_time_at(pot, eta, 4.0 * R);
  const double d8 = sojourn_time_at(pot, eta, 8.0 * R);
  const double r1 = 2.0 * d4 - d2;
  const double r2 = 2.0 * d8 - d4;
  return (4.0 * r2 - r1) / 3.0;
}

double G_ball(double alpha, double R) {
  alpha = std::abs(alpha);
  if (alpha >= R) return 0.0;
  return 2.0 * std::sqrt(R * R - alpha * alpha) - 2.0 * alpha * std::acos(alpha / R);
}

double sigma_ball(double alpha, double R) {
  if (std::abs(alpha) >= R) return 0.0;
  const double s = -2.0 * std::acos(std::abs(alpha) / R);
  return alpha < 0.0 ? -s : s;
}

std::vector<double> default_alpha_grid(double R, std::size_t n) {
  std::vector<double> g(n);
  const double lo = 1e-3 * R;
  for (std::size_t i = 0; i < n; ++i)
    g[i] = lo + (R - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  g.back() = R;
  return g;
}

ScatteringProfile phase_generator_from_sigma(const std::function<double(double)>& sigma,
                                             const std::vector<double>& alpha_grid, double R) {
  if (alpha_grid.size() < 2) throw ConfigError("phase_generator: need at least 2 grid points");
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    if (!(alpha_grid[i] > 0.0) || alpha_grid[i] > R ||
        (i > 0 && !(alpha_grid[i] > alpha_grid[i - 1])))
      throw ConfigError("phase_generator: grid must be increasing within (0, R]");
  }
  ScatteringProfile p;
  p.R = R;
  p.eta = alpha_grid;
  if (p.eta.back() < R) p.eta.push_back(R);
  const std::size_t n = p.eta.size();
  p.sigma.assign(n, 0.0);
  p.G.assign(n, 0.0);
  p.T.assign(n, 0.0);

  std::vector<double> panel(n, 0.0);  // integral of Sigma over [eta_i, eta_{i+1}]
  parallel_for(n, [&](std::size_t i) {
    p.sigma[i] = p.eta[i] >= R ? 0.0 : sigma(p.eta[i]);
    // The depth cap bounds refinement where Sigma is close to 0 near R.
    if (i + 1 < n) panel[i] = GK15::integrate(sigma, p.eta[i], p.eta[i + 1], 10, 1e-10);
  });
  for (std::size_t i = n - 1; i-- > 0;) p.G[i] = p.G[i + 1] - panel[i];
  for (std::size_t i = 0; i < n; ++i) p.T[i] = p.G[i] - p.eta[i] * p.sigma[i];
  p.build_interpolant();
  return p;
}

ScatteringProfile phase_generator(const CentralPotential& pot, const std::vector<double>& alpha_grid) {
  return phase_generator_from_sigma([&pot](double a) { return scattering_angle(pot, a); }, alpha_grid,
                                    pot.R());
}

ScatteringProfile phase_generator(const CentralPotential& pot) {
  return phase_generator(pot, default_alpha_grid(pot.R()));
}

void ScatteringProfile::build_interpolant() {
  interp_ = std::make_shared<boost::math::interpolators::cubic_hermite<std::vector<double>>>(
      std::vector<double>(eta), std::vector<double>(G), std::vector<double>(sigma));
}

namespace {

// Slope of Sigma at the first grid point, for the continuation toward 0.
double leading_slope(const ScatteringProfile& p) {
  return (p.sigma[1] - p.sigma[0]) / (p.eta[1] - p.eta[0]);
}

}  // namespace

double ScatteringProfile::G_at(double alpha) const {
  alpha = std::abs(alpha);
  if (alpha >= R) return 0.0;
  if (alpha >= eta.front()) return (*interp_)(alpha);
  const double d = eta.front() - alpha;
  return G.front() - (sigma.front() * d - 0.5 * leading_slope(*this) * d * d);
}

double ScatteringProfile::sigma_at(double alpha) const {
  const double sgn = alpha < 0.0 ? -1.0 : 1.0;
  alpha = std::abs(alpha);
  if (alpha >= R) return 0.0;
  if (alpha >= eta.front()) return sgn * interp_->prime(alpha);
  return sgn * (sigma.front() - leading_slope(*this) * (eta.front() - alpha));
}

}  // namespace phaselab
