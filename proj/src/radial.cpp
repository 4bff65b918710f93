#include "phaselab/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "phaselab/errors.hpp"
#include "phaselab/parallel.hpp"
#include "phaselab/specfun.hpp"

namespace phaselab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_dim(int d) {
  if (d < 2) throw ConfigError("dimension must be at least 2");
}

}  // namespace

double wrap_angle(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  if (y >= kTwoPi) y = 0.0;
  return y;
}

long long multiplicity(int d, int l) {
  check_dim(d);
  if (l < 0) throw ConfigError("multiplicity: l must be nonnegative");
  if (l == 0) return 1;
  if (d == 2) return 2;
  // (2l + d - 2) (l + d - 3)! / (l! (d - 2)!) = (2l + d - 2) C(l + d - 3, l) / (d - 2)
  const long long n = l + d - 3;
  const long long k = std::min<long long>(l, d - 3);
  long long c = 1;
  for (long long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return (2LL * l + d - 2) * c / (d - 2);
}

std::string flags_to_string(unsigned flags) {
  std::string s;
  auto add = [&](unsigned bit, const char* name) {
    if (flags & bit) {
      if (!s.empty()) s += '|';
      s += name;
    }
  };
  add(kFlagBadSet, "bad_set");
  add(kFlagSmallAlpha, "small_alpha");
  add(kFlagLargeL, "large_l");
  add(kFlagForbiddenFallback, "forbidden_fallback");
  add(kFlagError, "error");
  return s;
}

RadialSolution solve_radial(const CentralPotential& pot, int d, int l, double h, double r_match,
                            const RadialOptions& opt) {
  namespace ode = boost::numeric::odeint;
  using State = std::array<double, 2>;  // f, f'

  check_dim(d);
  if (l < 0) throw ConfigError("solve_radial: l must be nonnegative");
  if (!(h > 0.0)) throw ConfigError("solve_radial: h must be positive");
  const double R = pot.R();
  if (!(r_match >= R)) throw ConfigError("solve_radial: r_match must be at least R");

  const double nu = l + 0.5 * (d - 2);
  const double ih2 = 1.0 / (h * h);
  const PotentialValue v0 = pot.evaluate(0.0);

  // Frobenius series f = r^nu (1 + a2 r^2 + a4 r^4) with
  // 4k(nu + k) a_2k = sum_j q_2j a_(2k-2-2j), q = (V - 1)/h^2 = q0 + q2 r^2 + ...
  const double q0 = (v0.v - 1.0) * ih2;
  const double q2 = 0.5 * v0.vpp * ih2;
  const double a2 = q0 / (4.0 * (nu + 1.0));
  const double a4 = (q0 * a2 + q2) / (8.0 * (nu + 2.0));

  // a2 r^2 <= 1e-4 keeps the truncated tail below ~1e-13 relative.
  double r_seed = 0.1 * R;
  if (a2 != 0.0) r_seed = std::min(r_seed, 1e-2 / std::sqrt(std::abs(a2)));
  if (nu > 0.0) r_seed = std::min(r_seed, 0.1 * nu * h);

  const double rs2 = r_seed * r_seed;
  const double series = 1.0 + a2 * rs2 + a4 * rs2 * rs2;
  const double dseries = 2.0 * a2 * r_seed + 4.0 * a4 * rs2 * r_seed;
  State x{1.0, nu / r_seed + dseries / series};

  auto rhs = [&](const State& y, State& dy, double r) {
    const double v = pot(r);
    dy[0] = y[1];
    dy[1] = -y[1] / r + (nu * nu / (r * r) + (v - 1.0) * ih2) * y[0];
  };

  auto stepper = ode::make_controlled(opt.atol, opt.rtol, ode::runge_kutta_fehlberg78<State>());
  double r = r_seed;
  double dt = std::min(0.1 * r_seed, 0.1 * h);
  std::size_t steps = 0, tries = 0;
  while (r < r_match) {
    if (++tries > opt.max_steps)
      throw StiffnessError("solve_radial: step budget exhausted at l=" + std::to_string(l));
    if (r + dt > r_match) dt = r_match - r;
    if (stepper.try_step(rhs, x, r, dt) == ode::success) {
      ++steps;
      // The ODE is linear, so the state can be renormalized freely; this keeps
      // the growing solution in the forbidden region from overflowing.
      const double norm = std::abs(x[0]) + h * std::abs(x[1]);
      if (!(norm > 0.0) || !std::isfinite(norm))
        throw StiffnessError("solve_radial: solution blew up at l=" + std::to_string(l));
      x[0] /= norm;
      x[1] /= norm;
    }
  }
  return {x[0], x[1], r_seed, steps};
}

std::complex<double> exact_eigenvalue(const CentralPotential& pot, int d, int l, double h,
                                      double r_match, const RadialOptions& opt) {
  if (r_match <= 0.0) r_match = 2.0 * pot.R();
  const RadialSolution sol = solve_radial(pot, d, l, h, r_match, opt);
  const double nu = l + 0.5 * (d - 2);
  const double z = r_match / h;
  const BesselJY b = bessel_jy(nu, z);
  const double fz = sol.fp * h;  // df/dz
  // A is proportional to (f Y' - f_z Y) + i (f J' - f_z J); the eigenvalue B/A
  // = conj(A)/A = exp(-2i arg A).
  const double num = sol.f * b.jp - fz * b.j;
  const double den = sol.f * b.yp - fz * b.y;
  if (std::hypot(num, den) < 1e-300)
    throw NumericalError("exact_eigenvalue: matching degenerate at l=" + std::to_string(l));
  return std::polar(1.0, -2.0 * std::atan2(num, den));
}

std::complex<double> wkb_eigenvalue(const ScatteringProfile& profile, int d, int l, double h) {
  const double alpha = (l + 0.5 * (d - 2)) * h;
  return std::polar(1.0, profile.G_at(alpha) / h);
}

std::vector<double> bad_alpha_set(const CentralPotential& pot, const ScatteringProfile& profile) {
  std::vector<double> out;
  const auto& a = profile.eta;
  const auto& s = profile.sigma;
  double lo = s[0], hi = s[0];
  for (double v : s) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  constexpr double kNoise = 1e-9;  // sign flips of |Sigma - k pi| below this are quadrature noise
  const int kmin = static_cast<int>(std::ceil(lo / kPi));
  const int kmax = static_cast<int>(std::floor(hi / kPi));
  for (int k = kmin; k <= kmax; ++k) {
    const double target = k * kPi;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i + 1] >= profile.R) break;
      const double f0 = s[i] - target, f1 = s[i + 1] - target;
      if ((f0 < 0.0) == (f1 < 0.0) && f0 != 0.0) continue;
      if (std::max(std::abs(f0), std::abs(f1)) < kNoise) continue;
      auto f = [&](double x) { return scattering_angle(pot, x) - target; };
      std::uintmax_t iters = 100;
      auto stop = [](double x0, double x1) { return std::abs(x1 - x0) < 1e-12; };
      double root = a[i];
      if (f0 != 0.0) {
        auto br = boost::math::tools::toms748_solve(f, a[i], a[i + 1], f0, f1, stop, iters);
        root = 0.5 * (br.first + br.second);
      }
      out.push_back(root);
    }
  }
  out.push_back(profile.R);
  std::sort(out.begin(), out.end());
  return out;
}

PhaseShiftTable build_table(const CentralPotential& pot, const ScatteringProfile& profile, int d,
                            double h, int l_max, const TableOptions& opt) {
  check_dim(d);
  if (!(h > 0.0)) throw ConfigError("build_table: h must be positive");
  const double R = pot.R();
  if (l_max < static_cast<int>(std::floor(R / h + 1e-9)))
    throw ConfigError("build_table: l_max must be at least R/h");

  PhaseShiftTable table;
  table.d = d;
  table.h = h;
  table.R = R;
  table.potential_id = pot.id();
  table.entries.resize(static_cast<std::size_t>(l_max) + 1);

  const bool odd = d % 2 == 1;
  std::vector<double> bad;
  if (odd) bad = bad_alpha_set(pot, profile);
  const double large_l = R + std::pow(h, opt.kappa);

  parallel_for(table.entries.size(), [&](std::size_t idx) {
    const int l = static_cast<int>(idx);
    PhaseShiftEntry& e = table.entries[idx];
    e.d = d;
    e.l = l;
    e.h = h;
    e.nu = l + 0.5 * (d - 2);
    e.multiplicity = multiplicity(d, l);
    const double alpha = e.nu * h;
    if (odd) {
      // The set contains [R, inf) as well as the listed points.
      if (alpha >= R) e.flags |= kFlagBadSet;
      for (double b : bad)
        if (std::abs(alpha - b) < opt.epsilon) e.flags |= kFlagBadSet;
      if (alpha < opt.epsilon) e.flags |= kFlagSmallAlpha;
    }
    if (l * h >= large_l) e.flags |= kFlagLargeL;

    try {
      e.eigenvalue = exact_eigenvalue(pot, d, l, h, opt.r_match, opt.radial);
    } catch (const StiffnessError& ex) {
      e.eigenvalue = 1.0;
      e.flags |= kFlagForbiddenFallback;
      e.message = ex.what();
    } catch (const OverflowError& ex) {
      e.eigenvalue = 1.0;
      e.flags |= kFlagForbiddenFallback;
      e.message = ex.what();
    } catch (const NumericalError& ex) {
      e.eigenvalue = 1.0;
      e.flags |= kFlagError;
      e.message = ex.what();
    }
    e.beta = wrap_angle(std::arg(e.eigenvalue));
    e.wkb = wkb_eigenvalue(profile, d, l, h);
    e.beta_wkb = wrap_angle(std::arg(e.wkb));
    e.err = std::abs(e.eigenvalue - e.wkb);
  });
  return table;
}

double max_interior_error(const PhaseShiftTable& table, double margin) {
  constexpr unsigned skip = kFlagBadSet | kFlagSmallAlpha | kFlagError;
  double worst = 0.0;
  for (const auto& e : table.entries) {
    if (e.l * table.h > table.R - margin + 1e-12) continue;
    if (e.flags & skip) continue;
    worst = std::max(worst, e.err);
  }
  return worst;
}

}  // namespace phaselab
