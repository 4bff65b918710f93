#pragma once

#include <memory>
#include <string>
#include <vector>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <json.hpp>

namespace phaselab {

enum class Family { Zero, Bump, ScaledBump, PolynomialTimesBump, Tabulated };

struct PotentialValue {
  double v, vp, vpp;
};

// Smooth radial potential supported in r < R, immutable after construction.
//
//   zero                   V = 0
//   bump                   V = c exp(s / (r^2 - R^2))            (s defaults to 1)
//   scaled-bump            V = c exp(s R^2 / (r^2 - R^2))
//   polynomial-times-bump  V = sum_k a_k (r/R)^(2k) exp(s R^2 / (r^2 - R^2))
//   tabulated              cubic B-spline through values on a uniform grid of [0, R]
class CentralPotential {
 public:
  static CentralPotential zero(double R = 1.0);
  static CentralPotential bump(double c, double R = 1.0, double s = 1.0);
  static CentralPotential scaled_bump(double c, double R = 1.0, double s = 1.0);
  static CentralPotential polynomial_times_bump(std::vector<double> coeffs, double R = 1.0,
                                                double s = 1.0);
  static CentralPotential tabulated(std::vector<double> values, double R);

  // Accepts a file path or an inline JSON object. Throws ConfigError.
  static CentralPotential from_spec(const std::string& path_or_json);
  static CentralPotential from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  std::string id() const;

  PotentialValue evaluate(double r) const;
  double operator()(double r) const { return evaluate(r).v; }

  double R() const { return R_; }
  Family family() const { return family_; }
  bool is_zero() const { return family_ == Family::Zero || amplitude_ == 0.0; }

  // V -> factor * V. Used by the energy reduction V/E at energy 1.
  CentralPotential scaled(double factor) const;

 private:
  CentralPotential() = default;

  Family family_ = Family::Zero;
  double R_ = 1.0;
  double amplitude_ = 1.0;  // c, or overall factor for polynomial and tabulated
  double s_ = 1.0;
  std::vector<double> coeffs_;
  std::vector<double> table_;
  std::shared_ptr<const boost::math::interpolators::cardinal_cubic_b_spline<double>> spline_;
};

struct InteractionRegion {
  double r0;
};

// Infimum r0 such that V(s) < energy for every s > r0.
InteractionRegion interaction_region(const CentralPotential& pot, double energy = 1.0);

struct NontrapEntry {
  double eta;
  std::vector<double> roots;
  double min_abs_fprime;  // over roots; +inf when there are none
  bool pass;
  std::string note;
};

struct NontrapReport {
  std::vector<NontrapEntry> entries;
  bool pass;
  double min_abs_fprime;
};

inline constexpr double kSimpleZeroTol = 1e-8;

// Roots of F(r) = 1 - eta^2/r^2 - V(r) on (r0, inf) for each eta, with the
// simple-zero check |F'| > 1e-8.
NontrapReport check_nontrapping(const CentralPotential& pot, const std::vector<double>& eta_grid);

struct AngleReport {
  bool pass;
  bool monotone;          // V' <= 0 on the sampled grid
  bool positive;          // r V'^2 + (1 - V)(V' + r V'') > 0 on the sampled grid
  double min_margin;      // min of the condition divided by its term scale, in [-1, 1]
  double min_raw;         // min of the unscaled condition
  double worst_r;         // where min_margin is attained
  std::size_t samples;
};

// Sufficient conditions for a monotone scattering angle, sampled on (r0, R).
AngleReport check_angle_condition(const CentralPotential& pot, std::size_t samples = 4000);

}  // namespace phaselab
