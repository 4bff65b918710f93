#include "phaselab/potential.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "phaselab/errors.hpp"

namespace phaselab {

using nlohmann::json;

namespace {

std::string fmt_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void require_radius(double R) {
  if (!(R > 0.0) || !std::isfinite(R)) throw ConfigError("potential: R must be positive");
}

void require_steepness(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw ConfigError("potential: s must be positive");
}

// Root of f on [a, b] where f(a) and f(b) have opposite signs (or one is 0).
template <class F>
double bracketed_root(F f, double a, double b, double fa, double fb, double tol) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  std::uintmax_t iters = 200;
  auto stop = [tol](double lo, double hi) { return std::abs(hi - lo) <= tol; };
  auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, stop, iters);
  return 0.5 * (r.first + r.second);
}

}  // namespace

CentralPotential CentralPotential::zero(double R) {
  require_radius(R);
  CentralPotential p;
  p.family_ = Family::Zero;
  p.R_ = R;
  p.amplitude_ = 0.0;
  return p;
}

CentralPotential CentralPotential::bump(double c, double R, double s) {
  require_radius(R);
  require_steepness(s);
  if (!std::isfinite(c)) throw ConfigError("potential: c must be finite");
  CentralPotential p;
  p.family_ = Family::Bump;
  p.R_ = R;
  p.amplitude_ = c;
  p.s_ = s;
  return p;
}

CentralPotential CentralPotential::scaled_bump(double c, double R, double s) {
  CentralPotential p = bump(c, R, s);
  p.family_ = Family::ScaledBump;
  return p;
}

CentralPotential CentralPotential::polynomial_times_bump(std::vector<double> coeffs, double R,
                                                         double s) {
  require_radius(R);
  require_steepness(s);
  if (coeffs.empty()) throw ConfigError("potential: coeffs must be nonempty");
  for (double a : coeffs)
    if (!std::isfinite(a)) throw ConfigError("potential: coeffs must be finite");
  CentralPotential p;
  p.family_ = Family::PolynomialTimesBump;
  p.R_ = R;
  p.s_ = s;
  p.coeffs_ = std::move(coeffs);
  return p;
}

CentralPotential CentralPotential::tabulated(std::vector<double> values, double R) {
  require_radius(R);
  if (values.size() < 4) throw ConfigError("potential: tabulated needs at least 4 values");
  for (double v : values)
    if (!std::isfinite(v)) throw ConfigError("potential: tabulated values must be finite");
  if (values.back() != 0.0) throw ConfigError("potential: tabulated value at r = R must be 0");
  CentralPotential p;
  p.family_ = Family::Tabulated;
  p.R_ = R;
  p.table_ = std::move(values);
  const double step = R / static_cast<double>(p.table_.size() - 1);
  // Zero slope at the origin (smooth radial function) and at R (joins V = 0).
  p.spline_ = std::make_shared<boost::math::interpolators::cardinal_cubic_b_spline<double>>(
      p.table_.begin(), p.table_.end(), 0.0, step, 0.0, 0.0);
  return p;
}

CentralPotential CentralPotential::from_json(const json& j) {
  try {
    if (!j.is_object()) throw ConfigError("potential: expected a JSON object");
    const std::string fam = j.at("family").get<std::string>();
    const double R = j.value("R", 1.0);
    const double s = j.value("s", 1.0);
    if (fam == "zero") return zero(R);
    if (fam == "bump") return bump(j.at("c").get<double>(), R, s);
    if (fam == "scaled-bump") return scaled_bump(j.at("c").get<double>(), R, s);
    if (fam == "polynomial-times-bump")
      return polynomial_times_bump(j.at("coeffs").get<std::vector<double>>(), R, s);
    if (fam == "tabulated") return tabulated(j.at("values").get<std::vector<double>>(), R);
    throw ConfigError("potential: unknown family '" + fam + "'");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("potential: ") + e.what());
  }
}

CentralPotential CentralPotential::from_spec(const std::string& path_or_json) {
  std::string text = path_or_json;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ConfigError("potential: empty specification");
  if (text[first] != '{') {
    std::ifstream in(path_or_json);
    if (!in) throw ConfigError("potential: cannot read '" + path_or_json + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("potential: invalid JSON: ") + e.what());
  }
  return from_json(j);
}

json CentralPotential::to_json() const {
  json j;
  switch (family_) {
    case Family::Zero:
      j["family"] = "zero";
      break;
    case Family::Bump:
    case Family::ScaledBump:
      j["family"] = family_ == Family::Bump ? "bump" : "scaled-bump";
      j["c"] = amplitude_;
      j["s"] = s_;
      break;
    case Family::PolynomialTimesBump:
      j["family"] = "polynomial-times-bump";
      j["coeffs"] = coeffs_;
      j["s"] = s_;
      break;
    case Family::Tabulated:
      j["family"] = "tabulated";
      j["values"] = table_;
      break;
  }
  j["R"] = R_;
  return j;
}

std::string CentralPotential::id() const {
  switch (family_) {
    case Family::Zero:
      return "zero_R" + fmt_num(R_);
    case Family::Bump:
      return "bump_c" + fmt_num(amplitude_) + "_s" + fmt_num(s_) + "_R" + fmt_num(R_);
    case Family::ScaledBump:
      return "scaled-bump_c" + fmt_num(amplitude_) + "_s" + fmt_num(s_) + "_R" + fmt_num(R_);
    case Family::PolynomialTimesBump: {
      std::string out = "polybump";
      for (double a : coeffs_) out += "_" + fmt_num(a);
      return out + "_s" + fmt_num(s_) + "_R" + fmt_num(R_);
    }
    case Family::Tabulated:
      return "tabulated_n" + std::to_string(table_.size()) + "_R" + fmt_num(R_);
  }
  return "unknown";
}

CentralPotential CentralPotential::scaled(double factor) const {
  if (!std::isfinite(factor)) throw ConfigError("potential: scale factor must be finite");
  switch (family_) {
    case Family::Zero:
      return *this;
    case Family::Bump:
    case Family::ScaledBump: {
      CentralPotential p = *this;
      p.amplitude_ *= factor;
      return p;
    }
    case Family::PolynomialTimesBump: {
      std::vector<double> c = coeffs_;
      for (double& a : c) a *= factor;
      return polynomial_times_bump(std::move(c), R_, s_);
    }
    case Family::Tabulated: {
      std::vector<double> t = table_;
      for (double& v : t) v *= factor;
      return tabulated(std::move(t), R_);
    }
  }
  return *this;
}

PotentialValue CentralPotential::evaluate(double r) const {
  r = std::abs(r);
  if (family_ == Family::Zero || r >= R_) return {0.0, 0.0, 0.0};
  if (family_ == Family::Tabulated) {
    return {(*spline_)(r), spline_->prime(r), spline_->double_prime(r)};
  }

  // E = exp(g), g = S / (r^2 - R^2).
  const double S = family_ == Family::Bump ? s_ : s_ * R_ * R_;
  const double u = r * r - R_ * R_;
  const double g = S / u;
  if (g < -740.0) return {0.0, 0.0, 0.0};
  const double e = std::exp(g);
  const double g1 = -2.0 * r * S / (u * u);
  const double g2 = -2.0 * S / (u * u) + 8.0 * r * r * S / (u * u * u);
  const double e1 = g1 * e;
  const double e2 = (g2 + g1 * g1) * e;

  if (family_ != Family::PolynomialTimesBump)
    return {amplitude_ * e, amplitude_ * e1, amplitude_ * e2};

  double p = 0.0, p1 = 0.0, p2 = 0.0;
  const double R2 = R_ * R_;
  double rho2k = 1.0;  // (r/R)^(2k)
  double scale = 1.0;  // R^(-2k)
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double a = coeffs_[k];
    p += a * rho2k;
    if (k >= 1) {
      const double kk = static_cast<double>(k);
      p1 += a * 2.0 * kk * std::pow(r, 2.0 * kk - 1.0) * scale;
      p2 += a * 2.0 * kk * (2.0 * kk - 1.0) * std::pow(r, 2.0 * kk - 2.0) * scale;
    }
    rho2k *= r * r / R2;
    scale /= R2;
  }
  return {p * e, p1 * e + p * e1, p2 * e + 2.0 * p1 * e1 + p * e2};
}

InteractionRegion interaction_region(const CentralPotential& pot, double energy) {
  if (!(energy > 0.0)) throw ConfigError("interaction_region: energy must be positive");
  if (pot.is_zero()) return {0.0};
  const double R = pot.R();
  constexpr int n = 4096;
  double prev_r = R, prev_f = -energy;  // V(R) - E
  for (int i = n - 1; i >= 0; --i) {
    const double r = R * i / n;
    const double f = pot(r) - energy;
    if (f >= 0.0) {
      auto fn = [&](double x) { return pot(x) - energy; };
      return {bracketed_root(fn, r, prev_r, f, prev_f, 1e-13 * R)};
    }
    prev_r = r;
    prev_f = f;
  }
  return {0.0};
}

NontrapReport check_nontrapping(const CentralPotential& pot, const std::vector<double>& eta_grid) {
  NontrapReport rep{{}, true, std::numeric_limits<double>::infinity()};
  const double R = pot.R();
  const double r0 = interaction_region(pot).r0;
  constexpr int n = 4096;

  for (double eta : eta_grid) {
    NontrapEntry e{eta, {}, std::numeric_limits<double>::infinity(), true, ""};
    auto F = [&](double r) { return 1.0 - eta * eta / (r * r) - pot(r); };
    auto Fp = [&](double r) { return 2.0 * eta * eta / (r * r * r) - pot.evaluate(r).vp; };

    if (eta == 0.0) {
      e.note = "head-on";
      if (r0 > 0.0) {
        e.roots.push_back(r0);
        e.min_abs_fprime = std::abs(pot.evaluate(r0).vp);
      }
    } else {
      const double lo = std::max(r0, 1e-6 * R);
      const double hi = 1.05 * std::max(R, std::abs(eta));
      std::vector<double> rs(n + 1), fs(n + 1);
      for (int i = 0; i <= n; ++i) {
        rs[i] = lo + (hi - lo) * i / n;
        fs[i] = F(rs[i]);
      }
      for (int i = 0; i < n; ++i) {
        if ((fs[i] < 0.0) != (fs[i + 1] < 0.0) || fs[i] == 0.0) {
          try {
            const double root = bracketed_root(F, rs[i], rs[i + 1], fs[i], fs[i + 1], 1e-14 * hi);
            e.roots.push_back(root);
            e.min_abs_fprime = std::min(e.min_abs_fprime, std::abs(Fp(root)));
          } catch (const std::exception& ex) {
            e.note = std::string("bracketing failed: ") + ex.what();
            e.pass = false;
          }
        }
        // A grazing extremum of F near zero is a double root that has no sign change.
        if (i > 0 && (fs[i] - fs[i - 1]) * (fs[i + 1] - fs[i]) < 0.0 && std::abs(fs[i]) < 1e-6) {
          e.note = "near-tangency at r=" + fmt_num(rs[i]);
          e.min_abs_fprime = 0.0;
        }
      }
      if (e.roots.empty() && e.note.empty()) {
        e.note = "no turning point found";
        e.pass = false;
      }
    }
    if (e.min_abs_fprime <= kSimpleZeroTol) e.pass = false;
    rep.pass = rep.pass && e.pass;
    rep.min_abs_fprime = std::min(rep.min_abs_fprime, e.min_abs_fprime);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

AngleReport check_angle_condition(const CentralPotential& pot, std::size_t samples) {
  AngleReport rep{true, true, true, 1.0, std::numeric_limits<double>::infinity(), 0.0, 0};
  if (pot.is_zero()) return rep;
  const double R = pot.R();
  const double r0 = interaction_region(pot).r0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = r0 + (R - r0) * (static_cast<double>(i) + 0.5) / static_cast<double>(samples);
    const PotentialValue p = pot.evaluate(r);
    if (p.vp > 0.0) rep.monotone = false;
    const double k = r * p.vp * p.vp + (1.0 - p.v) * (p.vp + r * p.vpp);
    const double scale =
        r * p.vp * p.vp + std::abs(1.0 - p.v) * (std::abs(p.vp) + r * std::abs(p.vpp));
    if (scale < 1e-250) continue;  // V has underflowed to 0 here; the condition is vacuous
    ++rep.samples;
    rep.min_raw = std::min(rep.min_raw, k);
    if (k / scale < rep.min_margin) {
      rep.min_margin = k / scale;
      rep.worst_r = r;
    }
  }
  rep.positive = rep.min_margin > 0.0;
  rep.pass = rep.monotone && rep.positive;
  return rep;
}

}  // namespace phaselab
