#include "phaselab/disk.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "phaselab/classical.hpp"
#include "phaselab/errors.hpp"
#include "phaselab/fit.hpp"
#include "phaselab/parallel.hpp"
#include "phaselab/radial.hpp"
#include "phaselab/specfun.hpp"

namespace phaselab {

namespace {

constexpr double kPi = std::numbers::pi;

double order(int d, int l) {
  if (d < 2) throw ConfigError("disk: dimension must be at least 2");
  if (l < 0) throw ConfigError("disk: l must be nonnegative");
  return l + 0.5 * (d - 2);
}

void check_kr(double k, double R) {
  if (!(k > 0.0) || !(R > 0.0)) throw ConfigError("disk: k and R must be positive");
}

}  // namespace

double disk_exact(int d, int l, double k, double R) {
  check_kr(k, R);
  return wrap_angle(2.0 * arg_hankel1(order(d, l), k * R) + kPi);
}

double disk_approx(int d, int l, double k, double R) {
  check_kr(k, R);
  const double alpha = order(d, l) / k;
  if (alpha > R) throw DomainError("disk_approx: alpha=" + std::to_string(alpha) + " exceeds R");
  return wrap_angle(k * G_ball(alpha, R) + 0.5 * kPi);
}

bool disk_in_range(int d, int l, double k, double R) {
  check_kr(k, R);
  return order(d, l) / k <= R * (1.0 - std::cbrt(1.0 / (k * R)));
}

DiskEntry disk_entry(int d, int l, double k, double R) {
  DiskEntry e;
  e.d = d;
  e.l = l;
  e.k = k;
  e.R = R;
  e.multiplicity = multiplicity(d, l);
  e.x_exact = disk_exact(d, l, k, R);
  e.in_range = disk_in_range(d, l, k, R);
  if (order(d, l) / k <= R) {
    e.x_approx = disk_approx(d, l, k, R);
    e.abs_err = std::abs(std::polar(1.0, e.x_exact) - std::polar(1.0, e.x_approx));
  } else {
    e.x_approx = std::nan("");
    e.abs_err = std::nan("");
  }
  return e;
}

std::vector<DiskEntry> disk_table(int d, double k, double R) {
  check_kr(k, R);
  const int lmax = static_cast<int>(std::floor(k * R + 1e-9));
  std::vector<DiskEntry> out(static_cast<std::size_t>(lmax) + 1);
  parallel_for(out.size(), [&](std::size_t l) { out[l] = disk_entry(d, static_cast<int>(l), k, R); });
  return out;
}

DiskSweep disk_error_sweep(int d, double R, const std::vector<double>& k_list) {
  for (std::size_t i = 1; i < k_list.size(); ++i)
    if (!(k_list[i] > k_list[i - 1])) throw ConfigError("disk_error_sweep: k list must increase");
  DiskSweep sweep{};
  std::vector<double> ks, errs;
  for (double k : k_list) {
    DiskSweepRow row{k, 0.0, 0};
    for (const DiskEntry& e : disk_table(d, k, R)) {
      if (!e.in_range) continue;
      row.sup_err = std::max(row.sup_err, e.abs_err);
      ++row.l_in_range;
    }
    sweep.rows.push_back(row);
    ks.push_back(k);
    errs.push_back(row.sup_err);
  }
  if (ks.size() >= 3) {
    const RateFit f = fit_rate(ks, errs);
    sweep.slope = f.slope;
    sweep.intercept = f.intercept;
    sweep.r2 = f.r2;
  } else {
    sweep.slope = sweep.intercept = sweep.r2 = std::nan("");
  }
  return sweep;
}

CircleEnsemble disk_ensemble(int d, double k, double R) {
  CircleEnsemble e;
  for (const DiskEntry& entry : disk_table(d, k, R)) e.add(entry.x_exact, entry.multiplicity);
  return e;
}

DiskDiscrepancySweep disk_discrepancy_sweep(int d, double R, const std::vector<double>& k_list) {
  for (std::size_t i = 1; i < k_list.size(); ++i)
    if (!(k_list[i] > k_list[i - 1])) throw ConfigError("disk_discrepancy_sweep: k list must increase");
  DiskDiscrepancySweep sweep{};
  std::vector<double> ds;
  for (double k : k_list) {
    const CircleEnsemble e = disk_ensemble(d, k, R);
    const double D = discrepancy(e).discrepancy;
    sweep.rows.push_back({k, D, e.total_weight()});
    ds.push_back(D);
  }
  if (k_list.size() >= 3) {
    const RateFit f = fit_rate(k_list, ds);
    sweep.slope = f.slope;
    sweep.r2 = f.r2;
  } else {
    sweep.slope = sweep.r2 = std::nan("");
  }
  return sweep;
}

}  // namespace phaselab
