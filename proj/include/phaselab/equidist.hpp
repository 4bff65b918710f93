#pragma once

#include <utility>
#include <vector>

#include "phaselab/classical.hpp"
#include "phaselab/radial.hpp"

namespace phaselab {

struct CirclePoint {
  double arg;  // radians in [0, 2 pi)
  long long weight;
};

// Weighted multiset of points on the unit circle. Arguments are reduced mod
// 2 pi on construction and weights must be positive.
class CircleEnsemble {
 public:
  CircleEnsemble() = default;
  explicit CircleEnsemble(const std::vector<CirclePoint>& points);
  CircleEnsemble(const std::vector<double>& args, const std::vector<long long>& weights);

  void add(double arg, long long weight);

  const std::vector<CirclePoint>& points() const { return points_; }
  long long total_weight() const { return total_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

 private:
  std::vector<CirclePoint> points_;
  long long total_ = 0;
};

struct DiscrepancyReport {
  double discrepancy = 0.0;
  double et_bound = 0.0;
  int m_used = 0;
  std::pair<double, double> witness{0.0, 0.0};  // arc endpoints in radians
  bool witness_closed = true;  // closed arc vs open complement-side limit
  std::vector<std::pair<int, double>> exp_sums;  // (j, |S_j| / N)
  long long total_weight = 0;
  std::size_t n_points = 0;
};

// sup over arcs of |N(phi0, phi1)/N - (phi1 - phi0)/(2 pi)|, exact, in
// O(n log n). m <= 0 selects m = floor(sqrt(N)) for the Erdos-Turan part.
DiscrepancyReport discrepancy(const CircleEnsemble& e, int m = 0);

// Same sup by enumerating every pair of endpoints, O(n^2). Only
// discrepancy, witness and witness_closed are filled.
DiscrepancyReport discrepancy_bruteforce(const CircleEnsemble& e);

// Weighted count of points in the closed arc from phi0 counterclockwise to
// phi1 (0 <= phi0 < phi1 <= 2 pi; phi0 > phi1 is read as an arc through 0).
long long counting(const CircleEnsemble& e, double phi0, double phi1);

// |S_j| / N for j = 1..m, S_j = sum_l w_l exp(i j x_l).
std::vector<double> exp_sums(const CircleEnsemble& e, int m);

// 6/(m+1) + (4/pi) sum_{j<=m} (1/j - 1/(m+1)) |S_j|/N.
double erdos_turan_bound(const CircleEnsemble& e, int m);

struct ExpSumInstance {
  long long a = 0, b = 0;
  std::vector<double> f;  // f(l) for l = a..b
  double fprime_a = 0.0, fprime_b = 0.0;
  double rho = 0.0;       // lower bound of |f''| on [a, b]
};

struct ExpSumReport {
  double sum_abs;
  double bound;
  bool pass;
};

// |sum_{l=a}^{b} exp(2 pi i f(l))| against (|f'(b) - f'(a)| + 2)(4/sqrt(rho) + 3).
ExpSumReport exp_sum_bound_check(const ExpSumInstance& inst);

// f(x) = j G(x h)/(2 pi h) on [a, b] with rho = h j min|Sigma'|/(2 pi), the
// minimum taken over secant slopes of the profile grid inside [a h, b h].
ExpSumInstance exp_sum_instance_from_profile(const ScatteringProfile& profile, double h, int j,
                                             long long a, long long b);

struct Superposition {
  CircleEnsemble ensemble;
  double discrepancy;
  double bound;  // sum_i (|w_i| / |w|) D(w_i)
  bool holds;
};

Superposition superpose(const std::vector<CircleEnsemble>& parts);

struct WkbEnsembleOptions {
  double shift = 0.0;            // argument G((l + shift) h)/h; (d - 2)/2 gives the eigenvalue form
  std::vector<double> exclude;   // drop l with dist(l h, exclude) < epsilon
  double epsilon = 0.0;
};

// Points G((l + shift) h)/h mod 2 pi for 0 <= l h < R with weights p_d(l).
CircleEnsemble build_wkb_ensemble(const ScatteringProfile& profile, int d, double h,
                                  const WkbEnsembleOptions& opt = {});

// Exact eigenvalue arguments with l h <= R (or every entry when all_l).
CircleEnsemble ensemble_from_table(const PhaseShiftTable& table, bool use_wkb = false,
                                   bool all_l = false);

// 2 (R/h)^(d-1)/(d-1)!, the leading count of eigenvalues with l h <= R.
double leading_count(int d, double R, double h);

}  // namespace phaselab
