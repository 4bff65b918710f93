#pragma once

#include <vector>

#include "phaselab/equidist.hpp"

namespace phaselab {

struct DiskEntry {
  int d = 2;
  int l = 0;
  double k = 0.0;
  double R = 1.0;
  double x_exact = 0.0;   // 2 arg H1_nu(kR) + pi, in [0, 2 pi)
  double x_approx = 0.0;  // k G_b(nu/k) + pi/2, in [0, 2 pi)
  long long multiplicity = 1;
  bool in_range = false;  // nu/k <= R (1 - (kR)^(-1/3))
  double abs_err = 0.0;   // |e^{i x_exact} - e^{i x_approx}|
};

// Eigen-argument of -H1_nu(kR)/H2_nu(kR), nu = l + (d - 2)/2.
double disk_exact(int d, int l, double k, double R);

// Throws DomainError when nu/k > R.
double disk_approx(int d, int l, double k, double R);

bool disk_in_range(int d, int l, double k, double R);

DiskEntry disk_entry(int d, int l, double k, double R);

// Entries for 0 <= l <= floor(kR).
std::vector<DiskEntry> disk_table(int d, double k, double R);

struct DiskSweepRow {
  double k;
  double sup_err;  // over in-range l
  int l_in_range;
};

struct DiskSweep {
  std::vector<DiskSweepRow> rows;
  double slope;
  double intercept;
  double r2;
};

DiskSweep disk_error_sweep(int d, double R, const std::vector<double>& k_list);

// Exact eigen-arguments x_{l,k} for l <= kR with weights p_d(l).
CircleEnsemble disk_ensemble(int d, double k, double R);

struct DiskDiscrepancyRow {
  double k;
  double discrepancy;
  long long count;
};

struct DiskDiscrepancySweep {
  std::vector<DiskDiscrepancyRow> rows;
  double slope;
  double r2;
};

DiskDiscrepancySweep disk_discrepancy_sweep(int d, double R, const std::vector<double>& k_list);

}  // namespace phaselab
