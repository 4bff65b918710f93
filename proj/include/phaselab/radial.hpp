#pragma once

#include <complex>
#include <string>
#include <vector>

#include "phaselab/classical.hpp"
#include "phaselab/potential.hpp"

namespace phaselab {

// Dimension of degree-l spherical harmonics on S^{d-1}.
long long multiplicity(int d, int l);

struct RadialOptions {
  double rtol = 1e-12;
  double atol = 1e-14;
  std::size_t max_steps = 2000000;
};

struct RadialSolution {
  double f, fp;  // up to a common positive scale
  double r_seed;
  std::size_t steps;
};

// Regular solution of f'' + f'/r - nu^2/r^2 f - (V - 1)/h^2 f = 0,
// nu = l + (d - 2)/2, integrated from a Frobenius seed to r_match.
RadialSolution solve_radial(const CentralPotential& pot, int d, int l, double h, double r_match,
                            const RadialOptions& opt = {});

enum EntryFlag : unsigned {
  kFlagBadSet = 1u << 0,            // odd d: alpha within epsilon of {Sigma in pi Z}
  kFlagSmallAlpha = 1u << 1,        // alpha < epsilon
  kFlagLargeL = 1u << 2,            // l h >= R + h^kappa
  kFlagForbiddenFallback = 1u << 3, // radial solve failed deep in the forbidden region
  kFlagError = 1u << 4,             // any other per-entry failure
};

std::string flags_to_string(unsigned flags);

struct PhaseShiftEntry {
  int d = 2;
  int l = 0;
  double h = 0.0;
  double nu = 0.0;
  std::complex<double> eigenvalue{1.0, 0.0};
  double beta = 0.0;  // arg of eigenvalue in [0, 2 pi)
  long long multiplicity = 1;
  std::complex<double> wkb{1.0, 0.0};
  double beta_wkb = 0.0;
  double err = 0.0;  // |eigenvalue - wkb|
  unsigned flags = 0;
  std::string message;
};

// Eigenvalue conj(A)/A of the scattering matrix on degree-l harmonics, where
// f = A H1(r/h) + B H2(r/h) at r_match (default 2R).
std::complex<double> exact_eigenvalue(const CentralPotential& pot, int d, int l, double h,
                                      double r_match = 0.0, const RadialOptions& opt = {});

std::complex<double> wkb_eigenvalue(const ScatteringProfile& profile, int d, int l, double h);

struct TableOptions {
  double epsilon = 0.05;
  double kappa = 0.5;
  double r_match = 0.0;  // 0 selects 2R
  RadialOptions radial;
};

struct PhaseShiftTable {
  int d = 2;
  double h = 0.0;
  double R = 1.0;
  std::string potential_id;
  std::vector<PhaseShiftEntry> entries;  // sorted by l
};

// Points alpha in (0, R) where Sigma(alpha) is a multiple of pi, plus R itself
// (Sigma = 0 on [R, inf)).
std::vector<double> bad_alpha_set(const CentralPotential& pot, const ScatteringProfile& profile);

PhaseShiftTable build_table(const CentralPotential& pot, const ScatteringProfile& profile, int d,
                            double h, int l_max, const TableOptions& opt = {});

// max |exact - wkb| over l h <= R - margin, skipping entries flagged
// bad_set, small_alpha or error.
double max_interior_error(const PhaseShiftTable& table, double margin);

// Arguments reduced to [0, 2 pi).
double wrap_angle(double x);

}  // namespace phaselab
