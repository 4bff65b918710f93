#pragma once

#include <complex>

namespace phaselab {

using cplx = std::complex<double>;

inline constexpr double kMaxOrder = 2000.0;
inline constexpr double kMaxArgument = 2000.0;

struct BesselJY {
  double j, y, jp, yp;
};

// H1 = J + iY at real order >= 0 and real argument > 0. H2 is conj(h1) and is
// never stored.
struct HankelPair {
  double order;
  double argument;
  cplx h1;
  cplx h1_deriv;
};

// Continued-fraction evaluation (Steed's method with Temme's series below
// x = 2). Throws OverflowError when Y is not representable.
BesselJY bessel_jy(double nu, double x);

HankelPair hankel1_steed(double nu, double z);

// Real-axis integral representation (Schlaefli), evaluated by quadrature.
// Independent of bessel_jy; used for cross-validation.
HankelPair hankel1_integral(double nu, double z);

// Default evaluator.
HankelPair hankel1(double nu, double z);

// Principal argument of H1 in (-pi, pi].
double arg_hankel1(double nu, double z);

// Im(conj(h1) * h1') scaled by pi*z/2; equals 1 for an exact pair.
double wronskian_ratio(const HankelPair& p);

}  // namespace phaselab
