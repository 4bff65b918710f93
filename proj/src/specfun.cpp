#include "phaselab/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "phaselab/errors.hpp"

namespace phaselab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-16;
constexpr double kCfTol = 4.5e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 1000000;

void check_domain(double nu, double z) {
  if (!(nu >= 0.0) || nu > kMaxOrder)
    throw DomainError("hankel: order " + std::to_string(nu) + " outside [0, 2000]");
  if (!(z > 0.0) || z > kMaxArgument)
    throw DomainError("hankel: argument " + std::to_string(z) + " outside (0, 2000]");
}

// Taylor coefficients of 1/Gamma(1+x) about x = 0 (Abramowitz & Stegun 6.1.34,
// shifted by one index).
constexpr std::array<double, 26> kRecipGamma = {
    1.0,
    0.5772156649015329,
    -0.6558780715202538,
    -0.0420026350340952,
    0.1665386113822915,
    -0.0421977345555443,
    -0.0096219715278770,
    0.0072189432466630,
    -0.0011651675918591,
    -0.0002152416741149,
    0.0001280502823882,
    -0.0000201348547807,
    -0.0000012504934821,
    0.0000011330272320,
    -0.0000002056338417,
    0.0000000061160950,
    0.0000000050020075,
    -0.0000000011812746,
    0.0000000001043427,
    0.0000000000077823,
    -0.0000000000036968,
    0.0000000000005100,
    -0.0000000000000206,
    -0.0000000000000054,
    0.0000000000000014,
    0.0000000000000001,
};

struct TemmeGammas {
  double gam1, gam2, gampl, gammi;
};

// gam1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu), gam2 = (1/G(1-mu) + 1/G(1+mu)) / 2
// for |mu| <= 1/2, summed from the even/odd parts of the series.
TemmeGammas temme_gammas(double mu) {
  const double mu2 = mu * mu;
  double even = 0.0, odd = 0.0;
  for (int k = static_cast<int>(kRecipGamma.size()) - 1; k >= 0; --k) {
    if (k % 2 == 0)
      even = even * mu2 + kRecipGamma[k];
    else
      odd = odd * mu2 + kRecipGamma[k];
  }
  TemmeGammas g{};
  g.gam1 = -odd;
  g.gam2 = even;
  g.gampl = even + mu * odd;  // 1/Gamma(1+mu)
  g.gammi = even - mu * odd;  // 1/Gamma(1-mu)
  return g;
}

}  // namespace

BesselJY bessel_jy(double nu, double x) {
  check_domain(nu, x);
  const int nl = x < 2.0 ? static_cast<int>(nu + 0.5)
                         : std::max(0, static_cast<int>(nu - x + 1.5));
  const double xmu = nu - nl;
  const double xmu2 = xmu * xmu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  // CF1: J'_nu / J_nu, with the sign of J_nu tracked through isign.
  int isign = 1;
  double h = nu * xi;
  if (h < kTiny) h = kTiny;
  double b = xi2 * nu, d = 0.0, c = h;
  int it = 0;
  for (; it < kMaxIter; ++it) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b - 1.0 / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < kCfTol) break;
  }
  if (it == kMaxIter) throw NumericalError("bessel_jy: CF1 did not converge");

  // Downward recurrence from nu to mu. The recurrence is homogeneous, so the
  // values are rescaled whenever they grow large and the scale is remembered.
  double rjl = isign;
  double rjpl = h * rjl;
  const double rjl1 = rjl, rjp1 = rjpl;
  double log_scale = 0.0;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
    if (std::abs(rjl) > 1e250) {
      rjl *= 1e-250;
      rjpl *= 1e-250;
      log_scale += 250.0 * std::log(10.0);
    }
  }
  if (rjl == 0.0) rjl = kEps;
  const double f = rjpl / rjl;

  double rjmu, rymu, rymup, ry1;
  if (x < 2.0) {
    // Temme's series for Y_mu, Y_mu+1.
    const double x2 = 0.5 * x;
    const double pimu = kPi * xmu;
    const double fct = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    d = -std::log(x2);
    double e = xmu * d;
    const double fct2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(xmu);
    double ff = 2.0 / kPi * fct * (g.gam1 * std::cosh(e) + g.gam2 * fct2 * d);
    e = std::exp(e);
    double p = e / (g.gampl * kPi);
    double q = 1.0 / (e * kPi * g.gammi);
    const double pimu2 = 0.5 * pimu;
    const double fct3 = std::abs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2;
    const double r = kPi * pimu2 * fct3 * fct3;
    c = 1.0;
    d = -x2 * x2;
    double sum = ff + r * q;
    double sum1 = p;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
      ff = (i * ff + p + q) / (i * static_cast<double>(i) - xmu2);
      c *= d / i;
      p /= i - xmu;
      q /= i + xmu;
      const double del = c * (ff + r * q);
      sum += del;
      const double del1 = c * p - i * del;
      sum1 += del1;
      if (std::abs(del) < (1.0 + std::abs(sum)) * kEps) break;
    }
    if (i > kMaxIter) throw NumericalError("bessel_jy: Temme series did not converge");
    rymu = -sum;
    ry1 = -sum1 * xi2;
    rymup = xmu * xi * rymu - ry1;
    rjmu = w / (rymup - f * rymu);
  } else {
    // CF2 (Steed): p + iq = (J' + iY') / (J + iY) at order mu.
    double a = 0.25 - xmu2;
    double p = -0.5 * xi;
    double q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    double fct = a * xi / (p * p + q * q);
    double cr = br + q * fct;
    double ci = bi + p * fct;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    int i = 2;
    for (; i < kMaxIter; ++i) {
      a += 2 * (i - 1);
      bi += 2.0;
      dr = a * dr + br;
      di = a * di + bi;
      if (std::abs(dr) + std::abs(di) < kTiny) dr = kTiny;
      fct = a / (cr * cr + ci * ci);
      cr = br + cr * fct;
      ci = bi - ci * fct;
      if (std::abs(cr) + std::abs(ci) < kTiny) cr = kTiny;
      den = dr * dr + di * di;
      dr /= den;
      di /= -den;
      dlr = cr * dr - ci * di;
      dli = cr * di + ci * dr;
      temp = p * dlr - q * dli;
      q = p * dli + q * dlr;
      p = temp;
      if (std::abs(dlr - 1.0) + std::abs(dli) <= kCfTol) break;
    }
    if (i == kMaxIter) throw NumericalError("bessel_jy: CF2 did not converge");
    const double gam = (p - f) / q;
    rjmu = std::sqrt(w / ((p - f) * gam + q));
    rjmu = std::copysign(rjmu, rjl);
    rymu = rjmu * gam;
    rymup = rymu * (p + q / gam);
    ry1 = xmu * xi * rymu - rymup;
  }

  const double scale = rjmu / rjl * std::exp(-log_scale);
  BesselJY out{};
  out.j = rjl1 * scale;
  out.jp = rjp1 * scale;
  for (int i = 1; i <= nl; ++i) {
    const double rytemp = (xmu + i) * xi2 * ry1 - rymu;
    rymu = ry1;
    ry1 = rytemp;
  }
  out.y = rymu;
  out.yp = nu * xi * rymu - ry1;
  if (!std::isfinite(out.y) || !std::isfinite(out.yp))
    throw OverflowError("bessel_jy: Y_nu(x) overflows at nu=" + std::to_string(nu) +
                        ", x=" + std::to_string(x));
  return out;
}

HankelPair hankel1_steed(double nu, double z) {
  const BesselJY b = bessel_jy(nu, z);
  return {nu, z, {b.j, b.y}, {b.jp, b.yp}};
}

namespace {

template <class F>
cplx gauss20(F f, double a, double b) {
  using GL = boost::math::quadrature::gauss<double, 20>;
  const auto& xs = GL::abscissa();
  const auto& ws = GL::weights();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  cplx s{};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s += ws[i] * f(mid + half * xs[i]);
    if (xs[i] != 0.0) s += ws[i] * f(mid - half * xs[i]);
  }
  return s * half;
}

struct ScaledIntegral {
  double value;  // integral of exp(phi - log_scale)
  double deriv;  // integral of -sinh(s) exp(phi - log_scale)
  double log_scale;
};

// Integrals of exp(phi(s)) and -sinh(s) exp(phi(s)) over [0, inf) with
// phi(s) = sgn*nu*s - z*sinh(s). The peak sits at cosh(s*) = nu/z when sgn > 0.
ScaledIntegral laplace_part(double nu, double z, int sgn) {
  auto phi = [&](double s) { return sgn * nu * s - z * std::sinh(s); };
  double s_peak = 0.0;
  if (sgn > 0 && nu > z) s_peak = std::acosh(nu / z);
  const double phimax = phi(s_peak);
  if (phimax > 700.0) throw OverflowError("hankel1_integral: integrand overflows");
  constexpr double kDrop = 50.0;

  double s_hi = s_peak + 1.0;
  while (phi(s_hi) - phimax > -kDrop) s_hi = s_peak + 2.0 * (s_hi - s_peak);
  double s_lo = 0.0;
  if (s_peak > 0.0 && phi(0.0) - phimax < -kDrop) {
    double lo = 0.0, hi = s_peak;
    for (int i = 0; i < 200 && hi - lo > 1e-14 * s_peak; ++i) {
      const double m = 0.5 * (lo + hi);
      (phi(m) - phimax < -kDrop ? lo : hi) = m;
    }
    s_lo = lo;
  }

  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  auto g0 = [&](double s) { return std::exp(phi(s) - phimax); };
  auto g1 = [&](double s) { return -std::sinh(s) * std::exp(phi(s) - phimax); };
  constexpr double kTol = 1e-13;
  double v = 0.0, dv = 0.0;
  if (s_peak > s_lo) {
    v += GK::integrate(g0, s_lo, s_peak, 12, kTol);
    dv += GK::integrate(g1, s_lo, s_peak, 12, kTol);
  }
  v += GK::integrate(g0, s_peak, s_hi, 12, kTol);
  dv += GK::integrate(g1, s_peak, s_hi, 12, kTol);
  return {v, dv, phimax};
}

}  // namespace

HankelPair hankel1_integral(double nu, double z) {
  check_domain(nu, z);
  const int panels = static_cast<int>(std::ceil((z + nu) / 3.0)) + 4;
  const double width = kPi / panels;
  cplx p{}, pd{};
  for (int k = 0; k < panels; ++k) {
    const double a = k * width;
    p += gauss20([&](double t) { return std::polar(1.0, z * std::sin(t) - nu * t); },
                 a, a + width);
    pd += gauss20(
        [&](double t) {
          return cplx(0.0, std::sin(t)) * std::polar(1.0, z * std::sin(t) - nu * t);
        },
        a, a + width);
  }
  p /= kPi;
  pd /= kPi;

  const ScaledIntegral i1 = laplace_part(nu, z, +1);
  const ScaledIntegral i3 = laplace_part(nu, z, -1);
  const double m = std::fmod(nu, 2.0);
  const cplx rot(std::cos(kPi * m), -std::sin(kPi * m));  // exp(-i nu pi)
  const double s1 = std::exp(i1.log_scale) / kPi;
  const double s3 = std::exp(i3.log_scale) / kPi;
  const cplx mi(0.0, -1.0);

  HankelPair out{nu, z, {}, {}};
  out.h1 = p + mi * (s1 * i1.value + rot * (s3 * i3.value));
  out.h1_deriv = pd + mi * (s1 * i1.deriv + rot * (s3 * i3.deriv));
  if (!std::isfinite(std::abs(out.h1)) || !std::isfinite(std::abs(out.h1_deriv)))
    throw OverflowError("hankel1_integral: value not representable");
  return out;
}

HankelPair hankel1(double nu, double z) { return hankel1_steed(nu, z); }

double arg_hankel1(double nu, double z) {
  const HankelPair p = hankel1(nu, z);
  if (p.h1 == cplx(0.0, 0.0)) throw NumericalError("arg_hankel1: |H1| underflows to 0");
  return std::arg(p.h1);
}

double wronskian_ratio(const HankelPair& p) {
  return std::imag(std::conj(p.h1) * p.h1_deriv) * kPi * p.argument / 2.0;
}

}  // namespace phaselab
