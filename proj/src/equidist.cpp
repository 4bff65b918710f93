#include "phaselab/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "phaselab/errors.hpp"

namespace phaselab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Distinct positions u = arg/(2 pi) in [0, 1), increasing, with cumulative
// weights c[k] = total weight of positions 0..k-1 (c has size n + 1).
struct Sorted {
  std::vector<double> u;
  std::vector<long long> c;
  long long total;
};

Sorted sort_ensemble(const CircleEnsemble& e) {
  if (e.empty()) throw ConfigError("discrepancy: empty ensemble");
  std::vector<std::pair<double, long long>> pts;
  pts.reserve(e.size());
  for (const auto& p : e.points()) {
    double u = p.arg / kTwoPi;
    if (u >= 1.0) u = 0.0;
    pts.emplace_back(u, p.weight);
  }
  std::sort(pts.begin(), pts.end());
  Sorted s;
  s.c.push_back(0);
  for (const auto& [u, w] : pts) {
    if (!s.u.empty() && s.u.back() == u) {
      s.c.back() += w;
    } else {
      s.u.push_back(u);
      s.c.push_back(s.c.back() + w);
    }
  }
  s.total = s.c.back();
  return s;
}

// Every arc through 0 is the complement of an interval inside [0, 1), and the
// complement turns an excess into a deficit of the same size. So it suffices
// to take closed intervals [u_i, u_j] (excess) and open intervals between
// consecutive-or-not members of {0, u_1..u_n, 1} (deficit). Both candidates
// are always evaluated with the same expressions, so the fast scan and the
// pairwise scan return bit-identical values at equal witnesses.
double closed_excess(const Sorted& s, std::size_t i, std::size_t j) {
  return static_cast<double>(s.c[j + 1] - s.c[i]) / static_cast<double>(s.total) - (s.u[j] - s.u[i]);
}

// Open-interval endpoints: index 0 is the sentinel 0 (only when no point sits
// at 0), 1..n are the points, n + 1 is the sentinel 1.
struct OpenEnds {
  std::vector<double> q;
  std::vector<long long> below;  // weight strictly left of q, plus the point at q
};

OpenEnds open_ends(const Sorted& s) {
  OpenEnds o;
  if (s.u.front() > 0.0) {
    o.q.push_back(0.0);
    o.below.push_back(0);
  }
  for (std::size_t k = 0; k < s.u.size(); ++k) {
    o.q.push_back(s.u[k]);
    o.below.push_back(s.c[k + 1]);
  }
  o.q.push_back(1.0);
  o.below.push_back(s.total);
  return o;
}

// Weight strictly inside (q_i, q_j) is below[j] - weight(q_j) - below[i]; for the
// right sentinel weight(q_j) = 0 and below = total.
long long open_weight(const OpenEnds& o, std::size_t i, std::size_t j) {
  const long long upto_j = j + 1 == o.q.size() ? o.below[j] : o.below[j - 1];
  return upto_j - o.below[i];
}

double open_deficit(const Sorted& s, const OpenEnds& o, std::size_t i, std::size_t j) {
  return (o.q[j] - o.q[i]) - static_cast<double>(open_weight(o, i, j)) / static_cast<double>(s.total);
}

struct Best {
  double value = -INFINITY;
  double a = 0.0, b = 0.0;
  bool closed = true;

  void offer(double v, double lo, double hi, bool is_closed) {
    if (v > value) {
      value = v;
      a = lo;
      b = hi;
      closed = is_closed;
    }
  }

  void write(DiscrepancyReport& r, const Sorted& s, std::size_t n) const {
    r.discrepancy = std::clamp(value, 0.0, 1.0);
    r.witness = {a * kTwoPi, b * kTwoPi};
    r.witness_closed = closed;
    r.total_weight = s.total;
    r.n_points = n;
  }
};

}  // namespace

CircleEnsemble::CircleEnsemble(const std::vector<CirclePoint>& points) {
  for (const auto& p : points) add(p.arg, p.weight);
}

CircleEnsemble::CircleEnsemble(const std::vector<double>& args, const std::vector<long long>& weights) {
  if (args.size() != weights.size()) throw ConfigError("CircleEnsemble: args and weights differ in length");
  for (std::size_t i = 0; i < args.size(); ++i) add(args[i], weights[i]);
}

void CircleEnsemble::add(double arg, long long weight) {
  if (!std::isfinite(arg)) throw ConfigError("CircleEnsemble: argument must be finite");
  if (weight <= 0) throw ConfigError("CircleEnsemble: weights must be positive");
  points_.push_back({wrap_angle(arg), weight});
  total_ += weight;
}

DiscrepancyReport discrepancy_bruteforce(const CircleEnsemble& e) {
  const Sorted s = sort_ensemble(e);
  const OpenEnds o = open_ends(s);
  Best best;
  for (std::size_t i = 0; i < s.u.size(); ++i)
    for (std::size_t j = i; j < s.u.size(); ++j) best.offer(closed_excess(s, i, j), s.u[i], s.u[j], true);
  for (std::size_t i = 0; i < o.q.size(); ++i)
    for (std::size_t j = i + 1; j < o.q.size(); ++j)
      best.offer(open_deficit(s, o, i, j), o.q[i], o.q[j], false);
  DiscrepancyReport r;
  best.write(r, s, e.size());
  return r;
}

DiscrepancyReport discrepancy(const CircleEnsemble& e, int m) {
  const Sorted s = sort_ensemble(e);
  const OpenEnds o = open_ends(s);
  const double K = static_cast<double>(s.total);
  Best top;

  // For fixed j the best closed start maximizes u_i - c_i/K; the best open
  // start minimizes q_i - below_i/K.
  std::size_t best = 0;
  for (std::size_t j = 0; j < s.u.size(); ++j) {
    if (s.u[j] - s.c[j] / K > s.u[best] - s.c[best] / K) best = j;
    top.offer(closed_excess(s, best, j), s.u[best], s.u[j], true);
  }
  best = 0;
  for (std::size_t j = 1; j < o.q.size(); ++j) {
    top.offer(open_deficit(s, o, best, j), o.q[best], o.q[j], false);
    if (o.q[j] - o.below[j] / K < o.q[best] - o.below[best] / K) best = j;
  }
  DiscrepancyReport r;
  top.write(r, s, e.size());

  r.m_used = m > 0 ? m : std::max(1, static_cast<int>(std::floor(std::sqrt(K))));
  const std::vector<double> sums = exp_sums(e, r.m_used);
  for (int j = 1; j <= r.m_used; ++j) r.exp_sums.emplace_back(j, sums[j - 1]);
  r.et_bound = erdos_turan_bound(e, r.m_used);
  return r;
}

long long counting(const CircleEnsemble& e, double phi0, double phi1) {
  if (!(phi0 >= 0.0 && phi0 <= kTwoPi && phi1 >= 0.0 && phi1 <= kTwoPi))
    throw ConfigError("counting: endpoints must lie in [0, 2 pi]");
  long long n = 0;
  for (const auto& p : e.points()) {
    bool in;
    if (phi0 <= phi1) {
      // 2 pi and 0 are the same point of the circle.
      in = (p.arg >= phi0 && p.arg <= phi1) || (p.arg == 0.0 && phi1 >= kTwoPi);
    } else {
      in = p.arg >= phi0 || p.arg <= phi1;
    }
    if (in) n += p.weight;
  }
  return n;
}

std::vector<double> exp_sums(const CircleEnsemble& e, int m) {
  if (m < 1) throw ConfigError("exp_sums: m must be at least 1");
  if (e.empty()) throw ConfigError("exp_sums: empty ensemble");
  const double K = static_cast<double>(e.total_weight());
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    std::complex<double> s = 0.0;
    for (const auto& p : e.points()) s += static_cast<double>(p.weight) * std::polar(1.0, j * p.arg);
    out[j - 1] = std::abs(s) / K;
  }
  return out;
}

double erdos_turan_bound(const CircleEnsemble& e, int m) {
  const std::vector<double> s = exp_sums(e, m);
  const double mp1 = m + 1.0;
  double acc = 0.0;
  for (int j = 1; j <= m; ++j) acc += (1.0 / j - 1.0 / mp1) * s[j - 1];
  return 6.0 / mp1 + 4.0 / kPi * acc;
}

ExpSumReport exp_sum_bound_check(const ExpSumInstance& inst) {
  if (inst.b <= inst.a) throw ConfigError("exp_sum_bound_check: need a < b");
  if (inst.f.size() != static_cast<std::size_t>(inst.b - inst.a + 1))
    throw ConfigError("exp_sum_bound_check: f must hold b - a + 1 samples");
  if (!(inst.rho > 0.0)) throw ConfigError("exp_sum_bound_check: rho must be positive");
  std::complex<double> s = 0.0;
  for (double f : inst.f) {
    // Only the fractional part matters; dropping the integer part keeps the
    // phase accurate when f is large.
    s += std::polar(1.0, kTwoPi * (f - std::floor(f)));
  }
  ExpSumReport r;
  r.sum_abs = std::abs(s);
  r.bound = (std::abs(inst.fprime_b - inst.fprime_a) + 2.0) * (4.0 / std::sqrt(inst.rho) + 3.0);
  r.pass = r.sum_abs <= r.bound;
  return r;
}

ExpSumInstance exp_sum_instance_from_profile(const ScatteringProfile& profile, double h, int j,
                                             long long a, long long b) {
  if (!(h > 0.0) || j < 1 || a < 0 || b <= a) throw ConfigError("exp_sum_instance: bad parameters");
  if (b * h >= profile.R) throw ConfigError("exp_sum_instance: b h must be below R");
  ExpSumInstance inst;
  inst.a = a;
  inst.b = b;
  const double scale = j / (kTwoPi * h);
  for (long long l = a; l <= b; ++l) inst.f.push_back(scale * profile.G_at(l * h));
  inst.fprime_a = j * profile.sigma_at(a * h) / kTwoPi;
  inst.fprime_b = j * profile.sigma_at(b * h) / kTwoPi;

  const double lo = a * h, hi = b * h;
  double min_slope = INFINITY;
  for (std::size_t i = 0; i + 1 < profile.eta.size(); ++i) {
    if (profile.eta[i + 1] < lo || profile.eta[i] > hi) continue;
    const double slope = (profile.sigma[i + 1] - profile.sigma[i]) / (profile.eta[i + 1] - profile.eta[i]);
    min_slope = std::min(min_slope, std::abs(slope));
  }
  inst.rho = h * j * min_slope / kTwoPi;
  return inst;
}

Superposition superpose(const std::vector<CircleEnsemble>& parts) {
  if (parts.empty()) throw ConfigError("superpose: empty list");
  Superposition s;
  double weighted = 0.0;
  for (const auto& p : parts)
    for (const auto& pt : p.points()) s.ensemble.add(pt.arg, pt.weight);
  const double K = static_cast<double>(s.ensemble.total_weight());
  for (const auto& p : parts) weighted += p.total_weight() / K * discrepancy(p, 1).discrepancy;
  s.discrepancy = discrepancy(s.ensemble, 1).discrepancy;
  s.bound = weighted;
  // The inequality is exact; the slack absorbs rounding in the weighted sum.
  s.holds = s.discrepancy <= s.bound + 1e-12;
  return s;
}

CircleEnsemble build_wkb_ensemble(const ScatteringProfile& profile, int d, double h,
                                  const WkbEnsembleOptions& opt) {
  if (!(h > 0.0)) throw ConfigError("build_wkb_ensemble: h must be positive");
  CircleEnsemble e;
  for (int l = 0; l * h < profile.R; ++l) {
    const double lh = l * h;
    bool skip = false;
    for (double x : opt.exclude)
      if (std::abs(lh - x) < opt.epsilon) skip = true;
    if (skip) continue;
    e.add(profile.G_at((l + opt.shift) * h) / h, multiplicity(d, l));
  }
  return e;
}

CircleEnsemble ensemble_from_table(const PhaseShiftTable& table, bool use_wkb, bool all_l) {
  CircleEnsemble e;
  for (const auto& entry : table.entries) {
    if (!all_l && entry.l * table.h > table.R + 1e-9 * table.h) continue;
    e.add(use_wkb ? entry.beta_wkb : entry.beta, entry.multiplicity);
  }
  return e;
}

double leading_count(int d, double R, double h) {
  if (d < 2) throw ConfigError("leading_count: dimension must be at least 2");
  return 2.0 * std::pow(R / h, d - 1) / std::tgamma(static_cast<double>(d));
}

}  // namespace phaselab
