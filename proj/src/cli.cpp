#include "phaselab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "phaselab/classical.hpp"
#include "phaselab/csv.hpp"
#include "phaselab/disk.hpp"
#include "phaselab/equidist.hpp"
#include "phaselab/errors.hpp"
#include "phaselab/fit.hpp"
#include "phaselab/potential.hpp"
#include "phaselab/radial.hpp"
#include "phaselab/specfun.hpp"

namespace phaselab {

namespace {

constexpr int kSchemaVersion = 1;
constexpr double kInteriorMargin = 0.1;  // in units of R, for the max WKB error
// Near R the potential is below rounding and Sigma is flat at ~1e-15; the
// quadrature is good to ~1e-10.
constexpr double kMonotoneSlack = 1e-10;

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"classical", "scattering angle, phase generator and sojourn time profile"},
    {"phaseshifts", "exact eigenvalues with WKB values and flags, per h"},
    {"wkb", "WKB phases G(alpha)/h per l and h"},
    {"disk", "hard-ball eigenvalues, approximation error and discrepancy per k"},
    {"discrepancy", "discrepancy and Erdos-Turan bound of a weighted point set"},
    {"sweep", "WKB error, discrepancies and fitted rate across the h list"},
    {"check-potential", "checks the admissibility conditions on a potential"},
    {"specfun-selftest", "randomized cross-checks of the Hankel evaluators"}};

struct Result {
  Table table;
  nlohmann::json summary = nlohmann::json::object();
  std::string line;
  std::string plot;  // gnuplot body; "DATA" is replaced by the CSV path
  bool numerical_failure = false;
};

std::string fmt(double x, int digits = 4) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(digits);
  os << x;
  return os.str();
}

CentralPotential load_potential(const RunConfig& cfg) {
  CentralPotential pot = CentralPotential::from_spec(cfg.potential);
  return cfg.energy == 1.0 ? pot : pot.scaled(1.0 / cfg.energy);
}

// S_{h,V}(E) = S_{h/sqrt(E), V/E}(1).
double reduced_h(const RunConfig& cfg, double h) { return h / std::sqrt(cfg.energy); }

int default_lmax(const RunConfig& cfg, double R, double h) {
  return cfg.l_max >= 0 ? cfg.l_max : static_cast<int>(std::ceil(2.0 * R / h));
}

TableOptions table_options(const RunConfig& cfg) {
  TableOptions opt;
  opt.epsilon = cfg.epsilon;
  opt.kappa = cfg.kappa;
  return opt;
}

double fit_slope_or_nan(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() < 3) return std::nan("");
  for (double y : ys)
    if (!(y > 0.0)) return std::nan("");
  return fit_rate(xs, ys).slope;
}

Result cmd_classical(const RunConfig& cfg) {
  const CentralPotential pot = load_potential(cfg);
  const ScatteringProfile p = phase_generator(pot);
  Result r;
  r.table.columns = {"potential_id", "energy", "eta", "sigma", "T", "G"};
  bool monotone = true;
  for (std::size_t i = 0; i < p.eta.size(); ++i) {
    r.table.add_row({pot.id(), cfg.energy, p.eta[i], p.sigma[i], p.T[i], p.G[i]});
    if (i > 0 && p.sigma[i] < p.sigma[i - 1] - kMonotoneSlack) monotone = false;
  }
  r.summary = {{"points", p.eta.size()},
               {"G_first", p.G.front()},
               {"sigma_first", p.sigma.front()},
               {"sigma_monotone", monotone}};
  r.line = "classical potential=" + pot.id() + " points=" + std::to_string(p.eta.size()) +
           " G(eta_min)=" + fmt(p.G.front()) + " Sigma(eta_min)=" + fmt(p.sigma.front()) +
           " sigma_monotone=" + (monotone ? "yes" : "no");
  r.plot = "set datafile separator ','\nset key autotitle columnhead\nset xlabel 'eta'\n"
           "plot 'DATA' using 3:4 with lines title 'Sigma', '' using 3:5 with lines title 'T', "
           "'' using 3:6 with lines title 'G'\n";
  return r;
}

Result cmd_phaseshifts(const RunConfig& cfg) {
  const CentralPotential pot = load_potential(cfg);
  const ScatteringProfile profile = phase_generator(pot);
  const TableOptions opt = table_options(cfg);
  Result r;
  r.table.columns = {"potential_id", "d", "h", "energy", "R", "l", "nu", "multiplicity",
                     "beta_exact", "beta_wkb", "abs_err", "flags", "epsilon", "kappa", "rtol"};
  nlohmann::json per_h = nlohmann::json::array();
  std::string parts;
  for (double h_user : cfg.h_list) {
    const double h = reduced_h(cfg, h_user);
    const PhaseShiftTable t = build_table(pot, profile, cfg.d, h, default_lmax(cfg, pot.R(), h), opt);
    for (const auto& e : t.entries) {
      if (e.flags & kFlagError) r.numerical_failure = true;
      r.table.add_row({pot.id(), static_cast<long long>(cfg.d), h_user, cfg.energy, pot.R(),
                       static_cast<long long>(e.l), e.nu, e.multiplicity, e.beta, e.beta_wkb, e.err,
                       flags_to_string(e.flags), cfg.epsilon, cfg.kappa, opt.radial.rtol});
    }
    const double err = max_interior_error(t, kInteriorMargin * pot.R());
    per_h.push_back({{"h", h_user}, {"max_err", err}, {"l_max", t.entries.size() - 1}});
    parts += " max_err(h=" + fmt(h_user) + ")=" + fmt(err);
  }
  r.summary = {{"per_h", per_h}};
  r.line = "phaseshifts potential=" + pot.id() + " d=" + std::to_string(cfg.d) + parts;
  r.plot = "set datafile separator ','\nset key autotitle columnhead\nset logscale y\n"
           "set xlabel 'l'\nset ylabel '|exact - wkb|'\nplot 'DATA' using 6:11 with points\n";
  return r;
}

Result cmd_wkb(const RunConfig& cfg) {
  const CentralPotential pot = load_potential(cfg);
  const ScatteringProfile profile = phase_generator(pot);
  const double shift = 0.5 * (cfg.d - 2);
  Result r;
  r.table.columns = {"potential_id", "d", "h", "energy", "l", "alpha", "G", "beta_wkb", "multiplicity"};
  nlohmann::json per_h = nlohmann::json::array();
  std::string parts;
  for (double h_user : cfg.h_list) {
    const double h = reduced_h(cfg, h_user);
    for (int l = 0; l * h < pot.R(); ++l) {
      const double alpha = (l + shift) * h;
      const double G = profile.G_at(alpha);
      r.table.add_row({pot.id(), static_cast<long long>(cfg.d), h_user, cfg.energy,
                       static_cast<long long>(l), alpha, G, wrap_angle(G / h), multiplicity(cfg.d, l)});
    }
    WkbEnsembleOptions wopt;
    wopt.shift = shift;
    const DiscrepancyReport rep = discrepancy(build_wkb_ensemble(profile, cfg.d, h, wopt), cfg.m);
    per_h.push_back({{"h", h_user}, {"discrepancy", rep.discrepancy}, {"et_bound", rep.et_bound}});
    parts += " D(h=" + fmt(h_user) + ")=" + fmt(rep.discrepancy);
  }
  r.summary = {{"per_h", per_h}};
  r.line = "wkb potential=" + pot.id() + " d=" + std::to_string(cfg.d) + parts;
  r.plot = "set datafile separator ','\nset key autotitle columnhead\nset xlabel 'alpha'\n"
           "plot 'DATA' using 6:7 with lines title 'G'\n";
  return r;
}

Result cmd_disk(const RunConfig& cfg) {
  Result r;
  r.table.columns = {"d", "l", "k", "R", "multiplicity", "x_exact", "x_approx", "abs_err", "in_range"};
  std::vector<double> sups, ds;
  nlohmann::json per_k = nlohmann::json::array();
  for (double k : cfg.k_list) {
    const auto entries = disk_table(cfg.d, k, cfg.radius);
    double sup = 0.0;
    CircleEnsemble ens;
    for (const auto& e : entries) {
      r.table.add_row({static_cast<long long>(e.d), static_cast<long long>(e.l), e.k, e.R, e.multiplicity,
                       e.x_exact, e.x_approx, e.abs_err, e.in_range});
      if (e.in_range) sup = std::max(sup, e.abs_err);
      ens.add(e.x_exact, e.multiplicity);
    }
    const double D = discrepancy(ens, cfg.m).discrepancy;
    sups.push_back(sup);
    ds.push_back(D);
    per_k.push_back({{"k", k}, {"sup_err", sup}, {"discrepancy", D}, {"count", ens.total_weight()}});
  }
  const double err_slope = fit_slope_or_nan(cfg.k_list, sups);
  const double d_slope = fit_slope_or_nan(cfg.k_list, ds);
  r.summary = {{"per_k", per_k}, {"err_slope", err_slope}, {"discrepancy_slope", d_slope}};
  r.line = "disk d=" + std::to_string(cfg.d) + " R=" + fmt(cfg.radius) + " err_slope=" + fmt(err_slope) +
           " D_slope=" + fmt(d_slope) + " sup_err(k_max)=" + fmt(sups.back()) + " D(k_max)=" + fmt(ds.back());
  r.plot = "set datafile separator ','\nset key autotitle columnhead\nset logscale y\n"
           "set xlabel 'l/k'\nset ylabel '|exact - approx|'\nplot 'DATA' using ($2/$3):8 with points\n";
  return r;
}

// Groups rows of a phaseshifts or disk table by h or k and builds one
// ensemble per group.
std::vector<std::pair<double, CircleEnsemble>> ensembles_from_csv(const CsvData& csv) {
  std::map<double, CircleEnsemble> groups;
  const int c_mult = csv.column("multiplicity");
  int c_arg = csv.column("beta_exact");
  const bool phase = c_arg >= 0;
  if (!phase) c_arg = csv.column("x_exact");
  if (c_arg < 0 || c_mult < 0)
    throw ConfigError("--from-table needs beta_exact or x_exact, and multiplicity columns");
  const int c_key = csv.column(phase ? "h" : "k");
  const int c_l = csv.column("l");
  const int c_R = csv.column("R");
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const double key = c_key >= 0 ? csv.number(i, c_key) : 0.0;
    // Phase-shift tables keep only l h <= R, the set counted in the equidistribution statement.
    if (phase && c_key >= 0 && c_l >= 0 && c_R >= 0 &&
        csv.number(i, c_l) * key > csv.number(i, c_R) + 1e-9 * key)
      continue;
    groups[key].add(csv.number(i, c_arg), static_cast<long long>(csv.number(i, c_mult)));
  }
  return {groups.begin(), groups.end()};
}

Result cmd_discrepancy(const RunConfig& cfg) {
  std::vector<std::pair<double, CircleEnsemble>> groups;
  std::string key_name = "group";
  if (!cfg.input.empty()) {
    const CsvData csv = read_csv(cfg.input);
    const int c_arg = csv.column("argument");
    const int c_w = csv.column("weight");
    if (c_arg < 0) throw ConfigError("--input needs an argument column");
    CircleEnsemble e;
    for (std::size_t i = 0; i < csv.rows.size(); ++i)
      e.add(csv.number(i, c_arg), c_w >= 0 ? static_cast<long long>(csv.number(i, c_w)) : 1);
    groups.emplace_back(0.0, std::move(e));
  } else {
    const CsvData csv = read_csv(cfg.from_table);
    key_name = csv.column("beta_exact") >= 0 ? "h" : "k";
    groups = ensembles_from_csv(csv);
  }
  Result r;
  r.table.columns = {key_name, "discrepancy", "et_bound", "m_used", "witness_phi0", "witness_phi1",
                     "witness_closed", "total_weight", "n_points"};
  nlohmann::json reports = nlohmann::json::array();
  std::string parts;
  for (const auto& [key, e] : groups) {
    if (e.empty()) continue;
    const DiscrepancyReport rep = discrepancy(e, cfg.m);
    r.table.add_row({key, rep.discrepancy, rep.et_bound, static_cast<long long>(rep.m_used),
                     rep.witness.first, rep.witness.second, rep.witness_closed, rep.total_weight,
                     static_cast<long long>(rep.n_points)});
    nlohmann::json sums = nlohmann::json::array();
    for (const auto& [j, s] : rep.exp_sums) sums.push_back({j, s});
    reports.push_back({{key_name, key}, {"discrepancy", rep.discrepancy}, {"exp_sums", sums}});
    parts += " D=" + fmt(rep.discrepancy) + " ET=" + fmt(rep.et_bound);
  }
  if (reports.empty()) throw ConfigError("discrepancy: no points in input");
  r.summary = {{"reports", reports}};
  r.line = "discrepancy" + parts;
  return r;
}

Result cmd_sweep(const RunConfig& cfg) {
  const CentralPotential pot = load_potential(cfg);
  const ScatteringProfile profile = phase_generator(pot);
  const TableOptions opt = table_options(cfg);
  Result r;
  r.table.columns = {"potential_id", "d", "h", "energy", "l_max", "max_err", "D_exact", "D_wkb",
                     "count", "leading_count", "count_rel_err", "epsilon", "kappa"};
  std::vector<double> hs, errs, dex;
  for (double h_user : cfg.h_list) {
    const double h = reduced_h(cfg, h_user);
    const int lmax = default_lmax(cfg, pot.R(), h);
    const PhaseShiftTable t = build_table(pot, profile, cfg.d, h, lmax, opt);
    for (const auto& e : t.entries)
      if (e.flags & kFlagError) r.numerical_failure = true;
    const double err = max_interior_error(t, kInteriorMargin * pot.R());
    const CircleEnsemble exact = ensemble_from_table(t);
    const CircleEnsemble wkb = ensemble_from_table(t, true);
    const double D = discrepancy(exact, cfg.m).discrepancy;
    const double Dw = discrepancy(wkb, cfg.m).discrepancy;
    const double lead = leading_count(cfg.d, pot.R(), h);
    const double rel = std::abs(exact.total_weight() - lead) / lead;
    r.table.add_row({pot.id(), static_cast<long long>(cfg.d), h_user, cfg.energy, static_cast<long long>(lmax),
                     err, D, Dw, exact.total_weight(), lead, rel, cfg.epsilon, cfg.kappa});
    hs.push_back(h_user);
    errs.push_back(err);
    dex.push_back(D);
  }
  const double err_slope = fit_slope_or_nan(hs, errs);
  const double d_slope = fit_slope_or_nan(hs, dex);
  r.summary = {{"err_slope", err_slope}, {"discrepancy_slope", d_slope}};
  r.line = "sweep potential=" + pot.id() + " d=" + std::to_string(cfg.d) + " err_slope=" + fmt(err_slope) +
           " max_err(h_min)=" + fmt(errs.back()) + " D(h_min)=" + fmt(dex.back()) +
           " D_slope=" + fmt(d_slope);
  r.plot = "set datafile separator ','\nset key autotitle columnhead\nset logscale xy\nset xlabel 'h'\n"
           "plot 'DATA' using 3:6 with linespoints title 'max err', '' using 3:7 with linespoints "
           "title 'D exact', '' using 3:8 with linespoints title 'D wkb'\n";
  return r;
}

Result cmd_check_potential(const RunConfig& cfg) {
  const CentralPotential pot = load_potential(cfg);
  const double R = pot.R();
  std::vector<double> etas;
  for (int i = 0; i <= 210; ++i) etas.push_back(1.05 * R * i / 210.0);
  const NontrapReport nt = check_nontrapping(pot, etas);
  const AngleReport ang = check_angle_condition(pot);
  const ScatteringProfile p = phase_generator(pot);
  bool monotone = true;
  for (std::size_t i = 1; i < p.eta.size(); ++i)
    if (p.sigma[i] < p.sigma[i - 1] - kMonotoneSlack) monotone = false;

  Result r;
  r.table.columns = {"potential_id", "check", "pass", "value", "detail"};
  std::string nt_detail;
  for (const auto& e : nt.entries)
    if (!e.pass && nt_detail.empty()) nt_detail = "eta=" + fmt(e.eta) + " " + e.note;
  r.table.add_row({pot.id(), std::string("nontrapping"), nt.pass, nt.min_abs_fprime,
                   nt_detail.empty() ? std::string("simple turning points") : nt_detail});
  r.table.add_row({pot.id(), std::string("angle_condition"), ang.pass, ang.min_margin,
                   "monotone=" + std::string(ang.monotone ? "yes" : "no") + " worst_r=" + fmt(ang.worst_r)});
  r.table.add_row({pot.id(), std::string("sigma_monotone"), monotone, p.sigma.front(),
                   std::string("Sigma nondecreasing on the profile grid")});
  const bool all = nt.pass && ang.pass && monotone;
  r.summary = {{"nontrapping", nt.pass}, {"angle_condition", ang.pass}, {"sigma_monotone", monotone},
               {"pass", all}};
  auto pf = [](bool b) { return std::string(b ? "PASS" : "FAIL"); };
  r.line = "check-potential potential=" + pot.id() + " nontrapping=" + pf(nt.pass) +
           " angle_condition=" + pf(ang.pass) + " sigma_monotone=" + pf(monotone) + " overall=" + pf(all);
  return r;
}

Result cmd_specfun_selftest(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  struct Stratum {
    const char* name;
    double lo, hi;  // z / nu
  };
  const Stratum strata[] = {{"oscillatory", 1.1, 3.0}, {"transition", 0.9, 1.1}, {"moderate", 0.5, 0.9}};
  Result r;
  r.table.columns = {"nu", "z", "regime", "rel_diff", "wronskian_dev", "pass"};
  double worst_diff = 0.0, worst_w = 0.0;
  bool ok = true;
  for (const auto& s : strata) {
    for (int i = 0; i < 40; ++i) {
      // Orders spread log-uniformly over [1, 1000].
      const double nu = std::round(std::pow(1000.0, unit(rng)) * 8.0) / 8.0;
      const double z = std::min(kMaxArgument, std::max(0.1, nu * (s.lo + (s.hi - s.lo) * unit(rng))));
      const HankelPair a = hankel1_steed(nu, z);
      const HankelPair b = hankel1_integral(nu, z);
      const double diff = std::abs(a.h1 - b.h1) / std::abs(a.h1);
      const double wdev = std::abs(wronskian_ratio(a) - 1.0);
      const bool pass = diff <= 1e-8 && wdev <= 1e-9;
      ok = ok && pass;
      worst_diff = std::max(worst_diff, diff);
      worst_w = std::max(worst_w, wdev);
      r.table.add_row({nu, z, std::string(s.name), diff, wdev, pass});
    }
  }
  r.numerical_failure = !ok;
  r.summary = {{"max_rel_diff", worst_diff}, {"max_wronskian_dev", worst_w}, {"pass", ok}};
  r.line = "specfun-selftest seed=" + std::to_string(cfg.seed) + " max_rel_diff=" + fmt(worst_diff, 3) +
           " max_wronskian_dev=" + fmt(worst_w, 3) + (ok ? " PASS" : " FAIL");
  return r;
}

nlohmann::json config_json(const RunConfig& cfg) {
  return {{"command", cfg.command}, {"potential", cfg.potential}, {"d", cfg.d},
          {"h", cfg.h_list},        {"k", cfg.k_list},            {"l_max", cfg.l_max},
          {"energy", cfg.energy},   {"radius", cfg.radius},       {"epsilon", cfg.epsilon},
          {"kappa", cfg.kappa},     {"seed", cfg.seed},           {"m", cfg.m}};
}

void emit(const RunConfig& cfg, const Result& res, std::ostream& out, std::ostream& log) {
  auto write = [&](std::ostream& os) {
    if (cfg.format == "json") {
      nlohmann::json doc = {{"schema_version", kSchemaVersion},
                            {"config", config_json(cfg)},
                            {"summary", res.summary},
                            {"rows", res.table.to_json()}};
      os << doc.dump(2) << '\n';
    } else {
      res.table.write_csv(os);
    }
  };
  if (cfg.out.empty()) {
    write(out);
    log << res.line << '\n';
    return;
  }
  {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + cfg.out);
    write(f);
  }
  if (cfg.plots && !res.plot.empty()) {
    std::string data = cfg.out;
    if (cfg.format == "json") {
      data = cfg.out + ".csv";
      std::ofstream f(data, std::ios::binary);
      res.table.write_csv(f);
    }
    std::string script = res.plot;
    const std::string name = std::filesystem::path(data).filename().string();
    for (auto pos = script.find("DATA"); pos != std::string::npos; pos = script.find("DATA"))
      script.replace(pos, 4, name);
    std::ofstream f(cfg.out + ".gp", std::ios::binary);
    f << "# gnuplot script for " << name << '\n' << script;
  }
  out << res.line << '\n';
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig cfg;
  CLI::App app{"Exact and semiclassical phase shifts, hard-ball eigenvalues and discrepancy"};
  app.set_help_flag("--help", "print this help");  // -h would clash with --h
  app.require_subcommand(1);
  app.fallthrough();
  std::string h_text, k_text;
  long long seed = 0;
  app.add_option("--potential", cfg.potential, "potential JSON file or inline JSON object");
  app.add_option("--dim", cfg.d, "space dimension d >= 2");
  app.add_option("--h", h_text, "comma-separated list of h values");
  app.add_option("--k,--k-list", k_text, "comma-separated list of k values (disk)");
  app.add_option("--lmax", cfg.l_max, "largest angular momentum (default ceil(2R/h))");
  app.add_option("--energy", cfg.energy, "energy E > 0, reduced to E = 1");
  app.add_option("--radius", cfg.radius, "disk radius");
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--plots", cfg.plots, "also write a gnuplot script next to --out");
  app.add_option("--epsilon", cfg.epsilon, "bad-set exclusion width");
  app.add_option("--kappa", cfg.kappa, "large-l threshold exponent");
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--input", cfg.input, "discrepancy: CSV with argument,weight columns");
  app.add_option("--from-table", cfg.from_table, "discrepancy: phaseshifts or disk CSV");
  app.add_option("--m", cfg.m, "Erdos-Turan cutoff (default floor(sqrt(N)))");
  for (const auto& [name, desc] : kCommands)
    app.add_subcommand(name, desc)->set_help_flag("--help", "print this help");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    cfg.command.clear();
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  cfg.command = app.get_subcommands().front()->get_name();
  auto parse_list = [](const std::string& text, const char* flag) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_double(item));
    if (v.empty()) throw ConfigError(std::string(flag) + " needs at least one value");
    return v;
  };
  if (!h_text.empty()) cfg.h_list = parse_list(h_text, "--h");
  if (!k_text.empty()) cfg.k_list = parse_list(k_text, "--k");
  if (seed < 0) throw ConfigError("--seed must be nonnegative");
  cfg.seed = static_cast<std::uint64_t>(seed);
  return cfg;
}

void validate(const RunConfig& cfg) {
  auto known = [&](const auto& c) { return c.first == cfg.command; };
  if (std::none_of(kCommands.begin(), kCommands.end(), known))
    throw ConfigError("unknown command '" + cfg.command + "'");
  if (cfg.d < 2) throw ConfigError("--dim must be at least 2");
  if (!(cfg.energy > 0.0) || !std::isfinite(cfg.energy)) throw ConfigError("--energy must be positive");
  if (!(cfg.radius > 0.0)) throw ConfigError("--radius must be positive");
  if (!(cfg.epsilon >= 0.0)) throw ConfigError("--epsilon must be nonnegative");
  if (!(cfg.kappa > 0.0)) throw ConfigError("--kappa must be positive");
  if (cfg.m < 0) throw ConfigError("--m must be nonnegative");
  if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("--format must be csv or json");
  if (cfg.plots && cfg.out.empty()) throw ConfigError("--plots needs --out");
  for (double h : cfg.h_list)
    if (!(h > 0.0)) throw ConfigError("--h values must be positive");
  for (double k : cfg.k_list)
    if (!(k > 0.0) || k > kMaxArgument) throw ConfigError("--k values must lie in (0, 2000]");
  if (cfg.command == "sweep")
    for (std::size_t i = 1; i < cfg.h_list.size(); ++i)
      if (!(cfg.h_list[i] < cfg.h_list[i - 1])) throw ConfigError("sweep: --h must be strictly decreasing");
  if (cfg.command == "disk")
    for (std::size_t i = 1; i < cfg.k_list.size(); ++i)
      if (!(cfg.k_list[i] > cfg.k_list[i - 1])) throw ConfigError("disk: --k must be strictly increasing");
  if (cfg.command == "discrepancy" && cfg.input.empty() == cfg.from_table.empty())
    throw ConfigError("discrepancy: give exactly one of --input and --from-table");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  try {
    validate(cfg);
    Result res;
    if (cfg.command == "classical") res = cmd_classical(cfg);
    else if (cfg.command == "phaseshifts") res = cmd_phaseshifts(cfg);
    else if (cfg.command == "wkb") res = cmd_wkb(cfg);
    else if (cfg.command == "disk") res = cmd_disk(cfg);
    else if (cfg.command == "discrepancy") res = cmd_discrepancy(cfg);
    else if (cfg.command == "sweep") res = cmd_sweep(cfg);
    else if (cfg.command == "check-potential") res = cmd_check_potential(cfg);
    else res = cmd_specfun_selftest(cfg);
    emit(cfg, res, out, log);
    if (res.numerical_failure) {
      log << "error: numerical failure in one or more entries (see flags)\n";
      return kExitNumerical;
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    log << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const nlohmann::json::exception& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& log) {
  RunConfig cfg;
  try {
    cfg = parse_args(argc, argv, out);
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (cfg.command.empty()) return kExitOk;
  return run(cfg, out, log);
}

}  // namespace phaselab
