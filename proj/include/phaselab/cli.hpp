#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace phaselab {

struct RunConfig {
  std::string command;  // classical | phaseshifts | wkb | disk | discrepancy | sweep | check-potential | specfun-selftest
  std::string potential = R"({"family":"bump","c":37,"s":3,"R":1})";  // path or inline JSON
  int d = 2;
  std::vector<double> h_list{0.1, 0.05, 0.025};
  std::vector<double> k_list{50, 100, 200, 400};
  int l_max = -1;  // -1 selects ceil(2R/h)
  double energy = 1.0;
  double radius = 1.0;  // disk only
  std::string out;      // empty writes the data to stdout
  std::string format = "csv";
  bool plots = false;
  double epsilon = 0.05;
  double kappa = 0.5;
  std::uint64_t seed = 0;
  std::string input;       // discrepancy: argument,weight rows
  std::string from_table;  // discrepancy: phaseshifts or disk CSV
  int m = 0;               // Erdos-Turan cutoff; 0 selects floor(sqrt(N))
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

// Throws ConfigError on bad arguments. Returns a config with command empty
// when help was requested (the help text is written to `out`).
RunConfig parse_args(int argc, const char* const* argv, std::ostream& out);

// Throws ConfigError for inconsistent settings.
void validate(const RunConfig& cfg);

// Runs one command. Data goes to cfg.out (or `out` when empty); the one-line
// summary goes to `out` when data went to a file and to `log` otherwise.
// Returns an exit code; errors are reported on `log`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& log);

// parse_args + run with exit-code mapping.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& log);

}  // namespace phaselab
