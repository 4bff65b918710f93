#pragma once

#include <vector>

namespace phaselab {

struct RateFit {
  double slope, intercept, r2;
};

// Least squares of log y against log x. Needs at least 3 points, distinct xs
// and positive ys; throws ConfigError otherwise.
RateFit fit_rate(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace phaselab
