// Derivative-free simplex minimization.

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace tangleroof {

struct NelderMeadOptions {
  /// Edge length of the initial axis-aligned simplex.
  double initial_step = 0.5;
  /// Stop once the best value improved by less than this over
  /// stall_iterations consecutive iterations.
  double improvement_tolerance = 1e-12;
  int stall_iterations = 50;
  int max_evaluations = 20000;
  /// Rebuild the simplex around the incumbent after a stall, shrinking the
  /// step each time, until a rebuild brings no improvement or the budget is
  /// spent. Zero disables rebuilding.
  int max_rebuilds = 8;
  double rebuild_step_factor = 0.25;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  int evaluations;
  int iterations;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes f from x0 with the dimension-adaptive coefficients of Gao and
/// Han (reflection 1, expansion 1 + 2/n, contraction 3/4 - 1/(2n),
/// shrink 1 - 1/n).
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& options = {});

}  // namespace tangleroof
