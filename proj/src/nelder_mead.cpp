#include "tangleroof/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tangleroof {

namespace {

struct Simplex {
  std::vector<std::vector<double>> points;
  std::vector<double> values;
};

class Budgeted {
 public:
  Budgeted(const Objective& f, int max_evaluations) : f_(f), max_(max_evaluations) {}

  double operator()(const std::vector<double>& x) {
    ++count_;
    return f_(x);
  }
  bool exhausted() const { return count_ >= max_; }
  int count() const { return count_; }

 private:
  const Objective& f_;
  int max_;
  int count_ = 0;
};

Simplex build_simplex(Budgeted& f, const std::vector<double>& center, double center_value,
                      double step) {
  const std::size_t n = center.size();
  Simplex s;
  s.points.reserve(n + 1);
  s.points.push_back(center);
  s.values.push_back(center_value);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = center;
    v[i] += step;
    s.values.push_back(f(v));
    s.points.push_back(std::move(v));
  }
  return s;
}

// One Nelder-Mead descent until stall or budget exhaustion. Returns the number
// of iterations performed; the simplex is left sorted best-first.
int descend(Budgeted& f, Simplex& s, const NelderMeadOptions& opt) {
  const std::size_t n = s.points.front().size();
  const double dn = static_cast<double>(n);
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / dn;
  const double contract = 0.75 - 1.0 / (2.0 * dn);
  const double shrink = 1.0 - 1.0 / dn;

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return s.values[i] < s.values[j]; });
    Simplex sorted;
    sorted.points.reserve(n + 1);
    for (std::size_t i : order) {
      sorted.points.push_back(std::move(s.points[i]));
      sorted.values.push_back(s.values[i]);
    }
    s = std::move(sorted);
  };
  auto along = [&](std::vector<double>& out, const std::vector<double>& from, double coef) {
    // out = centroid + coef * (centroid - from)
    for (std::size_t k = 0; k < n; ++k) out[k] = centroid[k] + coef * (centroid[k] - from[k]);
  };

  sort_simplex();
  double reference = s.values.front();
  int stalled = 0;
  int iterations = 0;
  while (!f.exhausted() && stalled < opt.stall_iterations) {
    ++iterations;
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += s.points[i][k];
    for (double& c : centroid) c /= dn;

    auto& worst = s.points[n];
    const double f_best = s.values.front();
    const double f_second = s.values[n - 1];
    const double f_worst = s.values[n];

    along(trial, worst, reflect);
    const double f_reflect = f(trial);
    bool do_shrink = false;
    if (f_reflect < f_best) {
      along(trial2, worst, reflect * expand);
      const double f_expand = f(trial2);
      if (f_expand < f_reflect) {
        worst = trial2;
        s.values[n] = f_expand;
      } else {
        worst = trial;
        s.values[n] = f_reflect;
      }
    } else if (f_reflect < f_second) {
      worst = trial;
      s.values[n] = f_reflect;
    } else if (f_reflect < f_worst) {
      along(trial2, worst, reflect * contract);
      const double f_out = f(trial2);
      if (f_out <= f_reflect) {
        worst = trial2;
        s.values[n] = f_out;
      } else {
        do_shrink = true;
      }
    } else {
      along(trial2, worst, -contract);
      const double f_in = f(trial2);
      if (f_in < f_worst) {
        worst = trial2;
        s.values[n] = f_in;
      } else {
        do_shrink = true;
      }
    }
    if (do_shrink) {
      const auto best = s.points.front();
      for (std::size_t i = 1; i <= n && !f.exhausted(); ++i) {
        for (std::size_t k = 0; k < n; ++k)
          s.points[i][k] = best[k] + shrink * (s.points[i][k] - best[k]);
        s.values[i] = f(s.points[i]);
      }
    }
    sort_simplex();

    if (s.values.front() < reference - opt.improvement_tolerance) {
      reference = s.values.front();
      stalled = 0;
    } else {
      ++stalled;
    }
  }
  return iterations;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& objective, std::vector<double> x0,
                             const NelderMeadOptions& options) {
  if (x0.empty()) throw std::invalid_argument("nelder_mead: empty starting point");
  if (options.max_evaluations < 1) throw std::invalid_argument("nelder_mead: no budget");

  Budgeted f(objective, options.max_evaluations);
  double best_value = f(x0);
  std::vector<double> best = std::move(x0);
  double step = options.initial_step;
  int iterations = 0;
  for (int round = 0; round <= options.max_rebuilds && !f.exhausted(); ++round) {
    Simplex s = build_simplex(f, best, best_value, step);
    iterations += descend(f, s, options);
    const double gained = best_value - s.values.front();
    if (s.values.front() < best_value) {
      best_value = s.values.front();
      best = s.points.front();
    }
    if (round > 0 && gained < options.improvement_tolerance) break;
    step *= options.rebuild_step_factor;
  }
  return {std::move(best), best_value, f.count(), iterations};
}

}  // namespace tangleroof
