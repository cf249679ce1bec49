#pragma once

#include <cmath>
#include <stdexcept>

namespace tangleroof {

/// Root of a continuous f on [lo, hi] with f(lo), f(hi) of opposite sign (or
/// one of them zero). Halves the bracket until it is no wider than tol or can
/// no longer be split in double precision.
template <typename Function>
double bisect(const Function& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw std::domain_error("bisect: root is not bracketed");
  }
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace tangleroof
