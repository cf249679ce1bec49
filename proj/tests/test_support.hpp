// Random generators shared by the test suites.

#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "tangleroof/family.hpp"
#include "tangleroof/pure_state.hpp"

namespace tangleroof::testing {

using Rng = std::mt19937_64;

inline Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  return {re, g(rng)};
}

inline PureState3Q random_state(Rng& rng) {
  Amplitudes amps;
  for (auto& a : amps) a = gaussian_complex(rng);
  return PureState3Q::normalized(amps);
}

/// Haar-ish random U(2) via Gram-Schmidt on a Gaussian matrix.
inline Matrix2 random_unitary(Rng& rng) {
  Complex c00 = gaussian_complex(rng), c10 = gaussian_complex(rng);
  Complex c01 = gaussian_complex(rng), c11 = gaussian_complex(rng);
  const double n0 = std::sqrt(std::norm(c00) + std::norm(c10));
  c00 /= n0;
  c10 /= n0;
  const Complex ov = std::conj(c00) * c01 + std::conj(c10) * c11;
  c01 -= ov * c00;
  c11 -= ov * c10;
  const double n1 = std::sqrt(std::norm(c01) + std::norm(c11));
  c01 /= n1;
  c11 /= n1;
  return {{{c00, c01}, {c10, c11}}};
}

/// Family with every coefficient bounded away from zero.
inline FamilyParams random_generic_family(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.1, std::numbers::pi / 2 - 0.1);
  std::uniform_real_distribution<double> mag(0.2, 1.0);
  const double theta = angle(rng);
  double c = mag(rng), d = mag(rng), f = mag(rng);
  const double n = std::sqrt(c * c + d * d + f * f);
  c /= n;
  d /= n;
  f /= n;
  return FamilyParams(std::cos(theta), std::sin(theta), c, d, f);
}

}  // namespace tangleroof::testing
