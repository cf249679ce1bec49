#include "tangleroof/family.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tangleroof {

void require_unit_interval(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error(std::string(what) + ": p = " + std::to_string(p) +
                            " is outside [0, 1]");
  }
}

FamilyParams::FamilyParams(double a, double b, double c, double d, double f)
    : a_(a), b_(b), c_(c), d_(d), f_(f) {
  for (double x : {a, b, c, d, f}) {
    if (!std::isfinite(x) || x < 0.0) {
      throw std::invalid_argument("FamilyParams: coefficients must be finite and nonnegative");
    }
  }
  if (std::abs(a * a + b * b - 1.0) > kNormTolerance) {
    throw std::invalid_argument("FamilyParams: a^2 + b^2 must equal 1 within 1e-12");
  }
  if (std::abs(c * c + d * d + f * f - 1.0) > kNormTolerance) {
    throw std::invalid_argument("FamilyParams: c^2 + d^2 + f^2 must equal 1 within 1e-12");
  }
}

FamilyParams FamilyParams::symmetric() {
  const double ghz = std::sqrt(0.5);
  const double w = std::sqrt(1.0 / 3.0);
  return FamilyParams(ghz, ghz, w, w, w);
}

double FamilyParams::s() const {
  if (is_ghz_product()) return std::numeric_limits<double>::infinity();
  return 4.0 * c_ * d_ * f_ / (a_ * a_ * b_);
}

PureState3Q FamilyParams::ghz_state() const {
  Amplitudes amps{};
  amps[basis_index(0, 0, 0)] = a_;
  amps[basis_index(1, 1, 1)] = b_;
  return PureState3Q(amps);
}

PureState3Q FamilyParams::w_state() const {
  Amplitudes amps{};
  amps[basis_index(0, 0, 1)] = c_;
  amps[basis_index(0, 1, 0)] = d_;
  amps[basis_index(1, 0, 0)] = f_;
  return PureState3Q(amps);
}

PureState3Q superposition_state(const FamilyParams& fam, double p, double phi) {
  require_unit_interval(p, "superposition_state");
  const double g = std::sqrt(p);
  const Complex w = -std::sqrt(1.0 - p) * std::polar(1.0, phi);
  Amplitudes amps{};
  amps[basis_index(0, 0, 0)] = g * fam.a();
  amps[basis_index(1, 1, 1)] = g * fam.b();
  amps[basis_index(0, 0, 1)] = w * fam.c();
  amps[basis_index(0, 1, 0)] = w * fam.d();
  amps[basis_index(1, 0, 0)] = w * fam.f();
  return PureState3Q(amps);
}

double char_tangle(const FamilyParams& fam, double p, double phi) {
  require_unit_interval(p, "char_tangle");
  const double a2b2 = fam.a() * fam.a() * fam.b() * fam.b();
  const double root = std::sqrt(p * (1.0 - p) * (1.0 - p) * (1.0 - p));
  const Complex inner = p * p * a2b2 - 4.0 * root * fam.bcdf() * std::polar(1.0, 3.0 * phi);
  return 4.0 * std::abs(inner);
}

DensityMatrix family_density(const FamilyParams& fam, double p) {
  require_unit_interval(p, "family_density");
  const DensityMatrix ghz = projector(fam.ghz_state());
  const DensityMatrix w = projector(fam.w_state());
  DensityMatrix rho{};
  for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = p * ghz[i] + (1.0 - p) * w[i];
  return rho;
}

}  // namespace tangleroof
