#include "tangleroof/analytic_roof.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tangleroof/bisection.hpp"

namespace tangleroof {

namespace {

constexpr double kInflectionTolerance = 1e-12;
constexpr double kInflectionMargin = 1e-9;
constexpr double kCoefficientTolerance = 1e-12;

// Largest c d f on the unit sphere c^2 + d^2 + f^2 = 1.
const double kMaxCdf = 1.0 / (3.0 * std::sqrt(3.0));

void require_s(double s, const char* what) {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw std::domain_error(std::string(what) + ": s must be finite and nonnegative");
  }
}

void require_open_interval(double p, const char* what) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error(std::string(what) + ": p must lie strictly inside (0, 1)");
  }
}

// sqrt(p (1-p)^3)
double chord_root(double p) {
  const double q = 1.0 - p;
  return std::sqrt(p * q * q * q);
}

void append_rho_delta(std::vector<Decomposition::Member>& out, const FamilyParams& fam,
                      double p, double total_weight) {
  if (total_weight <= 0.0) return;
  for (int k = 0; k < 3; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / 3.0;
    out.push_back({total_weight / 3.0, superposition_state(fam, p, phi)});
  }
}

}  // namespace

std::string_view region_label(RoofRegion region) {
  switch (region) {
    case RoofRegion::ZeroSimplex:
      return "ZERO";
    case RoofRegion::CharacteristicCurve:
      return "CHAR";
    case RoofRegion::ConvexifiedLeaf:
      return "CONVEXIFIED";
  }
  return "UNKNOWN";
}

double p_zero(double s) {
  require_s(s, "p_zero");
  const double s23 = std::cbrt(s * s);
  return s23 / (1.0 + s23);
}

double p_one_unconstrained(double s) {
  require_s(s, "p_one_unconstrained");
  return 0.5 + 0.5 / std::sqrt(1.0 + s * s);
}

double p_one(double s) {
  const double p0 = p_zero(s);
  // Above 2 sqrt(2) the unconstrained optimum lies below p0 and the minimum
  // sits on the border.
  if (s >= 2.0 * std::numbers::sqrt2) return p0;
  return std::max(p0, p_one_unconstrained(s));
}

RoofThresholds roof_thresholds(const FamilyParams& fam) {
  if (fam.is_ghz_product()) return {1.0, 1.0};
  if (fam.is_w_degenerate()) return {0.0, 1.0};
  const double s = fam.s();
  return {p_zero(s), p_one(s)};
}

RoofRegion classify(const FamilyParams& fam, double p) {
  require_unit_interval(p, "classify");
  const RoofThresholds th = roof_thresholds(fam);
  if (p <= th.p0) return RoofRegion::ZeroSimplex;
  if (p <= th.p1) return RoofRegion::CharacteristicCurve;
  return RoofRegion::ConvexifiedLeaf;
}

double t_curve(const FamilyParams& fam, double p) {
  require_unit_interval(p, "t_curve");
  return fam.tau_ghz() * p * p - 16.0 * fam.bcdf() * chord_root(p);
}

double t_second(const FamilyParams& fam, double p) {
  require_open_interval(p, "t_second");
  const double g2 = (8.0 * p * p - 4.0 * p - 1.0) / (4.0 * p * std::sqrt(p * (1.0 - p)));
  return 2.0 * fam.tau_ghz() - 16.0 * fam.bcdf() * g2;
}

double t_third(const FamilyParams& fam, double p) {
  require_open_interval(p, "t_third");
  return -48.0 * fam.bcdf() / (8.0 * p * p * chord_root(p));
}

double inflection_point(const FamilyParams& fam) {
  if (!(fam.bcdf() > 0.0)) {
    throw std::domain_error("inflection_point: t'' has no zero when s == 0 or b == 0");
  }
  return bisect([&](double p) { return t_second(fam, p); }, kInflectionMargin,
                1.0 - kInflectionMargin, kInflectionTolerance);
}

double convexified_tangle(const FamilyParams& fam, double p, double p1) {
  require_unit_interval(p, "convexified_tangle");
  require_unit_interval(p1, "convexified_tangle");
  if (p1 >= 1.0) throw std::domain_error("convexified_tangle: p1 must be < 1");
  return (p - p1) / (1.0 - p1) * fam.tau_ghz() + (1.0 - p) / (1.0 - p1) * t_curve(fam, p1);
}

double roof_value(const FamilyParams& fam, double p) {
  require_unit_interval(p, "roof_value");
  // Exact-zero dispatch: near-zero coefficients take the generic path.
  if (fam.is_ghz_product()) return 0.0;
  if (fam.is_w_degenerate()) return fam.tau_ghz() * p * p;

  const RoofThresholds th = roof_thresholds(fam);
  if (p <= th.p0) return 0.0;
  if (p <= th.p1) return char_tangle(fam, p, 0.0);
  // t(p1) = tau_3(p1, 0) since p1 >= p0; the modulus keeps rounding at
  // p1 == p0 from producing a negative roof.
  return (p - th.p1) / (1.0 - th.p1) * fam.tau_ghz() +
         (1.0 - p) / (1.0 - th.p1) * char_tangle(fam, th.p1, 0.0);
}

OptimalDecomposition generic_optimal_decomposition(const FamilyParams& fam, double p) {
  require_unit_interval(p, "generic_optimal_decomposition");
  if (!fam.is_generic()) {
    throw std::invalid_argument(
        "generic_optimal_decomposition: family has a vanishing coefficient");
  }
  const RoofThresholds th = roof_thresholds(fam);
  const RoofRegion region = classify(fam, p);
  std::vector<Decomposition::Member> members;
  switch (region) {
    case RoofRegion::ZeroSimplex:
      append_rho_delta(members, fam, th.p0, p / th.p0);
      if (th.p0 - p > 0.0) members.push_back({(th.p0 - p) / th.p0, fam.w_state()});
      break;
    case RoofRegion::CharacteristicCurve:
      append_rho_delta(members, fam, p, 1.0);
      break;
    case RoofRegion::ConvexifiedLeaf: {
      const double alpha = (p - th.p1) / (1.0 - th.p1);
      append_rho_delta(members, fam, th.p1, (1.0 - p) / (1.0 - th.p1));
      if (alpha > 0.0) members.push_back({alpha, fam.ghz_state()});
      break;
    }
  }
  return {region, th, false, Decomposition(std::move(members))};
}

OptimalDecomposition optimal_decomposition(const FamilyParams& fam, double p) {
  require_unit_interval(p, "optimal_decomposition");
  if (fam.is_generic()) return generic_optimal_decomposition(fam, p);

  const RoofThresholds th = roof_thresholds(fam);
  std::vector<Decomposition::Member> members;
  if (fam.is_ghz_product()) {
    if (p > 0.0) members.push_back({p, fam.ghz_state()});
    if (p < 1.0) members.push_back({1.0 - p, fam.w_state()});
  } else {
    // s == 0: tau_3(p, phi) = tau_ghz p^2 for every phi.
    append_rho_delta(members, fam, p, 1.0);
  }
  return {classify(fam, p), th, true, Decomposition(std::move(members))};
}

FamilyParams solve_coefficients(double s, double tau_ghz) {
  require_s(s, "solve_coefficients");
  if (!(tau_ghz > 0.0 && tau_ghz <= 1.0)) {
    throw std::domain_error("solve_coefficients: tau_ghz must lie in (0, 1]");
  }
  // 4 a^2 b^2 = tau with a^2 >= 1/2.
  const double root = std::sqrt(1.0 - tau_ghz);
  const double b2 = tau_ghz / (2.0 * (1.0 + root));
  const double a2 = 1.0 - b2;
  const double a = std::sqrt(a2);
  const double b = std::sqrt(b2);

  const double target = s * a2 * b / 4.0;
  if (target > kMaxCdf * (1.0 + 1e-12)) {
    throw InfeasibleParameters("solve_coefficients: s = " + std::to_string(s) +
                               " requires cdf = " + std::to_string(target) +
                               " above the maximum 3^(-3/2)");
  }
  if (target >= kMaxCdf) {
    const double w = std::sqrt(1.0 / 3.0);
    return FamilyParams(a, b, w, w, w);
  }
  // c = d, f = sqrt(1 - 2 c^2); c^2 f increases on [0, 1/sqrt(3)].
  const auto excess = [&](double c) { return c * c * std::sqrt(1.0 - 2.0 * c * c) - target; };
  const double c = bisect(excess, 0.0, std::sqrt(1.0 / 3.0), kCoefficientTolerance);
  const double f = std::sqrt(1.0 - 2.0 * c * c);
  return FamilyParams(a, b, c, c, f);
}

}  // namespace tangleroof
