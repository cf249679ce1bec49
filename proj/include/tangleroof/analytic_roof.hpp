// Closed-form convex-roof three-tangle of rho(p) and its optimal
// decompositions.
//
// For a generic family (all coefficients nonzero) the roof is
//
//   0                    for 0  <= p <= p0
//   tau_3(p, 0)          for p0 <= p <= p1
//   tau_conv(p, p1)      for p1 <= p <= 1
//
// with p0 = s^{2/3} / (1 + s^{2/3}), p1 = max{p0, 1/2 + 1/(2 sqrt(1 + s^2))}
// and tau_conv the chord from (p1, t(p1)) to (1, tau_ghz).

#pragma once

#include <stdexcept>
#include <string_view>

#include "tangleroof/decomposition.hpp"
#include "tangleroof/family.hpp"

namespace tangleroof {

enum class RoofRegion { ZeroSimplex, CharacteristicCurve, ConvexifiedLeaf };

/// "ZERO", "CHAR" or "CONVEXIFIED".
std::string_view region_label(RoofRegion region);

/// Region boundaries, 0 <= p0 <= p1 <= 1.
struct RoofThresholds {
  double p0;
  double p1;
};

/// Raised when no family realizes a requested (s, tau_ghz) pair.
class InfeasibleParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

double p_zero(double s);

/// Stationary point of tau_conv(p, p1) in p1, ignoring the constraint p1 >= p0.
double p_one_unconstrained(double s);

/// max{p0, p1_unconstrained}; equal to p_zero(s) whenever s >= 2 sqrt(2).
double p_one(double s);

/// Thresholds for a family. A gGHZ product state gives {1, 1} (the roof
/// vanishes everywhere); s == 0 gives {0, 1}.
RoofThresholds roof_thresholds(const FamilyParams& fam);

/// p <= p0 is ZeroSimplex, p0 < p <= p1 is CharacteristicCurve, the rest is
/// ConvexifiedLeaf.
RoofRegion classify(const FamilyParams& fam, double p);

/// Signed characteristic curve t(p) = tau_ghz (p^2 - sqrt(p (1-p)^3) s),
/// evaluated as 4 p^2 a^2 b^2 - 16 sqrt(p (1-p)^3) bcdf so that it stays
/// finite when a*b == 0. Negative for 0 < p < p0.
double t_curve(const FamilyParams& fam, double p);

/// t''(p) on the open interval (0, 1).
double t_second(const FamilyParams& fam, double p);

/// t'''(p) on the open interval (0, 1); never positive.
double t_third(const FamilyParams& fam, double p);

/// The unique zero of t'' in (0, 1). Requires bcdf > 0.
double inflection_point(const FamilyParams& fam);

/// Average tangle of p1-anchored chord decompositions:
/// (p - p1)/(1 - p1) tau_ghz + (1 - p)/(1 - p1) t(p1). Uses the signed t, so
/// for p1 < p0 it describes the curve obtained when the constraint on p1 is
/// dropped.
double convexified_tangle(const FamilyParams& fam, double p, double p1);

/// Exact convex-roof three-tangle of rho(p).
double roof_value(const FamilyParams& fam, double p);

struct OptimalDecomposition {
  RoofRegion region;
  RoofThresholds thresholds;
  /// Set for families with a vanishing coefficient.
  bool degenerate;
  Decomposition decomposition;
};

/// Optimal decomposition of rho(p) for any valid family. Degenerate families
/// get the eigen-decomposition (gGHZ product state) or the three equal-weight
/// states |p, 2 pi k/3> (s == 0); both attain roof_value.
OptimalDecomposition optimal_decomposition(const FamilyParams& fam, double p);

/// The three-region construction, valid only for generic families; throws
/// std::invalid_argument otherwise.
OptimalDecomposition generic_optimal_decomposition(const FamilyParams& fam, double p);

/// A representative family with the given s and tau_ghz: a^2 >= 1/2, c = d.
/// Throws InfeasibleParameters when s a^2 b / 4 exceeds 3^{-3/2}.
FamilyParams solve_coefficients(double s, double tau_ghz);

}  // namespace tangleroof
