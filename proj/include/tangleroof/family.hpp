// The rank-2 family rho(p) = p |gGHZ><gGHZ| + (1-p) |gW><gW| and its
// superposition states |p, phi>.

#pragma once

#include "tangleroof/pure_state.hpp"

namespace tangleroof {

/// Coefficients of gGHZ = a|000> + b|111> and gW = c|001> + d|010> + f|100>.
///
/// All coefficients are nonnegative reals. Complex phases on the coefficients
/// only shift the relative phase phi of the superposition states, so they are
/// absorbed there rather than stored.
class FamilyParams {
 public:
  static constexpr double kNormTolerance = 1e-12;

  FamilyParams(double a, double b, double c, double d, double f);

  /// a = b = 1/sqrt(2), c = d = f = 1/sqrt(3).
  static FamilyParams symmetric();

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  double f() const { return f_; }

  /// s = 4cdf / (a^2 b). Infinite when a*b == 0 (see is_ghz_product()).
  double s() const;

  /// Three-tangle of the gGHZ state, 4 a^2 b^2.
  double tau_ghz() const { return 4.0 * a_ * a_ * b_ * b_; }

  /// b*c*d*f, the coefficient of the phase-dependent term of the
  /// characteristic tangle. Finite in every case, unlike s.
  double bcdf() const { return b_ * c_ * d_ * f_; }

  /// a == 0 or b == 0: the gGHZ state is a product state.
  bool is_ghz_product() const { return a_ == 0.0 || b_ == 0.0; }

  /// c*d*f == 0, i.e. s == 0.
  bool is_w_degenerate() const { return c_ == 0.0 || d_ == 0.0 || f_ == 0.0; }

  /// None of the coefficients vanishes.
  bool is_generic() const { return !is_ghz_product() && !is_w_degenerate(); }

  PureState3Q ghz_state() const;
  PureState3Q w_state() const;

  bool operator==(const FamilyParams&) const = default;

 private:
  double a_, b_, c_, d_, f_;
};

/// sqrt(p)|gGHZ> - sqrt(1-p) e^{i phi} |gW>.
PureState3Q superposition_state(const FamilyParams& fam, double p, double phi);

/// Closed-form three-tangle of superposition_state(fam, p, phi):
/// 4 |p^2 a^2 b^2 - 4 sqrt(p (1-p)^3) e^{3 i phi} bcdf|.
double char_tangle(const FamilyParams& fam, double p, double phi);

/// The density matrix rho(p).
DensityMatrix family_density(const FamilyParams& fam, double p);

/// Throws std::domain_error unless 0 <= p <= 1.
void require_unit_interval(double p, const char* what);

}  // namespace tangleroof
