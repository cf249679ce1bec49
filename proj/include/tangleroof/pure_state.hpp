// Three-qubit pure states, the three-tangle and local unitary action.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace tangleroof {

using Complex = std::complex<double>;

/// Raw amplitude vector in computational-basis order 000, 001, ..., 111.
/// Bit 2 of the index is qubit A, bit 1 is qubit B, bit 0 is qubit C.
using Amplitudes = std::array<Complex, 8>;

/// Index of basis state |jkl>.
constexpr std::size_t basis_index(int j, int k, int l) {
  return static_cast<std::size_t>((j << 2) | (k << 1) | l);
}

/// Squared Euclidean norm of an amplitude vector.
double norm_squared(const Amplitudes& amps);

/// Normalized three-qubit pure state.
///
/// Construction renormalizes inputs whose squared norm deviates from one by at
/// most kNormTolerance and rejects anything further off.
class PureState3Q {
 public:
  static constexpr double kNormTolerance = 1e-9;

  explicit PureState3Q(const Amplitudes& amps);

  /// Scales an arbitrary nonzero vector onto the unit sphere.
  static PureState3Q normalized(const Amplitudes& amps);

  /// The computational basis state |index>.
  static PureState3Q basis(std::size_t index);

  const Amplitudes& amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  /// <this|other>
  Complex inner(const PureState3Q& other) const;

 private:
  struct Trusted {};
  PureState3Q(const Amplitudes& amps, Trusted) : amps_(amps) {}

  Amplitudes amps_;
};

/// The polynomial 4|d1 - 2 d2 + 4 d3| evaluated on a raw vector. It is
/// homogeneous of degree four, so for a nonzero vector v the tangle of the
/// normalized state is tangle_polynomial(v) / |v|^4.
double tangle_polynomial(const Amplitudes& amps);

/// Three-tangle of a normalized pure state, in [0, 1].
double three_tangle(const PureState3Q& state);

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Product operator U_A (x) U_B (x) U_C; every factor unitary within 1e-12.
class LocalUnitary {
 public:
  static constexpr double kUnitaryTolerance = 1e-12;

  LocalUnitary(const Matrix2& ua, const Matrix2& ub, const Matrix2& uc);

  static LocalUnitary identity();

  const Matrix2& factor(int qubit) const { return factors_[qubit]; }

 private:
  std::array<Matrix2, 3> factors_;
};

PureState3Q apply_local_unitary(const PureState3Q& state, const LocalUnitary& u);

/// Reorders tensor factors: output qubit i is input qubit perm[i].
PureState3Q permute_qubits(const PureState3Q& state, const std::array<int, 3>& perm);

/// 8x8 density matrix, row-major.
using DensityMatrix = std::array<Complex, 64>;

DensityMatrix projector(const PureState3Q& state);

double frobenius_distance(const DensityMatrix& lhs, const DensityMatrix& rhs);

}  // namespace tangleroof
