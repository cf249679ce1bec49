#include "tangleroof/pure_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tangleroof {

double norm_squared(const Amplitudes& amps) {
  double sum = 0.0;
  for (const auto& a : amps) sum += std::norm(a);
  return sum;
}

PureState3Q::PureState3Q(const Amplitudes& amps) : amps_(amps) {
  const double n2 = norm_squared(amps_);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("PureState3Q: squared norm " + std::to_string(n2) +
                                " deviates from 1 by more than 1e-9");
  }
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& a : amps_) a *= scale;
}

PureState3Q PureState3Q::normalized(const Amplitudes& amps) {
  const double n2 = norm_squared(amps);
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw std::invalid_argument("PureState3Q::normalized: zero or non-finite vector");
  }
  Amplitudes out = amps;
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& a : out) a *= scale;
  return PureState3Q(out, Trusted{});
}

PureState3Q PureState3Q::basis(std::size_t index) {
  if (index >= 8) throw std::out_of_range("PureState3Q::basis: index must be < 8");
  Amplitudes amps{};
  amps[index] = 1.0;
  return PureState3Q(amps, Trusted{});
}

Complex PureState3Q::inner(const PureState3Q& other) const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < 8; ++i) sum += std::conj(amps_[i]) * other.amps_[i];
  return sum;
}

double tangle_polynomial(const Amplitudes& psi) {
  const Complex& p000 = psi[0];
  const Complex& p001 = psi[1];
  const Complex& p010 = psi[2];
  const Complex& p011 = psi[3];
  const Complex& p100 = psi[4];
  const Complex& p101 = psi[5];
  const Complex& p110 = psi[6];
  const Complex& p111 = psi[7];

  const Complex d1 = p000 * p000 * p111 * p111 + p001 * p001 * p110 * p110 +
                     p010 * p010 * p101 * p101 + p100 * p100 * p011 * p011;

  const Complex g = p000 * p111;
  const Complex x = p011 * p100;
  const Complex y = p101 * p010;
  const Complex z = p110 * p001;
  const Complex d2 = g * x + g * y + g * z + x * y + x * z + y * z;

  const Complex d3 = p000 * p110 * p101 * p011 + p111 * p001 * p010 * p100;

  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double three_tangle(const PureState3Q& state) {
  return tangle_polynomial(state.amplitudes());
}

namespace {

double unitarity_defect(const Matrix2& u) {
  // max |(U^dagger U - I)_{ij}|
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex entry = std::conj(u[0][i]) * u[0][j] + std::conj(u[1][i]) * u[1][j];
      if (i == j) entry -= 1.0;
      worst = std::max(worst, std::abs(entry));
    }
  }
  return worst;
}

}  // namespace

LocalUnitary::LocalUnitary(const Matrix2& ua, const Matrix2& ub, const Matrix2& uc)
    : factors_{ua, ub, uc} {
  for (int q = 0; q < 3; ++q) {
    if (!(unitarity_defect(factors_[q]) <= kUnitaryTolerance)) {
      throw std::invalid_argument("LocalUnitary: factor " + std::to_string(q) +
                                  " is not unitary within 1e-12");
    }
  }
}

LocalUnitary LocalUnitary::identity() {
  const Matrix2 id{{{1.0, 0.0}, {0.0, 1.0}}};
  return LocalUnitary(id, id, id);
}

PureState3Q apply_local_unitary(const PureState3Q& state, const LocalUnitary& u) {
  Amplitudes cur = state.amplitudes();
  for (int q = 0; q < 3; ++q) {
    const int shift = 2 - q;
    const Matrix2& m = u.factor(q);
    Amplitudes next{};
    for (std::size_t idx = 0; idx < 8; ++idx) {
      const int bit = static_cast<int>((idx >> shift) & 1U);
      const std::size_t base = idx & ~(std::size_t{1} << shift);
      next[idx] = m[bit][0] * cur[base] + m[bit][1] * cur[base | (std::size_t{1} << shift)];
    }
    cur = next;
  }
  return PureState3Q::normalized(cur);
}

PureState3Q permute_qubits(const PureState3Q& state, const std::array<int, 3>& perm) {
  std::array<bool, 3> seen{};
  for (int p : perm) {
    if (p < 0 || p > 2 || seen[p]) throw std::invalid_argument("permute_qubits: not a permutation");
    seen[p] = true;
  }
  Amplitudes out{};
  for (std::size_t idx = 0; idx < 8; ++idx) {
    const int in_bits[3] = {static_cast<int>((idx >> 2) & 1U), static_cast<int>((idx >> 1) & 1U),
                            static_cast<int>(idx & 1U)};
    std::size_t dst = 0;
    for (int i = 0; i < 3; ++i) dst |= static_cast<std::size_t>(in_bits[perm[i]]) << (2 - i);
    out[dst] = state[idx];
  }
  return PureState3Q(out);
}

DensityMatrix projector(const PureState3Q& state) {
  DensityMatrix rho{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) rho[i * 8 + j] = state[i] * std::conj(state[j]);
  return rho;
}

double frobenius_distance(const DensityMatrix& lhs, const DensityMatrix& rhs) {
  double sum = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) sum += std::norm(lhs[i] - rhs[i]);
  return std::sqrt(sum);
}

}  // namespace tangleroof
