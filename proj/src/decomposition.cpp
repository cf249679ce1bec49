#include "tangleroof/decomposition.hpp"

#include <cmath>
#include <stdexcept>

namespace tangleroof {

Decomposition::Decomposition(std::vector<Member> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("Decomposition: no members");
  double total = 0.0;
  for (const auto& m : members_) {
    if (!(m.weight >= 0.0 && m.weight <= 1.0 + kWeightTolerance)) {
      throw std::invalid_argument("Decomposition: weight outside [0, 1]");
    }
    total += m.weight;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw std::invalid_argument("Decomposition: weights do not sum to 1");
  }
}

DensityMatrix Decomposition::density_matrix() const {
  DensityMatrix rho{};
  for (const auto& m : members_) {
    const DensityMatrix pi = projector(m.state);
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] += m.weight * pi[i];
  }
  return rho;
}

double Decomposition::average_tangle() const {
  double sum = 0.0;
  for (const auto& m : members_) sum += m.weight * three_tangle(m.state);
  return sum;
}

}  // namespace tangleroof
