#pragma once

#include <vector>

#include "tangleroof/pure_state.hpp"

namespace tangleroof {

/// A pure-state ensemble sum_j w_j |phi_j><phi_j|.
class Decomposition {
 public:
  static constexpr double kWeightTolerance = 1e-12;

  struct Member {
    double weight;
    PureState3Q state;
  };

  /// Weights must lie in [0, 1] and sum to one within kWeightTolerance.
  explicit Decomposition(std::vector<Member> members);

  const std::vector<Member>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  DensityMatrix density_matrix() const;

  /// sum_j w_j tau_3(phi_j)
  double average_tangle() const;

 private:
  std::vector<Member> members_;
};

}  // namespace tangleroof
