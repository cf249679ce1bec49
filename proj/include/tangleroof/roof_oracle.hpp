// Numerical convex-roof upper bounds for rank-2 three-qubit states.
//
// Every length-m decomposition of rho = l1 |e1><e1| + l2 |e2><e2| is
// generated by an m x 2 isometry V: member j is the unnormalized vector
// sum_i V_ji sqrt(l_i) |e_i>. Minimizing the average member tangle over V
// gives an upper bound on the convex roof; restarts and several m guard
// against local minima.

#pragma once

#include <cstdint>
#include <vector>

#include "tangleroof/analytic_roof.hpp"
#include "tangleroof/decomposition.hpp"
#include "tangleroof/nelder_mead.hpp"

namespace tangleroof {

class RankTwoState {
 public:
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kOverlapTolerance = 1e-10;

  RankTwoState(double lambda1, double lambda2, const PureState3Q& e1, const PureState3Q& e2);

  /// rho(p) with eigenvectors gGHZ (weight p) and gW (weight 1 - p).
  static RankTwoState family(const FamilyParams& fam, double p);

  /// State with the given 2x2 density matrix in the orthonormal basis
  /// {basis0, basis1}.
  static RankTwoState from_qubit_density(const PureState3Q& basis0, const PureState3Q& basis1,
                                         const Matrix2& rho);

  double lambda(int i) const { return i == 0 ? lambda1_ : lambda2_; }
  const PureState3Q& eigenvector(int i) const { return i == 0 ? e1_ : e2_; }

  DensityMatrix density_matrix() const;

 private:
  double lambda1_, lambda2_;
  PureState3Q e1_, e2_;
};

/// m x 2 complex matrix with orthonormal columns, 2 <= m <= 8.
class MixingMatrix {
 public:
  static constexpr double kIsometryTolerance = 1e-10;
  static constexpr int kMinRows = 2;
  static constexpr int kMaxRows = 8;

  using Row = std::array<Complex, 2>;

  explicit MixingMatrix(std::vector<Row> rows);

  static MixingMatrix identity();

  /// Gram-Schmidt on the columns of an arbitrary full-rank m x 2 matrix.
  static MixingMatrix orthonormalized(std::vector<Row> raw);

  int rows() const { return static_cast<int>(rows_.size()); }
  const Row& row(int j) const { return rows_[j]; }

 private:
  std::vector<Row> rows_;
};

/// Members with squared norm below kDropThreshold are dropped.
inline constexpr double kDropThreshold = 1e-14;

Decomposition decomposition_from_mixing(const RankTwoState& rho, const MixingMatrix& v);

struct OracleOptions {
  std::vector<int> sizes{3, 4, 5};
  int restarts = 32;
  std::uint64_t seed = 20240;
  NelderMeadOptions local{};
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct OracleResult {
  double value;
  Decomposition decomposition;
  int size;
  int restart;
};

/// Sub-seed of restart r at size m. Depends only on (seed, m, r), so a larger
/// configuration repeats every run of a smaller one.
std::uint64_t restart_seed(std::uint64_t seed, int size, int restart);

/// Best average tangle found over all (size, restart) runs. The result is
/// independent of thread scheduling; ties go to the smaller size, then the
/// smaller restart index.
OracleResult roof_upper_bound(const RankTwoState& rho, const OracleOptions& options = {});

/// Local minima of char_tangle(fam, p, .) on a uniform periodic grid over
/// [0, 2 pi). Values within 1e-14 of a neighbour count as ties, so a constant
/// profile reports every grid point.
std::vector<double> phi_scan(const FamilyParams& fam, double p, int grid);

/// Minimum of char_tangle(fam, p, .) over the same grid.
double char_tangle_min(const FamilyParams& fam, double p, int grid);

enum class GapFlag { Ok, Falsified, Loose };

std::string_view flag_label(GapFlag flag);

struct RoofReport {
  double p;
  RoofRegion region;
  double analytic;
  double oracle;
  double char_min;
  GapFlag flag;
};

struct VerifyOptions {
  int p_grid = 21;
  int phi_grid = 720;
  double tol_gap = 1e-3;
  OracleOptions oracle{};
};

/// Compares roof_value with roof_upper_bound on a uniform p grid over [0, 1].
/// FALSIFIED: oracle < analytic - tol_gap. LOOSE: oracle > analytic + tol_gap.
std::vector<RoofReport> verify_family(const FamilyParams& fam, const VerifyOptions& options = {});

}  // namespace tangleroof
