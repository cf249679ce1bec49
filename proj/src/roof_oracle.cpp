#include "tangleroof/roof_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace tangleroof {

RankTwoState::RankTwoState(double lambda1, double lambda2, const PureState3Q& e1,
                           const PureState3Q& e2)
    : lambda1_(lambda1), lambda2_(lambda2), e1_(e1), e2_(e2) {
  if (!(lambda1 >= 0.0 && lambda2 >= 0.0)) {
    throw std::invalid_argument("RankTwoState: eigenvalues must be nonnegative");
  }
  if (std::abs(lambda1 + lambda2 - 1.0) > kTraceTolerance) {
    throw std::invalid_argument("RankTwoState: eigenvalues must sum to 1");
  }
  if (std::abs(e1.inner(e2)) > kOverlapTolerance) {
    throw std::invalid_argument("RankTwoState: eigenvectors are not orthogonal");
  }
}

RankTwoState RankTwoState::family(const FamilyParams& fam, double p) {
  require_unit_interval(p, "RankTwoState::family");
  return RankTwoState(p, 1.0 - p, fam.ghz_state(), fam.w_state());
}

RankTwoState RankTwoState::from_qubit_density(const PureState3Q& basis0,
                                              const PureState3Q& basis1, const Matrix2& rho) {
  const double r00 = rho[0][0].real();
  const double r11 = rho[1][1].real();
  const Complex r01 = rho[0][1];
  if (std::abs(rho[1][0] - std::conj(r01)) > 1e-12 || std::abs(rho[0][0].imag()) > 1e-12 ||
      std::abs(rho[1][1].imag()) > 1e-12) {
    throw std::invalid_argument("RankTwoState::from_qubit_density: matrix is not Hermitian");
  }
  const double half_gap = std::sqrt(0.25 * (r00 - r11) * (r00 - r11) + std::norm(r01));
  const double mean = 0.5 * (r00 + r11);
  const double upper = mean + half_gap;
  const double lower = mean - half_gap;
  if (lower < -1e-12) {
    throw std::invalid_argument("RankTwoState::from_qubit_density: matrix is not positive");
  }

  // Eigenvector of the larger eigenvalue in the {basis0, basis1} frame.
  Complex v0, v1;
  if (std::abs(r01) > 0.0) {
    if (r00 >= r11) {
      v0 = upper - r11;
      v1 = std::conj(r01);
    } else {
      v0 = r01;
      v1 = upper - r00;
    }
    const double n = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= n;
    v1 /= n;
  } else if (r00 >= r11) {
    v0 = 1.0;
    v1 = 0.0;
  } else {
    v0 = 0.0;
    v1 = 1.0;
  }
  Amplitudes e1{}, e2{};
  for (std::size_t i = 0; i < 8; ++i) {
    e1[i] = v0 * basis0[i] + v1 * basis1[i];
    e2[i] = -std::conj(v1) * basis0[i] + std::conj(v0) * basis1[i];
  }
  return RankTwoState(upper, std::max(lower, 0.0), PureState3Q::normalized(e1),
                      PureState3Q::normalized(e2));
}

DensityMatrix RankTwoState::density_matrix() const {
  const DensityMatrix a = projector(e1_);
  const DensityMatrix b = projector(e2_);
  DensityMatrix rho{};
  for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = lambda1_ * a[i] + lambda2_ * b[i];
  return rho;
}

MixingMatrix::MixingMatrix(std::vector<Row> rows) : rows_(std::move(rows)) {
  const int m = static_cast<int>(rows_.size());
  if (m < kMinRows || m > kMaxRows) {
    throw std::invalid_argument("MixingMatrix: row count must be in [2, 8]");
  }
  Complex g00 = 0.0, g01 = 0.0, g11 = 0.0;
  for (const auto& r : rows_) {
    g00 += std::norm(r[0]);
    g11 += std::norm(r[1]);
    g01 += std::conj(r[0]) * r[1];
  }
  if (std::abs(g00 - 1.0) > kIsometryTolerance || std::abs(g11 - 1.0) > kIsometryTolerance ||
      std::abs(g01) > kIsometryTolerance) {
    throw std::invalid_argument("MixingMatrix: columns are not orthonormal");
  }
}

MixingMatrix MixingMatrix::identity() { return MixingMatrix({{1.0, 0.0}, {0.0, 1.0}}); }

MixingMatrix MixingMatrix::orthonormalized(std::vector<Row> raw) {
  double n0 = 0.0;
  for (const auto& r : raw) n0 += std::norm(r[0]);
  if (!(n0 > 0.0)) throw std::invalid_argument("MixingMatrix::orthonormalized: zero column");
  n0 = std::sqrt(n0);
  Complex overlap = 0.0;
  for (auto& r : raw) {
    r[0] /= n0;
    overlap += std::conj(r[0]) * r[1];
  }
  double n1 = 0.0;
  for (auto& r : raw) {
    r[1] -= overlap * r[0];
    n1 += std::norm(r[1]);
  }
  if (!(n1 > 1e-24)) throw std::invalid_argument("MixingMatrix::orthonormalized: rank deficient");
  n1 = std::sqrt(n1);
  for (auto& r : raw) r[1] /= n1;
  return MixingMatrix(std::move(raw));
}

Decomposition decomposition_from_mixing(const RankTwoState& rho, const MixingMatrix& v) {
  const double s0 = std::sqrt(rho.lambda(0));
  const double s1 = std::sqrt(rho.lambda(1));
  const auto& e0 = rho.eigenvector(0);
  const auto& e1 = rho.eigenvector(1);
  std::vector<Decomposition::Member> members;
  for (int j = 0; j < v.rows(); ++j) {
    const Complex c0 = v.row(j)[0] * s0;
    const Complex c1 = v.row(j)[1] * s1;
    Amplitudes amps;
    for (std::size_t i = 0; i < 8; ++i) amps[i] = c0 * e0[i] + c1 * e1[i];
    const double w = norm_squared(amps);
    if (w < kDropThreshold) continue;
    members.push_back({w, PureState3Q::normalized(amps)});
  }
  return Decomposition(std::move(members));
}

namespace {

using RawRows = std::vector<MixingMatrix::Row>;

RawRows rows_from_params(std::span<const double> x) {
  const std::size_t m = x.size() / 4;
  RawRows rows(m);
  for (std::size_t j = 0; j < m; ++j) {
    rows[j][0] = Complex(x[4 * j], x[4 * j + 1]);
    rows[j][1] = Complex(x[4 * j + 2], x[4 * j + 3]);
  }
  return rows;
}

// Average member tangle for the isometry obtained by orthonormalizing the
// raw parameters. Uses w_j tau(psi_j / |psi_j|) = tangle_polynomial(psi_j) / w_j.
class MixingObjective {
 public:
  explicit MixingObjective(const RankTwoState& rho) {
    const double s0 = std::sqrt(rho.lambda(0));
    const double s1 = std::sqrt(rho.lambda(1));
    for (std::size_t i = 0; i < 8; ++i) {
      u0_[i] = s0 * rho.eigenvector(0)[i];
      u1_[i] = s1 * rho.eigenvector(1)[i];
    }
  }

  double operator()(std::span<const double> x) const {
    constexpr int kMax = MixingMatrix::kMaxRows;
    const std::size_t m = x.size() / 4;
    std::array<Complex, kMax> col0, col1;
    double n0 = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      col0[j] = Complex(x[4 * j], x[4 * j + 1]);
      col1[j] = Complex(x[4 * j + 2], x[4 * j + 3]);
      n0 += std::norm(col0[j]);
    }
    if (!(n0 > 1e-24)) return kPenalty;
    const double inv0 = 1.0 / std::sqrt(n0);
    Complex overlap = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      col0[j] *= inv0;
      overlap += std::conj(col0[j]) * col1[j];
    }
    double n1 = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      col1[j] -= overlap * col0[j];
      n1 += std::norm(col1[j]);
    }
    if (!(n1 > 1e-24)) return kPenalty;
    const double inv1 = 1.0 / std::sqrt(n1);

    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const Complex c0 = col0[j];
      const Complex c1 = col1[j] * inv1;
      Amplitudes psi;
      for (std::size_t i = 0; i < 8; ++i) psi[i] = c0 * u0_[i] + c1 * u1_[i];
      const double w = norm_squared(psi);
      if (w < kDropThreshold) continue;
      total += tangle_polynomial(psi) / w;
    }
    return total;
  }

 private:
  // Above any attainable average tangle.
  static constexpr double kPenalty = 2.0;
  Amplitudes u0_{}, u1_{};
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct RunResult {
  double value;
  std::vector<double> params;
};

RunResult run_restart(const MixingObjective& objective, int size, std::uint64_t sub_seed,
                      const NelderMeadOptions& local) {
  std::mt19937_64 rng(sub_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x0(static_cast<std::size_t>(4 * size));
  for (double& v : x0) v = gauss(rng);
  const auto result = nelder_mead(
      [&](std::span<const double> x) { return objective(x); }, std::move(x0), local);
  return {result.value, result.x};
}

}  // namespace

std::uint64_t restart_seed(std::uint64_t seed, int size, int restart) {
  return splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(size) << 32) |
                                      static_cast<std::uint32_t>(restart)));
}

OracleResult roof_upper_bound(const RankTwoState& rho, const OracleOptions& options) {
  if (options.restarts < 1) throw std::invalid_argument("roof_upper_bound: restarts must be >= 1");
  const std::set<int> size_set(options.sizes.begin(), options.sizes.end());
  if (size_set.empty()) throw std::invalid_argument("roof_upper_bound: no decomposition sizes");
  for (int m : size_set) {
    if (m < MixingMatrix::kMinRows || m > MixingMatrix::kMaxRows) {
      throw std::invalid_argument("roof_upper_bound: sizes must lie in [2, 8]");
    }
  }

  struct Task {
    int size;
    int restart;
  };
  std::vector<Task> tasks;
  for (int m : size_set)
    for (int r = 0; r < options.restarts; ++r) tasks.push_back({m, r});

  const MixingObjective objective(rho);
  std::vector<std::optional<RunResult>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      results[i] = run_restart(objective, t.size, restart_seed(options.seed, t.size, t.restart),
                               options.local);
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(tasks.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < tasks.size(); ++i) {
    if (results[i]->value < results[best]->value) best = i;
  }
  Decomposition decomposition = decomposition_from_mixing(
      rho, MixingMatrix::orthonormalized(rows_from_params(results[best]->params)));
  const double value = decomposition.average_tangle();
  return {value, std::move(decomposition), tasks[best].size, tasks[best].restart};
}

namespace {

std::vector<double> char_profile(const FamilyParams& fam, double p, int grid) {
  if (grid < 12) throw std::invalid_argument("phi_scan: grid must have at least 12 points");
  std::vector<double> values(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    values[i] = char_tangle(fam, p, 2.0 * std::numbers::pi * i / grid);
  }
  return values;
}

}  // namespace

std::vector<double> phi_scan(const FamilyParams& fam, double p, int grid) {
  constexpr double kTie = 1e-14;
  const auto values = char_profile(fam, p, grid);
  std::vector<double> minima;
  for (int i = 0; i < grid; ++i) {
    const double prev = values[(i + grid - 1) % grid];
    const double next = values[(i + 1) % grid];
    if (values[i] <= prev + kTie && values[i] <= next + kTie) {
      minima.push_back(2.0 * std::numbers::pi * i / grid);
    }
  }
  return minima;
}

double char_tangle_min(const FamilyParams& fam, double p, int grid) {
  const auto values = char_profile(fam, p, grid);
  return *std::min_element(values.begin(), values.end());
}

std::string_view flag_label(GapFlag flag) {
  switch (flag) {
    case GapFlag::Ok:
      return "OK";
    case GapFlag::Falsified:
      return "FALSIFIED";
    case GapFlag::Loose:
      return "LOOSE";
  }
  return "UNKNOWN";
}

std::vector<RoofReport> verify_family(const FamilyParams& fam, const VerifyOptions& options) {
  if (options.p_grid < 2) throw std::invalid_argument("verify_family: p grid needs 2 points");
  std::vector<RoofReport> rows;
  rows.reserve(static_cast<std::size_t>(options.p_grid));
  for (int i = 0; i < options.p_grid; ++i) {
    const double p = static_cast<double>(i) / (options.p_grid - 1);
    const double analytic = roof_value(fam, p);
    const double oracle = roof_upper_bound(RankTwoState::family(fam, p), options.oracle).value;
    GapFlag flag = GapFlag::Ok;
    if (oracle < analytic - options.tol_gap) {
      flag = GapFlag::Falsified;
    } else if (oracle > analytic + options.tol_gap) {
      flag = GapFlag::Loose;
    }
    rows.push_back({p, classify(fam, p), analytic, oracle,
                    char_tangle_min(fam, p, options.phi_grid), flag});
  }
  return rows;
}

}  // namespace tangleroof
