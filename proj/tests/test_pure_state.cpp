#include <doctest.h>

#include <algorithm>
#include <array>
#include <numbers>
#include <string_view>

#include "tangleroof/family.hpp"
#include "tangleroof/pure_state.hpp"
#include "test_support.hpp"

using namespace tangleroof;
using tangleroof::testing::Rng;

namespace {

std::size_t idx(std::string_view bits) {
  return basis_index(bits[0] - '0', bits[1] - '0', bits[2] - '0');
}

using Term = std::array<std::string_view, 4>;

// The d1, d2, d3 monomials written out one by one.
constexpr std::array<Term, 4> kD1 = {{{"000", "000", "111", "111"},
                                      {"001", "001", "110", "110"},
                                      {"010", "010", "101", "101"},
                                      {"100", "100", "011", "011"}}};
constexpr std::array<Term, 6> kD2 = {{{"000", "111", "011", "100"},
                                      {"000", "111", "101", "010"},
                                      {"000", "111", "110", "001"},
                                      {"011", "100", "101", "010"},
                                      {"011", "100", "110", "001"},
                                      {"101", "010", "110", "001"}}};
constexpr std::array<Term, 2> kD3 = {{{"000", "110", "101", "011"}, {"111", "001", "010", "100"}}};

template <std::size_t N>
Complex sum_terms(const Amplitudes& psi, const std::array<Term, N>& terms) {
  Complex total = 0.0;
  for (const auto& t : terms) {
    Complex prod = 1.0;
    for (auto bits : t) prod *= psi[idx(bits)];
    total += prod;
  }
  return total;
}

double term_by_term_tangle(const Amplitudes& psi) {
  return 4.0 * std::abs(sum_terms(psi, kD1) - 2.0 * sum_terms(psi, kD2) + 4.0 * sum_terms(psi, kD3));
}

// Second route: det(x0 A_0 + x1 A_1) = alpha x0^2 + beta x0 x1 + gamma x1^2
// with A_j the B,C slice at qubit A = j; the hyperdeterminant is the
// discriminant beta^2 - 4 alpha gamma and tau = 4 |hyperdeterminant|.
double discriminant_tangle(const Amplitudes& psi) {
  auto slice = [&](int j, int k, int l) { return psi[basis_index(j, k, l)]; };
  auto det = [](Complex m00, Complex m01, Complex m10, Complex m11) { return m00 * m11 - m01 * m10; };
  const Complex alpha = det(slice(0, 0, 0), slice(0, 0, 1), slice(0, 1, 0), slice(0, 1, 1));
  const Complex gamma = det(slice(1, 0, 0), slice(1, 0, 1), slice(1, 1, 0), slice(1, 1, 1));
  const Complex both = det(slice(0, 0, 0) + slice(1, 0, 0), slice(0, 0, 1) + slice(1, 0, 1),
                           slice(0, 1, 0) + slice(1, 1, 0), slice(0, 1, 1) + slice(1, 1, 1));
  const Complex beta = both - alpha - gamma;
  return 4.0 * std::abs(beta * beta - 4.0 * alpha * gamma);
}

}  // namespace

TEST_CASE("PureState3Q normalization policy") {
  Amplitudes amps{};
  amps[0] = 1.0 + 4e-10;  // norm^2 deviates by ~8e-10
  const PureState3Q s(amps);
  CHECK(norm_squared(s.amplitudes()) == doctest::Approx(1.0).epsilon(1e-15));

  amps[0] = 1.0 + 1e-6;
  CHECK_THROWS_AS(PureState3Q{amps}, std::invalid_argument);
  CHECK_THROWS_AS(PureState3Q::normalized(Amplitudes{}), std::invalid_argument);
  CHECK_THROWS_AS(PureState3Q::basis(8), std::out_of_range);
}

TEST_CASE("three_tangle reference states") {
  CHECK(three_tangle(PureState3Q::basis(0)) == 0.0);

  Amplitudes ghz{};
  ghz[0] = ghz[7] = std::sqrt(0.5);
  CHECK(three_tangle(PureState3Q(ghz)) == doctest::Approx(1.0).epsilon(1e-15));

  Rng rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    double c = u(rng), d = u(rng), f = u(rng);
    const double n = std::sqrt(c * c + d * d + f * f);
    Amplitudes w{};
    w[idx("001")] = c / n;
    w[idx("010")] = d / n;
    w[idx("100")] = f / n;
    CHECK(three_tangle(PureState3Q(w)) == 0.0);
  }
}

TEST_CASE("three_tangle agrees with the term-by-term and discriminant oracles") {
  Rng rng(20240);
  for (int i = 0; i < 500; ++i) {
    const PureState3Q s = tangleroof::testing::random_state(rng);
    const double tau = three_tangle(s);
    CHECK(std::abs(tau - term_by_term_tangle(s.amplitudes())) <= 1e-12);
    CHECK(std::abs(tau - discriminant_tangle(s.amplitudes())) <= 1e-12);
    CHECK(tau >= 0.0);
    CHECK(tau <= 1.0 + 1e-12);
  }
}

TEST_CASE("tangle_polynomial is homogeneous of degree four") {
  Rng rng(3);
  const PureState3Q s = tangleroof::testing::random_state(rng);
  Amplitudes scaled = s.amplitudes();
  for (auto& a : scaled) a *= 1.7;
  CHECK(tangle_polynomial(scaled) == doctest::Approx(std::pow(1.7, 4) * three_tangle(s)));
}

TEST_CASE("local unitaries") {
  Rng rng(11);
  const PureState3Q s = tangleroof::testing::random_state(rng);

  SUBCASE("identity leaves the state unchanged") {
    const PureState3Q out = apply_local_unitary(s, LocalUnitary::identity());
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(out[i] - s[i]) == 0.0);
  }

  SUBCASE("phase gate diag(e^{2 pi i/3}, 1) keeps gW untangled") {
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const Matrix2 gate{{{w, 0.0}, {0.0, 1.0}}};
    const LocalUnitary u(gate, gate, gate);
    const FamilyParams fam = FamilyParams::symmetric();
    CHECK(three_tangle(apply_local_unitary(fam.w_state(), u)) == doctest::Approx(0.0));
    // ...and shifts phi of the superposition states by a multiple of 2 pi / 3.
    const double before = three_tangle(superposition_state(fam, 0.8, 0.3));
    const double after = three_tangle(apply_local_unitary(superposition_state(fam, 0.8, 0.3), u));
    CHECK(std::abs(before - after) <= 1e-12);
  }

  SUBCASE("non-unitary factor is rejected") {
    const Matrix2 bad{{{1.0, 0.0}, {0.0, 1.0 + 1e-9}}};
    const Matrix2 id{{{1.0, 0.0}, {0.0, 1.0}}};
    CHECK_THROWS_AS(LocalUnitary(id, bad, id), std::invalid_argument);
  }

  SUBCASE("random local unitaries preserve the tangle") {
    for (int i = 0; i < 200; ++i) {
      const PureState3Q psi = tangleroof::testing::random_state(rng);
      const LocalUnitary u(tangleroof::testing::random_unitary(rng),
                           tangleroof::testing::random_unitary(rng),
                           tangleroof::testing::random_unitary(rng));
      CHECK(std::abs(three_tangle(apply_local_unitary(psi, u)) - three_tangle(psi)) <= 1e-10);
    }
  }
}

TEST_CASE("three_tangle is invariant under qubit permutations") {
  Rng rng(5);
  std::array<int, 3> perm{0, 1, 2};
  for (int i = 0; i < 50; ++i) {
    const PureState3Q psi = tangleroof::testing::random_state(rng);
    const double tau = three_tangle(psi);
    std::sort(perm.begin(), perm.end());
    int count = 0;
    do {
      CHECK(std::abs(three_tangle(permute_qubits(psi, perm)) - tau) <= 1e-12);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 6);
  }
  CHECK_THROWS_AS(permute_qubits(PureState3Q::basis(0), {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("permute_qubits moves amplitudes") {
  // |001> with qubits (A,B,C) -> (C,B,A) becomes |100>.
  const PureState3Q out = permute_qubits(PureState3Q::basis(idx("001")), {2, 1, 0});
  CHECK(out[idx("100")] == Complex(1.0));
}
