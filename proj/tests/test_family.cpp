#include <doctest.h>

#include <numbers>

#include "tangleroof/analytic_roof.hpp"
#include "tangleroof/family.hpp"
#include "test_support.hpp"

using namespace tangleroof;
using tangleroof::testing::Rng;

TEST_CASE("FamilyParams validation") {
  CHECK_NOTHROW(FamilyParams::symmetric());
  CHECK_THROWS_AS(FamilyParams(1.0, 0.1, 1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams(1.0, 0.0, 0.5, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams(-1.0, 0.0, 1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_NOTHROW(FamilyParams(1.0, 0.0, 1.0, 0.0, 0.0));
}

TEST_CASE("FamilyParams derived quantities") {
  const FamilyParams sym = FamilyParams::symmetric();
  CHECK(sym.tau_ghz() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sym.s() == doctest::Approx(std::pow(2.0, 3.5) / std::pow(3.0, 1.5)).epsilon(1e-14));
  CHECK(sym.is_generic());

  const FamilyParams product_ghz(0.0, 1.0, 0.6, 0.8, 0.0);
  CHECK(product_ghz.is_ghz_product());
  CHECK(std::isinf(product_ghz.s()));
  CHECK(product_ghz.is_w_degenerate());

  const FamilyParams w_bell(0.6, 0.8, 0.0, 0.6, 0.8);
  CHECK(w_bell.s() == 0.0);
  CHECK(w_bell.tau_ghz() == doctest::Approx(4 * 0.36 * 0.64));
}

TEST_CASE("superposition_state endpoints") {
  const FamilyParams fam(0.6, 0.8, 0.48, 0.6, 0.64);
  const PureState3Q at_one = superposition_state(fam, 1.0, 1.234);
  const PureState3Q ghz = fam.ghz_state();
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(at_one[i] - ghz[i]) <= 1e-15);

  const PureState3Q at_zero = superposition_state(fam, 0.0, 0.0);
  const PureState3Q w = fam.w_state();
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(at_zero[i] + w[i]) <= 1e-15);
  CHECK(three_tangle(at_zero) == 0.0);

  CHECK_THROWS_AS(superposition_state(fam, 1.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(superposition_state(fam, -0.1, 0.0), std::domain_error);
}

TEST_CASE("char_tangle closed form") {
  const FamilyParams sym = FamilyParams::symmetric();
  const FamilyParams fam(0.6, 0.8, 0.48, 0.6, 0.64);

  CHECK(char_tangle(fam, 1.0, 0.7) == doctest::Approx(fam.tau_ghz()).epsilon(1e-15));
  CHECK(std::abs(char_tangle(fam, p_zero(fam.s()), 0.0)) <= 1e-15);

  CHECK(std::abs(char_tangle(sym, 0.5, 0.0) - three_tangle(superposition_state(sym, 0.5, 0.0))) <=
        1e-12);
  const double phi = std::numbers::pi / 5;
  CHECK(std::abs(char_tangle(sym, 0.8, phi) - three_tangle(superposition_state(sym, 0.8, phi))) <=
        1e-12);

  CHECK_THROWS_AS(char_tangle(fam, 1.01, 0.0), std::domain_error);
}

TEST_CASE("char_tangle equals three_tangle of the built state on a 50x50 grid") {
  Rng rng(99);
  for (const FamilyParams& fam : {FamilyParams::symmetric(),
                                  tangleroof::testing::random_generic_family(rng),
                                  FamilyParams(0.0, 1.0, 0.48, 0.6, 0.64),
                                  FamilyParams(0.6, 0.8, 0.0, 0.6, 0.8)}) {
    for (int i = 0; i < 50; ++i) {
      const double p = i / 49.0;
      for (int j = 0; j < 50; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / 50.0;
        const double closed = char_tangle(fam, p, phi);
        const double built = three_tangle(superposition_state(fam, p, phi));
        REQUIRE(std::abs(closed - built) <= 1e-12);
      }
    }
  }
}

TEST_CASE("char_tangle has period 2 pi / 3 in phi") {
  Rng rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const FamilyParams fam = tangleroof::testing::random_generic_family(rng);
    const double p = u(rng);
    const double phi = 2.0 * std::numbers::pi * u(rng);
    CHECK(std::abs(char_tangle(fam, p, phi) - char_tangle(fam, p, phi + 2.0 * std::numbers::pi / 3)) <=
          1e-12);
  }
}

TEST_CASE("family_density is the p-weighted eigen-mixture") {
  const FamilyParams fam(0.6, 0.8, 0.48, 0.6, 0.64);
  const DensityMatrix rho = family_density(fam, 0.3);
  double trace = 0.0;
  for (int i = 0; i < 8; ++i) trace += rho[i * 8 + i].real();
  CHECK(trace == doctest::Approx(1.0));
  CHECK(rho[0].real() == doctest::Approx(0.3 * 0.36));
  CHECK(rho[basis_index(0, 0, 1) * 8 + basis_index(0, 1, 0)].real() ==
        doctest::Approx(0.7 * 0.48 * 0.6));
}
