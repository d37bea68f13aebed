#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

#include "doctest.h"
#include "telebath/pauli.hpp"
#include "telebath/spin.hpp"

using namespace telebath;

TEST_CASE("HalfInt arithmetic is exact") {
  const HalfInt half = HalfInt::from_twice(1);
  CHECK(half.value() == 0.5);
  CHECK(half.multiplet_dim() == 2);
  CHECK(half.casimir() == 0.75);
  CHECK_FALSE(half.is_whole());

  const HalfInt two = HalfInt::whole(2);
  CHECK(two.twice() == 4);
  CHECK(two.multiplet_dim() == 5);
  CHECK(two.casimir() == 6.0);
  CHECK(two.is_whole());

  CHECK(half < two);
  CHECK(HalfInt::whole(1) == HalfInt::from_twice(2));
}

TEST_CASE("binomial coefficients are exact and guarded") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(22, 11) == 705432);
  // largest value the weight routines need
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK_THROWS_AS(binomial(5, 7), std::invalid_argument);
  CHECK_THROWS_AS(binomial(5, -1), std::invalid_argument);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(binomial(70, 35), std::invalid_argument);
}

TEST_CASE("spin operators satisfy the su(2) algebra") {
  for (const int twice : {1, 2, 3, 6}) {
    const HalfInt j = HalfInt::from_twice(twice);
    const SpinOperators s = spin_operators(j);
    const int d = j.multiplet_dim();
    REQUIRE(s.x.rows() == d);

    CHECK((s.x - s.x.adjoint()).norm() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK((s.y - s.y.adjoint()).norm() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK((s.z - s.z.adjoint()).norm() == doctest::Approx(0.0).epsilon(1e-14));

    const Eigen::MatrixXcd comm = s.x * s.y - s.y * s.x;
    CHECK((comm - Complex(0, 1) * s.z).norm() < 1e-13);

    const Eigen::MatrixXcd casimir = s.x * s.x + s.y * s.y + s.z * s.z;
    const Eigen::MatrixXcd expected =
        j.casimir() * Eigen::MatrixXcd::Identity(d, d);
    CHECK((casimir - expected).norm() < 1e-13);

    // basis convention: z is diagonal, m descending from j
    for (int m = 0; m < d; ++m)
      CHECK(s.z(m, m).real() == doctest::Approx(j.value() - m));
  }
}

namespace {

// Independent multiplicity count: diagonalize the collective Casimir
// I^2 = (sum_k sigma_k / 2)^2 on the full 2^n product space and count
// how many multiplets of each total spin appear.
std::int64_t counted_multiplicity(int n_spins, HalfInt total_spin) {
  const Eigen::Index dim = Eigen::Index(1) << n_spins;
  Eigen::MatrixXcd casimir = Eigen::MatrixXcd::Zero(dim, dim);
  for (int axis = 1; axis <= 3; ++axis) {
    Eigen::MatrixXcd collective = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < n_spins; ++k) {
      Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
      for (int site = 0; site < n_spins; ++site)
        op = kron(op, site == k ? Eigen::MatrixXcd(0.5 * pauli(axis))
                                : Eigen::MatrixXcd(
                                      Eigen::MatrixXcd::Identity(2, 2)));
      collective += op;
    }
    casimir += collective * collective;
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(casimir);
  std::int64_t states = 0;
  for (Eigen::Index i = 0; i < dim; ++i)
    if (std::abs(solver.eigenvalues()(i) - total_spin.casimir()) < 1e-8)
      ++states;
  REQUIRE(states % total_spin.multiplet_dim() == 0);
  return states / total_spin.multiplet_dim();
}

}  // namespace

TEST_CASE("sector multiplicities match a full-space Casimir count") {
  for (const int n : {2, 3, 4, 5}) {
    for (int twice = n % 2; twice <= n; twice += 2) {
      const HalfInt spin = HalfInt::from_twice(twice);
      CHECK(sector_multiplicity(n, spin) == counted_multiplicity(n, spin));
    }
  }
  // closed-form spot checks
  CHECK(sector_multiplicity(4, HalfInt::whole(2)) == 1);
  CHECK(sector_multiplicity(4, HalfInt::whole(1)) == 3);
  CHECK(sector_multiplicity(4, HalfInt::whole(0)) == 2);
  CHECK(sector_multiplicity(22, HalfInt::whole(11)) == 1);
}

TEST_CASE("sector multiplicity rejects invalid quantum numbers") {
  CHECK_THROWS_AS(sector_multiplicity(4, HalfInt::from_twice(1)),
                  std::invalid_argument);  // parity mismatch
  CHECK_THROWS_AS(sector_multiplicity(4, HalfInt::whole(3)),
                  std::invalid_argument);  // I > n/2
  CHECK_THROWS_AS(sector_multiplicity(0, HalfInt::whole(0)),
                  std::invalid_argument);
}

TEST_CASE("unpolarized weights reproduce the exact n = 4 table") {
  const auto weights = unpolarized_sector_weights(4);
  REQUIRE(weights.size() == 3);
  CHECK(weights[0].first == HalfInt::whole(0));
  CHECK(weights[0].second == doctest::Approx(2.0 / 16.0).epsilon(1e-15));
  CHECK(weights[1].second == doctest::Approx(9.0 / 16.0).epsilon(1e-15));
  CHECK(weights[2].second == doctest::Approx(5.0 / 16.0).epsilon(1e-15));
}

TEST_CASE("sector weights satisfy completeness and the second moment") {
  for (int n = 2; n <= 22; n += 2) {
    const auto weights = unpolarized_sector_weights(n);
    double total = 0.0;
    double casimir_moment = 0.0;
    for (const auto& [spin, weight] : weights) {
      total += weight;
      casimir_moment += weight * spin.casimir();
    }
    CHECK(std::abs(total - 1.0) < 1e-14);
    CHECK(std::abs(casimir_moment - 0.75 * n) < 1e-12 * n);
  }
}

TEST_CASE("polarized weights follow I^2 exp(-2 I^2 / n)") {
  const auto weights = polarized_sector_weights(22);
  double total = 0.0;
  double w1 = 0.0, w2 = 0.0;
  for (const auto& [spin, weight] : weights) {
    total += weight;
    CHECK(weight >= 0.0);
    if (spin == HalfInt::whole(0)) CHECK(weight == 0.0);
    if (spin == HalfInt::whole(1)) w1 = weight;
    if (spin == HalfInt::whole(2)) w2 = weight;
  }
  CHECK(std::abs(total - 1.0) < 1e-14);
  // ratio of consecutive weights is (I2/I1)^2 exp(-2 (I2^2 - I1^2) / n)
  CHECK(w2 / w1 == doctest::Approx(4.0 * std::exp(-3.0 / 11.0)).epsilon(1e-13));
}

TEST_CASE("bath factories produce validated specs") {
  const BathSpec unpolarized = unpolarized_bath(22);
  CHECK(unpolarized.n_spins == 22);
  CHECK(unpolarized.model == BathModel::Unpolarized);
  CHECK(unpolarized.sectors.size() == 12);
  CHECK_NOTHROW(validate_bath(unpolarized));
  for (const SectorSpec& sector : unpolarized.sectors)
    CHECK(sector.internal_state == SectorState::Unpolarized);

  const BathSpec polarized = polarized_bath(22);
  CHECK(polarized.model == BathModel::PolarizedGaussianI2);
  CHECK_NOTHROW(validate_bath(polarized));
  for (const SectorSpec& sector : polarized.sectors)
    CHECK(sector.internal_state == SectorState::MaxPolarizedZ);

  // sectors ascend in total spin
  for (std::size_t i = 1; i < unpolarized.sectors.size(); ++i)
    CHECK(unpolarized.sectors[i - 1].total_spin <
          unpolarized.sectors[i].total_spin);
}

TEST_CASE("validate_bath rejects tampered weights") {
  BathSpec bath = unpolarized_bath(6);
  bath.sectors[0].weight += 1e-3;
  CHECK_THROWS_AS(validate_bath(bath), std::invalid_argument);
}

TEST_CASE("bath size guard") {
  CHECK_THROWS_AS(unpolarized_sector_weights(64), std::invalid_argument);
  CHECK_THROWS_AS(unpolarized_sector_weights(-2), std::invalid_argument);
}

TEST_CASE("bath model names round-trip") {
  CHECK(bath_model_from_string("unpolarized") == BathModel::Unpolarized);
  CHECK(bath_model_from_string("polarized") ==
        BathModel::PolarizedGaussianI2);
  CHECK(to_string(BathModel::Unpolarized) == "unpolarized");
  CHECK(to_string(BathModel::PolarizedGaussianI2) == "polarized");
  CHECK_THROWS_AS(bath_model_from_string("thermal"), std::invalid_argument);
}
