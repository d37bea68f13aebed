#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "doctest.h"
#include "telebath/teleport.hpp"

using namespace telebath;

namespace {

BlochVector random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  BlochVector v(gauss(rng), gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

}  // namespace

TEST_CASE("corrections are proper signed-diagonal rotations") {
  for (const BellLabel shared : kBellLabels) {
    for (const BellLabel measured : kBellLabels) {
      const Eigen::Matrix3d c = bob_correction(shared, measured);
      CHECK((c * c.transpose() - Eigen::Matrix3d::Identity()).norm() < 1e-15);
      CHECK(c.determinant() == doctest::Approx(1.0).epsilon(1e-15));
      CHECK((c - Eigen::Matrix3d(c.diagonal().asDiagonal())).norm() < 1e-15);
    }
  }
}

TEST_CASE("an undisturbed protocol teleports exactly for every pair") {
  const TwoQubitChannel identity = TwoQubitChannel::identity();
  for (const BellLabel shared : kBellLabels) {
    for (const BellLabel measured : kBellLabels) {
      for (const AveragingMode mode :
           {AveragingMode::ProbabilityWeighted, AveragingMode::Conditional}) {
        const ChannelTransfer transfer =
            effective_transfer(identity, shared, measured, 1.0, mode);
        CHECK((transfer.T - Eigen::Matrix3d::Identity()).norm() < 1e-12);
        CHECK(transfer.c.norm() < 1e-12);
        CHECK(average_fidelity(transfer) == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("using the wrong outcome's correction ruins the fidelity") {
  // with a mismatched correction two Bloch axes flip: Tr T = -1, F_av = 1/3
  const MeasurementResponse response = measurement_response(
      TwoQubitChannel::identity(), BellLabel::S0, BellLabel::T0, 1.0);
  const Eigen::Matrix3d wrong = bob_correction(BellLabel::S0, BellLabel::S0);
  const ChannelTransfer mangled{4.0 * wrong * response.W,
                                4.0 * wrong * response.w0};
  CHECK(average_fidelity(mangled) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("projecting onto the undeformed singlet splits evenly") {
  const Eigen::MatrixXcd rho =
      initial_joint_state(BlochVector(0, 0, 1), BellLabel::S0);
  const MeasurementOutcome conditional = project_measurement(
      rho, BellLabel::S0, 1.0, AveragingMode::Conditional);
  CHECK(conditional.probability == doctest::Approx(0.25).epsilon(1e-13));
  // singlet-on-singlet teleports with no correction (global phase only)
  CHECK(conditional.bob.isApprox(BlochVector(0, 0, 1), 1e-12));

  const MeasurementOutcome weighted = project_measurement(
      rho, BellLabel::S0, 1.0, AveragingMode::ProbabilityWeighted);
  CHECK(weighted.probability == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(weighted.bob.isApprox(4.0 * conditional.probability * conditional.bob,
                              1e-12));
}

TEST_CASE("a fully deformed singlet heralds Bob's state with certainty") {
  // r = 0 collapses the singlet ket to |ud>: projecting a = up, A = down
  // leaves Bob in |up> with probability 1/2
  const Eigen::MatrixXcd rho =
      initial_joint_state(BlochVector(0, 0, 1), BellLabel::S0);
  const MeasurementOutcome outcome = project_measurement(
      rho, BellLabel::S0, 0.0, AveragingMode::Conditional);
  CHECK(outcome.probability == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(outcome.bob.isApprox(BlochVector(0, 0, 1), 1e-12));
}

TEST_CASE("conditioning on an impossible outcome throws") {
  // r = 0 reduces the Tplus ket to |dd>, orthogonal to the |up> input
  const Eigen::MatrixXcd rho =
      initial_joint_state(BlochVector(0, 0, 1), BellLabel::S0);
  CHECK_THROWS_AS(project_measurement(rho, BellLabel::Tplus, 0.0,
                                      AveragingMode::Conditional),
                  std::runtime_error);
  const MeasurementOutcome weighted = project_measurement(
      rho, BellLabel::Tplus, 0.0, AveragingMode::ProbabilityWeighted);
  CHECK(weighted.probability < 1e-14);
  CHECK(weighted.bob.norm() < 1e-13);
}

TEST_CASE("outcome probabilities always sum to one") {
  std::mt19937_64 rng(71);
  const TwoQubitChannel channel = two_qubit_channel(
      polarized_bath(6), CouplingConfig{0.9, 0.4}, 1.4);
  for (const double r : {0.0, 0.5, 1.0, 2.0}) {
    const Eigen::MatrixXcd rho = channel.apply_to_joint(
        initial_joint_state(random_direction(rng), BellLabel::T0));
    double total = 0.0;
    for (const BellLabel label : kBellLabels)
      total += project_measurement(rho, label, r,
                                   AveragingMode::ProbabilityWeighted)
                   .probability;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("measurement response is the exact affine law") {
  const TwoQubitChannel channel = two_qubit_channel(
      polarized_bath(6), couplings_from_delta(0.37), 1.1);
  const MeasurementResponse response =
      measurement_response(channel, BellLabel::S0, BellLabel::Tminus, 0.8);
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> uni(-0.57, 0.57);
  for (int trial = 0; trial < 10; ++trial) {
    const BlochVector p(uni(rng), uni(rng), uni(rng));
    const MeasurementOutcome direct = project_measurement(
        channel.apply_to_joint(initial_joint_state(p, BellLabel::S0)),
        BellLabel::Tminus, 0.8, AveragingMode::ProbabilityWeighted);
    CHECK(direct.probability ==
          doctest::Approx(response.p0 + response.q.dot(p)).epsilon(1e-12));
    CHECK((0.25 * direct.bob - (response.w0 + response.W * p)).norm() < 1e-12);
  }
}

TEST_CASE("weighted and conditional fidelities obey the exact bridge") {
  // F_weighted = 1/2 + 2 p (2 F_conditional - 1) pointwise on the sphere
  const TwoQubitChannel channel = two_qubit_channel(
      polarized_bath(6), couplings_from_delta(-0.4), 0.9);
  const Eigen::Matrix3d correction =
      bob_correction(BellLabel::T0, BellLabel::Tplus);
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    const BlochVector input = random_direction(rng);
    const Eigen::MatrixXcd evolved =
        channel.apply_to_joint(initial_joint_state(input, BellLabel::T0));
    const MeasurementOutcome weighted = project_measurement(
        evolved, BellLabel::Tplus, 1.0, AveragingMode::ProbabilityWeighted);
    const MeasurementOutcome conditional = project_measurement(
        evolved, BellLabel::Tplus, 1.0, AveragingMode::Conditional);
    const double f_weighted =
        0.5 * (1.0 + input.dot(correction * weighted.bob));
    const double f_conditional =
        0.5 * (1.0 + input.dot(correction * conditional.bob));
    CHECK(f_weighted ==
          doctest::Approx(0.5 + 2.0 * weighted.probability *
                                    (2.0 * f_conditional - 1.0))
              .epsilon(1e-12));
  }
}

TEST_CASE("conditional sphere average matches an independent quadrature") {
  const TwoQubitChannel channel = two_qubit_channel(
      polarized_bath(8), couplings_from_delta(0.6), 1.8);
  const MeasurementResponse response =
      measurement_response(channel, BellLabel::S0, BellLabel::T0, 1.0);
  const Eigen::Matrix3d correction =
      bob_correction(BellLabel::S0, BellLabel::T0);
  const double engine = conditional_average_fidelity(response, correction);

  // composite Simpson in theta, trapezoid in phi: machinery disjoint
  // from the Gauss-Legendre rule used by the implementation
  const int n_theta = 2000;
  const int n_phi = 512;
  double sum = 0.0;
  double weight_sum = 0.0;
  for (int i = 0; i <= n_theta; ++i) {
    const double theta = std::numbers::pi * i / n_theta;
    const double simpson =
        (i == 0 || i == n_theta) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const double ring_weight = simpson * std::sin(theta);
    double ring = 0.0;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_phi;
      const BlochVector input(std::sin(theta) * std::cos(phi),
                              std::sin(theta) * std::sin(phi),
                              std::cos(theta));
      const double p = response.p0 + response.q.dot(input);
      const BlochVector bob =
          correction * (response.w0 + response.W * input) / p;
      ring += 0.5 * (1.0 + input.dot(bob));
    }
    sum += ring_weight * ring / n_phi;
    weight_sum += ring_weight;
  }
  CHECK(engine == doctest::Approx(sum / weight_sum).epsilon(1e-8));
}

TEST_CASE("triplet outcomes are degenerate where symmetry demands it") {
  std::vector<double> grid;
  for (int i = 0; i <= 12; ++i) grid.push_back(0.25 * i);
  const BathSpec bath = unpolarized_bath(6);

  // r = 1: collective rotations permute the triplet states, so all
  // three average fidelities coincide on an isotropic bath
  const FidelitySeries bell =
      run_protocol(std::nullopt, BellLabel::S0, 1.0, bath,
                   couplings_from_delta(0.5), grid,
                   AveragingMode::ProbabilityWeighted);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(bell.outcomes[1].average_fidelity[i] -
                   bell.outcomes[2].average_fidelity[i]) < 1e-10);
    CHECK(std::abs(bell.outcomes[2].average_fidelity[i] -
                   bell.outcomes[3].average_fidelity[i]) < 1e-10);
  }

  // r != 1 splits T0 from Tplus/Tminus but never Tplus from Tminus
  const FidelitySeries deformed =
      run_protocol(std::nullopt, BellLabel::S0, 0.5, bath,
                   couplings_from_delta(0.5), grid,
                   AveragingMode::ProbabilityWeighted);
  double max_split = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(deformed.outcomes[2].average_fidelity[i] -
                   deformed.outcomes[3].average_fidelity[i]) < 1e-10);
    max_split = std::max(max_split,
                         std::abs(deformed.outcomes[1].average_fidelity[i] -
                                  deformed.outcomes[2].average_fidelity[i]));
  }
  CHECK(max_split > 1e-4);
}

TEST_CASE("a dark outcome teleports perfectly at all times") {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.3 * i);
  const FidelitySeries series =
      run_protocol(BlochVector(0.48, -0.6, 0.64), BellLabel::S0, 1.0,
                   unpolarized_bath(6), couplings_from_delta(1.0), grid,
                   AveragingMode::ProbabilityWeighted);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(series.outcomes[0].fidelity[i] - 1.0) < 1e-10);
    CHECK(std::abs(series.outcomes[0].average_fidelity[i] - 1.0) < 1e-10);
    CHECK(std::abs(series.outcomes[0].probability[i] - 0.25) < 1e-10);
  }
}

TEST_CASE("run_protocol validates its grid and input") {
  const BathSpec bath = unpolarized_bath(2);
  const CouplingConfig couplings{1.0, 0.0};
  CHECK_THROWS_AS(run_protocol(std::nullopt, BellLabel::S0, 1.0, bath,
                               couplings, {}, AveragingMode::Conditional),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_protocol(std::nullopt, BellLabel::S0, 1.0, bath,
                               couplings, {0.0, 0.5, 0.5},
                               AveragingMode::Conditional),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_protocol(BlochVector(2, 0, 0), BellLabel::S0, 1.0, bath,
                               couplings, {0.0, 1.0},
                               AveragingMode::Conditional),
                  std::invalid_argument);
}

TEST_CASE("averaging modes round-trip through their names") {
  CHECK(averaging_mode_from_string("weighted") ==
        AveragingMode::ProbabilityWeighted);
  CHECK(averaging_mode_from_string("conditional") ==
        AveragingMode::Conditional);
  CHECK(to_string(AveragingMode::ProbabilityWeighted) == "weighted");
  CHECK(to_string(AveragingMode::Conditional) == "conditional");
  CHECK_THROWS_AS(averaging_mode_from_string("mean"), std::invalid_argument);
}
