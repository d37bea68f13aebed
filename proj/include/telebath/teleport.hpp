#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "telebath/channel.hpp"
#include "telebath/states.hpp"

namespace telebath {

/// How measurement outcomes are turned into Bob states and fidelities.
enum class AveragingMode {
  /// Bob's state normalized per outcome, w / p; average fidelity is the
  /// uniform Bloch-sphere average of the conditional fidelity.
  Conditional,
  /// Bob's operator scaled by the number of outcomes, 4 w, keeping the
  /// map affine in the input; the default convention.
  ProbabilityWeighted,
};

std::string_view to_string(AveragingMode mode);
AveragingMode averaging_mode_from_string(std::string_view name);

/// Result of projecting Alice's qubits (a, A) of a three-qubit state
/// onto one r-deformed basis state.  `bob` is the *uncorrected* Bloch
/// vector of Bob's operator under the chosen averaging convention.
struct MeasurementOutcome {
  BellLabel label = BellLabel::S0;
  double r = 1.0;
  AveragingMode mode = AveragingMode::ProbabilityWeighted;
  double probability = 0.0;
  BlochVector bob = BlochVector::Zero();
};

/// Project qubits (a, A) of `rho_aab` (8x8) onto basis_ket(label, r).
/// Throws std::runtime_error in Conditional mode if the outcome
/// probability is below 1e-14.
MeasurementOutcome project_measurement(const Eigen::MatrixXcd& rho_aab,
                                       BellLabel label, double r,
                                       AveragingMode mode);

/// Bob's corrective rotation as its action on Bloch vectors: the signed
/// diagonal diag(D_i M_i) built from the correlation vectors D of the
/// shared state and M of the measured state.  Always a proper rotation;
/// at t = 0 with r = 1 it restores Bob's state exactly.
Eigen::Matrix3d bob_correction(BellLabel shared, BellLabel measured);

/// Affine response of one measurement outcome to the input Bloch
/// vector P: probability p(P) = p0 + q . P and uncorrected Bob operator
/// Bloch vector w(P) = w0 + W P.  Exact for any channel, since the
/// pipeline is affine in the input density matrix.
struct MeasurementResponse {
  double p0 = 0.0;
  Eigen::Vector3d q = Eigen::Vector3d::Zero();
  Eigen::Vector3d w0 = Eigen::Vector3d::Zero();
  Eigen::Matrix3d W = Eigen::Matrix3d::Zero();
};

/// Extract the affine response by probing the evolved pipeline with
/// P in {0, x, y, z}.
MeasurementResponse measurement_response(const TwoQubitChannel& channel,
                                         BellLabel shared,
                                         BellLabel measured, double r);

/// End-to-end map from input to corrected Bob Bloch vector,
/// P_B = T P + c.  Exact in ProbabilityWeighted mode; in Conditional
/// mode this is the probe-based linearization of the rational map.
struct ChannelTransfer {
  Eigen::Matrix3d T = Eigen::Matrix3d::Identity();
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
};

ChannelTransfer effective_transfer(const TwoQubitChannel& channel,
                                   BellLabel shared, BellLabel measured,
                                   double r, AveragingMode mode);
ChannelTransfer effective_transfer(const BathSpec& bath,
                                   const CouplingConfig& couplings, double kt,
                                   BellLabel shared, BellLabel measured,
                                   double r, AveragingMode mode);

/// Teleportation fidelity F = (1 + P_a . P_B) / 2 for a pure input.
double fidelity(const BlochVector& input, const ChannelTransfer& transfer);

/// Input-averaged fidelity of an affine map, 1/2 + Tr T / 6 (the offset
/// does not contribute).
double average_fidelity(const ChannelTransfer& transfer);

/// Uniform Bloch-sphere average of the conditional fidelity
/// F(P) = (1 + P . C (w0 + W P) / (p0 + q . P)) / 2 by Gauss-Legendre
/// quadrature (exact integrand, no linearization).
double conditional_average_fidelity(const MeasurementResponse& response,
                                    const Eigen::Matrix3d& correction);

/// Time series of the teleportation figures of merit for all four
/// measurement outcomes.
struct OutcomeSeries {
  BellLabel outcome = BellLabel::S0;
  std::vector<double> fidelity;          ///< F(t) for the configured input
  std::vector<double> average_fidelity;  ///< input-averaged F_av(t)
  std::vector<double> probability;       ///< outcome probability
};

struct FidelitySeries {
  int n_spins = 0;
  BathModel bath_model = BathModel::Unpolarized;
  CouplingConfig couplings;
  BellLabel shared = BellLabel::S0;
  double r = 1.0;
  AveragingMode mode = AveragingMode::ProbabilityWeighted;
  std::optional<BlochVector> input;  ///< nullopt = sphere-averaged input
  std::vector<double> times;         ///< dimensionless Kt grid
  std::array<OutcomeSeries, 4> outcomes;  ///< order S0, T0, Tplus, Tminus
};

/// Run the full protocol over a time grid.  With no fixed input the
/// per-outcome `fidelity` column equals `average_fidelity` and the
/// probability is the input-averaged one.
FidelitySeries run_protocol(const std::optional<BlochVector>& input,
                            BellLabel shared, double r, const BathSpec& bath,
                            const CouplingConfig& couplings,
                            std::vector<double> kt_grid, AveragingMode mode);

}  // namespace telebath
