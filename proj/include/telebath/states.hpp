#pragma once

#include <array>
#include <string_view>

#include <Eigen/Dense>

#include "telebath/pauli.hpp"

namespace telebath {

/// Labels for the Bell basis and its r-deformed generalization:
/// S0 the singlet, T0/Tplus/Tminus the triplets.
enum class BellLabel { S0, T0, Tplus, Tminus };

inline constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::S0, BellLabel::T0, BellLabel::Tplus, BellLabel::Tminus};

std::string_view to_string(BellLabel label);
BellLabel bell_label_from_string(std::string_view name);

/// Bloch polarization vector, components are Pauli expectation values.
using BlochVector = Eigen::Vector3d;

/// Diagonal correlation signature D of a Bell state: <sigma_k (x) sigma_k>.
Eigen::Vector3d bell_correlation_vector(BellLabel label);

/// Normalized measurement-basis ket on two qubits, deformed by r >= 0:
///   S0:     (|ud> - r |du>) / sqrt(1 + r^2)
///   T0:     (r |ud> + |du>) / sqrt(1 + r^2)
///   Tplus:  (r |uu> + |dd>) / sqrt(1 + r^2)
///   Tminus: (|uu> - r |dd>) / sqrt(1 + r^2)
/// Basis order |uu>, |ud>, |du>, |dd>.  r = 1 recovers the Bell basis.
Eigen::Vector4cd basis_ket(BellLabel label, double r);

/// Rank-one projector onto basis_ket(label, r).
Eigen::Matrix4cd basis_state_density(BellLabel label, double r);

/// Bell-state density matrix (r = 1).
Eigen::Matrix4cd bell_state_density(BellLabel label);

/// Pauli decomposition of a two-qubit state: local Bloch vectors and
/// the 3x3 correlation matrix corr(i,j) = <sigma_i (x) sigma_j>.
struct TwoQubitState {
  BlochVector bloch_a = BlochVector::Zero();
  BlochVector bloch_b = BlochVector::Zero();
  Eigen::Matrix3d corr = Eigen::Matrix3d::Zero();
};

/// Decompose a unit-trace two-qubit density matrix; throws
/// std::invalid_argument if |Tr rho - 1| > 1e-9.
TwoQubitState correlation_decomposition(const Eigen::Matrix4cd& rho);

/// Recompose the density matrix from its Pauli decomposition.
Eigen::Matrix4cd two_qubit_density(const TwoQubitState& state);

/// Single-qubit density matrix (Id + P . sigma) / 2; throws
/// std::invalid_argument if |P| > 1 + 1e-12.
Eigen::Matrix2cd qubit_density(const BlochVector& polarization);

/// Three-qubit input of the teleportation protocol: qubit a in the
/// state with Bloch vector `input`, qubits (A, B) in the shared Bell
/// state.  8x8, basis index 4a + 2A + B with 0 = up.
Eigen::MatrixXcd initial_joint_state(const BlochVector& input,
                                     BellLabel shared);

}  // namespace telebath
