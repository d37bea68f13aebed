#include "telebath/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace telebath {

std::string_view to_string(BellLabel label) {
  switch (label) {
    case BellLabel::S0: return "S0";
    case BellLabel::T0: return "T0";
    case BellLabel::Tplus: return "Tplus";
    case BellLabel::Tminus: return "Tminus";
  }
  throw std::invalid_argument("to_string: unknown Bell label");
}

BellLabel bell_label_from_string(std::string_view name) {
  if (name == "S0") return BellLabel::S0;
  if (name == "T0") return BellLabel::T0;
  if (name == "Tplus") return BellLabel::Tplus;
  if (name == "Tminus") return BellLabel::Tminus;
  throw std::invalid_argument("unknown Bell label: " + std::string(name));
}

Eigen::Vector3d bell_correlation_vector(BellLabel label) {
  switch (label) {
    case BellLabel::S0: return {-1.0, -1.0, -1.0};
    case BellLabel::T0: return {1.0, 1.0, -1.0};
    case BellLabel::Tplus: return {1.0, -1.0, 1.0};
    case BellLabel::Tminus: return {-1.0, 1.0, 1.0};
  }
  throw std::invalid_argument("bell_correlation_vector: unknown label");
}

Eigen::Vector4cd basis_ket(BellLabel label, double r) {
  if (!(r >= 0.0))
    throw std::invalid_argument("basis_ket: require r >= 0");
  const double norm = std::sqrt(1.0 + r * r);
  Eigen::Vector4cd ket = Eigen::Vector4cd::Zero();
  // basis order |uu>, |ud>, |du>, |dd>
  switch (label) {
    case BellLabel::S0:
      ket(1) = 1.0;
      ket(2) = -r;
      break;
    case BellLabel::T0:
      ket(1) = r;
      ket(2) = 1.0;
      break;
    case BellLabel::Tplus:
      ket(0) = r;
      ket(3) = 1.0;
      break;
    case BellLabel::Tminus:
      ket(0) = 1.0;
      ket(3) = -r;
      break;
  }
  return ket / norm;
}

Eigen::Matrix4cd basis_state_density(BellLabel label, double r) {
  const Eigen::Vector4cd ket = basis_ket(label, r);
  return ket * ket.adjoint();
}

Eigen::Matrix4cd bell_state_density(BellLabel label) {
  return basis_state_density(label, 1.0);
}

TwoQubitState correlation_decomposition(const Eigen::Matrix4cd& rho) {
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-9)
    throw std::invalid_argument(
        "correlation_decomposition: density matrix must have unit trace");
  TwoQubitState state;
  for (int i = 1; i < 4; ++i) {
    state.bloch_a(i - 1) = (rho * two_qubit_pauli(4 * i)).trace().real();
    state.bloch_b(i - 1) = (rho * two_qubit_pauli(i)).trace().real();
    for (int j = 1; j < 4; ++j)
      state.corr(i - 1, j - 1) =
          (rho * two_qubit_pauli(4 * i + j)).trace().real();
  }
  return state;
}

Eigen::Matrix4cd two_qubit_density(const TwoQubitState& state) {
  Eigen::Matrix4cd rho = 0.25 * Eigen::Matrix4cd::Identity();
  for (int i = 1; i < 4; ++i) {
    rho += 0.25 * state.bloch_a(i - 1) * two_qubit_pauli(4 * i);
    rho += 0.25 * state.bloch_b(i - 1) * two_qubit_pauli(i);
    for (int j = 1; j < 4; ++j)
      rho += 0.25 * state.corr(i - 1, j - 1) * two_qubit_pauli(4 * i + j);
  }
  return rho;
}

Eigen::Matrix2cd qubit_density(const BlochVector& polarization) {
  if (polarization.norm() > 1.0 + 1e-12)
    throw std::invalid_argument("qubit_density: Bloch vector outside sphere");
  Eigen::Matrix2cd rho = 0.5 * Eigen::Matrix2cd::Identity();
  for (int i = 0; i < 3; ++i)
    rho += 0.5 * polarization(i) * pauli(i + 1);
  return rho;
}

Eigen::MatrixXcd initial_joint_state(const BlochVector& input,
                                     BellLabel shared) {
  return kron(qubit_density(input), bell_state_density(shared));
}

}  // namespace telebath
