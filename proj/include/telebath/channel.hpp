#pragma once

#include <vector>

#include <Eigen/Dense>

#include "telebath/pauli.hpp"
#include "telebath/spin.hpp"

namespace telebath {

/// Couplings of the two measured qubits to the collective bath spin.
/// Qubit B (the receiver) is uncoupled by construction.
struct CouplingConfig {
  double ka = 0.0;  ///< coupling of the input qubit a
  double kA = 0.0;  ///< coupling of the entangled qubit A

  /// Overall coupling scale K = sqrt(ka^2 + kA^2).
  double norm() const;
  /// Anisotropy delta = 2 ka kA / K^2 in [-1, 1]; 0 when K = 0.
  double delta() const;
};

/// Couplings with unit norm realizing a given delta in [-1, 1]:
/// ka = cos(phi), kA = sin(phi), phi = asin(delta)/2.
CouplingConfig couplings_from_delta(double delta, double scale = 1.0);

/// Hamiltonian of the two measured qubits and one bath sector of total
/// spin I: H = (ka S_a + kA S_A) . I_E on the 4(2I+1)-dimensional space
/// qubit a (x) qubit A (x) bath multiplet (hbar = 1, spin operators
/// sigma/2 on the qubits).
Eigen::MatrixXcd sector_hamiltonian(HalfInt total_spin,
                                    const CouplingConfig& couplings);

/// Reduced dynamical map on the two measured qubits at a fixed
/// dimensionless time Kt, represented as a 16x16 real Pauli transfer
/// matrix R in the orthonormal basis B_u = pauli_basis_element(u):
/// coefficient vectors c_u = Tr[B_u rho] map as c(t) = R c(0).
/// Because the basis is a rescaled Pauli product basis, R acts
/// identically on physical coefficients (1, P_a, P_A, corr).
class TwoQubitChannel {
 public:
  using Transfer = Eigen::Matrix<double, 16, 16>;

  TwoQubitChannel(double kt, Transfer transfer);
  static TwoQubitChannel identity(double kt = 0.0);

  double kt() const { return kt_; }
  const Transfer& transfer() const { return transfer_; }

  /// Apply the map to a two-qubit density matrix.
  Eigen::Matrix4cd apply(const Eigen::Matrix4cd& rho) const;

  /// Apply the map to the (a, A) factor of an 8x8 three-qubit state,
  /// leaving qubit B untouched.
  Eigen::MatrixXcd apply_to_joint(const Eigen::MatrixXcd& rho_aab) const;

  /// Choi matrix J = (1/4) sum_uv R_vu B_u^T (x) B_v; its positive
  /// semidefiniteness certifies complete positivity.
  Eigen::MatrixXcd choi_matrix() const;

 private:
  double kt_ = 0.0;
  Transfer transfer_ = Transfer::Identity();
};

/// Precomputed per-sector eigendecompositions for one (bath, couplings)
/// pair, reusable across a whole time grid.  Sector contributions are
/// evaluated concurrently and accumulated in ascending-I order so
/// results are independent of scheduling.
class SectorChannelFamily {
 public:
  SectorChannelFamily(const BathSpec& bath, const CouplingConfig& couplings);

  /// Channel at dimensionless time Kt (physical time t = Kt / K).
  /// K = 0 yields the identity channel for every Kt.
  TwoQubitChannel channel_at(double kt) const;

  const CouplingConfig& couplings() const { return couplings_; }
  int n_spins() const { return n_spins_; }

 private:
  struct SectorTerms {
    double weight = 0.0;
    Eigen::VectorXd energies;   // eigenvalues of the sector Hamiltonian
    Eigen::MatrixXcd probe;     // 16 x d^2, row u = flat of V^H (B_u (x) Id) V
    Eigen::MatrixXcd source;    // 16 x d^2, row v = flat of V^H (B_v (x) rho_I) V
  };

  CouplingConfig couplings_;
  int n_spins_ = 0;
  std::vector<SectorTerms> sectors_;
};

/// One-shot convenience wrapper around SectorChannelFamily.
TwoQubitChannel two_qubit_channel(const BathSpec& bath,
                                  const CouplingConfig& couplings, double kt);

/// Isotropic decomposition of the channel's action on diagonal
/// correlation matrices: D_kk(t) = f D_kk(0) + g Tr D(0).
struct FgCoefficients {
  double f = 1.0;
  double g = 0.0;
  /// Largest deviation of the transfer matrix from the isotropic form
  /// on diagonal-correlation and identity inputs; values above ~1e-6
  /// indicate the decomposition does not describe the channel.
  double residual = 0.0;
};

/// Extract (f, g) from the transfer matrix via the probe D(0) =
/// diag(1, 0, 0): f = D_11(t) - D_22(t), g = D_22(t).  Meaningful for
/// channels from unpolarized (isotropic) baths; check `residual`.
FgCoefficients extract_fg(const TwoQubitChannel& channel);

}  // namespace telebath
