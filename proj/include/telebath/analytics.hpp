#pragma once

#include <vector>

#include <Eigen/Dense>

#include "telebath/channel.hpp"
#include "telebath/states.hpp"

namespace telebath {

/// Short-time decay constants of the average fidelity,
/// 1 - F_av ~ t^2 / tau^2 in physical time, with
///   1/tau_singlet^2 = (1/6)(3N/4)(ka^2 + kA^2)(1 - delta)
///   1/tau_triplet^2 = (1/6)(3N/4)(ka^2 + kA^2)(1 + delta/3)
/// For unit-norm couplings the rates equal the quadratic coefficients
/// in dimensionless time Kt.  A vanishing rate (delta = 1, singlet) is
/// reported as tau = infinity.
struct DecoherenceTimescales {
  double tau_singlet = 0.0;
  double tau_triplet = 0.0;
  double rate_singlet = 0.0;  ///< 1 / tau_singlet^2
  double rate_triplet = 0.0;  ///< 1 / tau_triplet^2
};

DecoherenceTimescales decoherence_timescales(const CouplingConfig& couplings,
                                             int n_spins);

/// Closed-form short-time average fidelity (probability-weighted
/// convention) for an r-deformed measurement on an unpolarized bath:
///   F_av(t) = 1/2 + [Q / (6 (1 + r^2))] [1 - (1/3)(3N/4) X_label (Kt)^2]
/// with Q = (1 + r)^2 + 2 r and
///   X_S0     = 1 - delta
///   X_T0     = 1 + delta (1 + r^2) / Q
///   X_Tplus  = X_Tminus = 1 + 2 delta r / Q
/// At r = 1 the prefactor is 1/2 and the law reduces to the two
/// decoherence_timescales rates.
double partial_basis_short_time(BellLabel label, double r,
                                const CouplingConfig& couplings, int n_spins,
                                double kt);

/// Intercept of the above at t = 0: 1/2 + [(1+r)^2 + 2r] / [6 (1+r^2)].
double partial_basis_intercept(double r);

/// Least-squares fit of y = alpha + beta t^2 over (t, y) samples.
struct QuadraticFit {
  double alpha = 0.0;
  double beta = 0.0;
  double rms_residual = 0.0;
};

QuadraticFit fit_quadratic(const std::vector<double>& t,
                           const std::vector<double>& y);

/// Structurally independent reference evolution: builds the explicit
/// Hamiltonian sum_k (ka S_a + kA S_A) . I_k on the full
/// 4 * 2^N-dimensional space (qubits a, A and N bath spins; qubit B is
/// carried as a spectator of the 8x8 input) and conjugates by the exact
/// propagator at dimensionless time Kt.  Returns the reduced 8x8 state.
/// Throws std::invalid_argument for n_spins > 10 (size limit).
Eigen::MatrixXcd full_space_evolve(int n_spins,
                                   const CouplingConfig& couplings,
                                   const Eigen::MatrixXcd& rho_aab,
                                   BathModel model, double kt);

}  // namespace telebath
