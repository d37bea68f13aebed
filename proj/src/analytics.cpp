#include "telebath/analytics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace telebath {

namespace {

double collective_second_moment(int n_spins) {
  // <I^2> over the unpolarized bath: 3N/4
  return 0.75 * n_spins;
}

}  // namespace

DecoherenceTimescales decoherence_timescales(const CouplingConfig& couplings,
                                             int n_spins) {
  if (n_spins <= 0)
    throw std::invalid_argument("decoherence_timescales: bath size");
  const double k2 = couplings.ka * couplings.ka + couplings.kA * couplings.kA;
  const double delta = couplings.delta();
  const double base = collective_second_moment(n_spins) / 6.0 * k2;

  DecoherenceTimescales scales;
  scales.rate_singlet = base * (1.0 - delta);
  scales.rate_triplet = base * (1.0 + delta / 3.0);
  const auto tau = [](double rate) {
    return rate > 0.0 ? 1.0 / std::sqrt(rate)
                      : std::numeric_limits<double>::infinity();
  };
  scales.tau_singlet = tau(scales.rate_singlet);
  scales.tau_triplet = tau(scales.rate_triplet);
  return scales;
}

double partial_basis_intercept(double r) {
  if (!(r >= 0.0))
    throw std::invalid_argument("partial_basis_intercept: require r >= 0");
  const double q = (1.0 + r) * (1.0 + r) + 2.0 * r;
  return 0.5 + q / (6.0 * (1.0 + r * r));
}

double partial_basis_short_time(BellLabel label, double r,
                                const CouplingConfig& couplings, int n_spins,
                                double kt) {
  if (!(r >= 0.0))
    throw std::invalid_argument("partial_basis_short_time: require r >= 0");
  if (n_spins <= 0)
    throw std::invalid_argument("partial_basis_short_time: bath size");
  const double delta = couplings.delta();
  const double q = (1.0 + r) * (1.0 + r) + 2.0 * r;
  double x = 0.0;
  switch (label) {
    case BellLabel::S0:
      x = 1.0 - delta;
      break;
    case BellLabel::T0:
      x = 1.0 + delta * (1.0 + r * r) / q;
      break;
    case BellLabel::Tplus:
    case BellLabel::Tminus:
      x = 1.0 + 2.0 * delta * r / q;
      break;
  }
  const double prefactor = q / (6.0 * (1.0 + r * r));
  return 0.5 + prefactor *
                   (1.0 - collective_second_moment(n_spins) / 3.0 * x * kt *
                              kt);
}

QuadraticFit fit_quadratic(const std::vector<double>& t,
                           const std::vector<double>& y) {
  if (t.size() != y.size() || t.size() < 2)
    throw std::invalid_argument(
        "fit_quadratic: need matching samples, at least two");
  const Eigen::Index n = static_cast<Eigen::Index>(t.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = t[static_cast<std::size_t>(i)] *
                   t[static_cast<std::size_t>(i)];
    rhs(i) = y[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector2d solution =
      design.colPivHouseholderQr().solve(rhs);
  QuadraticFit fit;
  fit.alpha = solution(0);
  fit.beta = solution(1);
  fit.rms_residual =
      (design * solution - rhs).norm() / std::sqrt(static_cast<double>(n));
  return fit;
}

Eigen::MatrixXcd full_space_evolve(int n_spins,
                                   const CouplingConfig& couplings,
                                   const Eigen::MatrixXcd& rho_aab,
                                   BathModel model, double kt) {
  if (n_spins <= 0)
    throw std::invalid_argument("full_space_evolve: bath size");
  if (n_spins > 10)
    throw std::invalid_argument(
        "full_space_evolve: bath larger than 10 spins exceeds the size limit");
  if (rho_aab.rows() != 8 || rho_aab.cols() != 8)
    throw std::invalid_argument("full_space_evolve: expected an 8x8 state");

  const double k = couplings.norm();
  if (k == 0.0) return rho_aab;
  const double t = kt / k;

  const Eigen::Index bath_dim = Eigen::Index(1) << n_spins;

  // collective bath spin components J_m = sum_k sigma_m^(k) / 2 built
  // from explicit tensor products over the individual spins
  std::array<Eigen::MatrixXcd, 3> collective;
  for (int m = 0; m < 3; ++m) {
    collective[m] = Eigen::MatrixXcd::Zero(bath_dim, bath_dim);
    for (int site = 0; site < n_spins; ++site) {
      const Eigen::Index left = Eigen::Index(1) << site;
      const Eigen::Index right = bath_dim / (2 * left);
      collective[m] +=
          kron(kron(Eigen::MatrixXcd::Identity(left, left),
                    0.5 * pauli(m + 1)),
               Eigen::MatrixXcd::Identity(right, right));
    }
  }

  // H = sum_m (ka S_a^m + kA S_A^m) (x) J_m on qubits (a, A) and bath
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  Eigen::MatrixXcd hamiltonian =
      Eigen::MatrixXcd::Zero(4 * bath_dim, 4 * bath_dim);
  for (int m = 0; m < 3; ++m) {
    const Eigen::Matrix2cd s = 0.5 * pauli(m + 1);
    const Eigen::Matrix4cd qubit_part =
        couplings.ka * kron(s, id2) + couplings.kA * kron(id2, s);
    hamiltonian += kron(qubit_part, collective[m]);
  }

  // initial bath state
  Eigen::MatrixXcd rho_bath;
  if (model == BathModel::Unpolarized) {
    rho_bath = Eigen::MatrixXcd::Identity(bath_dim, bath_dim) /
               static_cast<double>(bath_dim);
  } else {
    // resolve the (I, m = I) eigenspaces of (J^2, J_z) by diagonalizing
    // J^2 + J_z / (2 n): the shift splits the m levels without mixing
    // different I blocks
    Eigen::MatrixXcd j2 = collective[0] * collective[0] +
                          collective[1] * collective[1] +
                          collective[2] * collective[2];
    const double shift = 1.0 / (2.0 * n_spins);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> split(
        j2 + shift * collective[2]);
    if (split.info() != Eigen::Success)
      throw std::runtime_error("full_space_evolve: bath diagonalization");

    rho_bath = Eigen::MatrixXcd::Zero(bath_dim, bath_dim);
    double norm = 0.0;
    std::vector<std::pair<double, Eigen::MatrixXcd>> blocks;
    for (int twice_i = n_spins % 2; twice_i <= n_spins; twice_i += 2) {
      const double spin = 0.5 * twice_i;
      const double target = spin * (spin + 1.0) + shift * spin;
      Eigen::MatrixXcd projector =
          Eigen::MatrixXcd::Zero(bath_dim, bath_dim);
      int rank = 0;
      for (Eigen::Index j = 0; j < bath_dim; ++j) {
        if (std::abs(split.eigenvalues()(j) - target) < 1e-6) {
          projector += split.eigenvectors().col(j) *
                       split.eigenvectors().col(j).adjoint();
          ++rank;
        }
      }
      if (rank == 0) continue;
      const double weight = spin * spin * std::exp(-2.0 * spin * spin /
                                                   n_spins);
      norm += weight;
      if (weight > 0.0) blocks.emplace_back(weight, projector / rank);
    }
    if (norm <= 0.0)
      throw std::runtime_error("full_space_evolve: degenerate bath weights");
    for (const auto& [weight, block] : blocks)
      rho_bath += (weight / norm) * block;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("full_space_evolve: diagonalization failed");
  Eigen::VectorXcd phases(solver.eigenvalues().size());
  for (Eigen::Index p = 0; p < phases.size(); ++p)
    phases(p) = std::exp(Complex(0.0, -solver.eigenvalues()(p) * t));
  const Eigen::MatrixXcd propagator = solver.eigenvectors() *
                                      phases.asDiagonal() *
                                      solver.eigenvectors().adjoint();

  // carry qubit B as a spectator by expanding it over an orthonormal
  // single-qubit basis
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(8, 8);
  for (int lam = 0; lam < 4; ++lam) {
    const Eigen::Matrix2cd b = pauli(lam) / std::numbers::sqrt2;
    Eigen::Matrix4cd y = Eigen::Matrix4cd::Zero();
    for (int s = 0; s < 4; ++s)
      for (int sp = 0; sp < 4; ++sp) {
        Complex acc = 0.0;
        for (int kk = 0; kk < 2; ++kk)
          for (int kp = 0; kp < 2; ++kp)
            acc += rho_aab(2 * s + kk, 2 * sp + kp) * b(kp, kk);
        y(s, sp) = acc;
      }
    const Eigen::MatrixXcd evolved =
        propagator * kron(y, rho_bath) * propagator.adjoint();
    out += kron(partial_trace_back(evolved, bath_dim), b);
  }
  return out;
}

}  // namespace telebath
