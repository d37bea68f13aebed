#include "telebath/channel.hpp"

#include <array>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

namespace telebath {

double CouplingConfig::norm() const { return std::hypot(ka, kA); }

double CouplingConfig::delta() const {
  const double k2 = ka * ka + kA * kA;
  if (k2 == 0.0) return 0.0;
  return 2.0 * ka * kA / k2;
}

CouplingConfig couplings_from_delta(double delta, double scale) {
  if (!(delta >= -1.0 && delta <= 1.0))
    throw std::invalid_argument("couplings_from_delta: delta outside [-1, 1]");
  const double phi = 0.5 * std::asin(delta);
  return {scale * std::cos(phi), scale * std::sin(phi)};
}

Eigen::MatrixXcd sector_hamiltonian(HalfInt total_spin,
                                    const CouplingConfig& couplings) {
  const SpinOperators bath = spin_operators(total_spin);
  const int bath_dim = total_spin.multiplet_dim();
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4 * bath_dim, 4 * bath_dim);
  const std::array<const Eigen::MatrixXcd*, 3> axes = {&bath.x, &bath.y,
                                                       &bath.z};
  for (int m = 0; m < 3; ++m) {
    const Eigen::Matrix2cd s = 0.5 * pauli(m + 1);
    const Eigen::Matrix4cd qubit_part =
        couplings.ka * kron(s, id2) + couplings.kA * kron(id2, s);
    h += kron(qubit_part, *axes[m]);
  }
  return h;
}

TwoQubitChannel::TwoQubitChannel(double kt, Transfer transfer)
    : kt_(kt), transfer_(std::move(transfer)) {}

TwoQubitChannel TwoQubitChannel::identity(double kt) {
  return TwoQubitChannel(kt, Transfer::Identity());
}

Eigen::Matrix4cd TwoQubitChannel::apply(const Eigen::Matrix4cd& rho) const {
  Eigen::Matrix<Complex, 16, 1> coeff;
  for (int v = 0; v < 16; ++v)
    coeff(v) = (pauli_basis_element(v) * rho).trace();
  const Eigen::Matrix<Complex, 16, 1> evolved =
      transfer_.cast<Complex>() * coeff;
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (int u = 0; u < 16; ++u) out += evolved(u) * pauli_basis_element(u);
  return out;
}

Eigen::MatrixXcd TwoQubitChannel::apply_to_joint(
    const Eigen::MatrixXcd& rho_aab) const {
  if (rho_aab.rows() != 8 || rho_aab.cols() != 8)
    throw std::invalid_argument("apply_to_joint: expected an 8x8 state");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(8, 8);
  for (int lam = 0; lam < 4; ++lam) {
    // expand over the orthonormal basis sigma_lam / sqrt(2) of qubit B
    const Eigen::Matrix2cd b = pauli(lam) / std::numbers::sqrt2;
    Eigen::Matrix4cd y = Eigen::Matrix4cd::Zero();
    for (int s = 0; s < 4; ++s)
      for (int sp = 0; sp < 4; ++sp) {
        Complex acc = 0.0;
        for (int k = 0; k < 2; ++k)
          for (int kp = 0; kp < 2; ++kp)
            acc += rho_aab(2 * s + k, 2 * sp + kp) * b(kp, k);
        y(s, sp) = acc;
      }
    out += kron(apply(y), b);
  }
  return out;
}

Eigen::MatrixXcd TwoQubitChannel::choi_matrix() const {
  // J = sum_uv R_uv B_v^T (x) B_u = (id (x) channel)|Omega><Omega|
  Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(16, 16);
  for (int u = 0; u < 16; ++u)
    for (int v = 0; v < 16; ++v)
      choi += transfer_(u, v) *
              kron(pauli_basis_element(v).transpose(), pauli_basis_element(u));
  return choi;
}

SectorChannelFamily::SectorChannelFamily(const BathSpec& bath,
                                         const CouplingConfig& couplings)
    : couplings_(couplings), n_spins_(bath.n_spins) {
  validate_bath(bath);
  const auto build = [&couplings](const SectorSpec& spec) {
    const int bath_dim = spec.total_spin.multiplet_dim();
    const Eigen::Index d = 4 * bath_dim;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        sector_hamiltonian(spec.total_spin, couplings));
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("sector eigendecomposition failed");
    const Eigen::MatrixXcd& v = solver.eigenvectors();

    Eigen::MatrixXcd rho_bath;
    if (spec.internal_state == SectorState::Unpolarized) {
      rho_bath = Eigen::MatrixXcd::Identity(bath_dim, bath_dim) / bath_dim;
    } else {
      // stretched state |I; m = I>, the first basis vector
      rho_bath = Eigen::MatrixXcd::Zero(bath_dim, bath_dim);
      rho_bath(0, 0) = 1.0;
    }
    const Eigen::MatrixXcd id_bath =
        Eigen::MatrixXcd::Identity(bath_dim, bath_dim);

    SectorTerms terms;
    terms.weight = spec.weight;
    terms.energies = solver.eigenvalues();
    terms.probe.resize(16, d * d);
    terms.source.resize(16, d * d);
    for (int u = 0; u < 16; ++u) {
      // probe row u: column-major flatten of V^H (B_u (x) Id) V, so the
      // flat index p*d + q addresses element (q, p)
      const Eigen::MatrixXcd a =
          v.adjoint() * kron(pauli_basis_element(u), id_bath) * v;
      terms.probe.row(u) =
          Eigen::Map<const Eigen::VectorXcd>(a.data(), d * d).transpose();
      // source row u: flatten of the *transpose* of V^H (B_u (x) rho) V,
      // so the flat index p*d + q addresses element (p, q)
      const Eigen::MatrixXcd c =
          (v.adjoint() * kron(pauli_basis_element(u), rho_bath) * v)
              .transpose();
      terms.source.row(u) =
          Eigen::Map<const Eigen::VectorXcd>(c.data(), d * d).transpose();
    }
    return terms;
  };

  std::vector<std::future<SectorTerms>> jobs;
  for (const SectorSpec& spec : bath.sectors) {
    if (spec.weight == 0.0) continue;  // e.g. I = 0 in a polarized bath
    jobs.push_back(
        std::async(std::launch::async, [spec, &build] { return build(spec); }));
  }
  sectors_.reserve(jobs.size());
  for (auto& job : jobs) sectors_.push_back(job.get());
}

TwoQubitChannel SectorChannelFamily::channel_at(double kt) const {
  const double k = couplings_.norm();
  if (k == 0.0 || sectors_.empty()) return TwoQubitChannel::identity(kt);
  const double t = kt / k;

  using SectorTransfer = Eigen::Matrix<Complex, 16, 16>;
  std::vector<std::future<SectorTransfer>> jobs;
  jobs.reserve(sectors_.size());
  for (const SectorTerms& sector : sectors_) {
    jobs.push_back(std::async(std::launch::async, [&sector, t] {
      const Eigen::Index d = sector.energies.size();
      Eigen::VectorXcd ep(d);
      for (Eigen::Index p = 0; p < d; ++p)
        ep(p) = std::exp(Complex(0.0, -sector.energies(p) * t));
      // flat phases[p*d + q] = e^{-i(E_p - E_q) t}, column-major flatten
      // of the outer product conj(ep) ep^T
      const Eigen::MatrixXcd outer = ep.conjugate() * ep.transpose();
      const Eigen::Map<const Eigen::VectorXcd> phases(outer.data(), d * d);
      SectorTransfer r =
          sector.probe * (phases.asDiagonal() * sector.source.transpose());
      return r;
    }));
  }

  // accumulate in ascending-I order: deterministic regardless of the
  // scheduling of the sector jobs
  SectorTransfer total = SectorTransfer::Zero();
  for (std::size_t i = 0; i < jobs.size(); ++i)
    total += sectors_[i].weight * jobs[i].get();
  return TwoQubitChannel(kt, total.real());
}

TwoQubitChannel two_qubit_channel(const BathSpec& bath,
                                  const CouplingConfig& couplings, double kt) {
  return SectorChannelFamily(bath, couplings).channel_at(kt);
}

FgCoefficients extract_fg(const TwoQubitChannel& channel) {
  const TwoQubitChannel::Transfer& r = channel.transfer();
  const auto idx = [](int mu, int nu) { return 4 * mu + nu; };

  FgCoefficients fg;
  fg.f = r(idx(1, 1), idx(1, 1)) - r(idx(2, 2), idx(1, 1));
  fg.g = r(idx(2, 2), idx(1, 1));

  // residual: deviation from the isotropic prediction on the identity
  // column and the three diagonal-correlation columns
  double residual = 0.0;
  for (int row = 0; row < 16; ++row) {
    const double expected = row == 0 ? 1.0 : 0.0;
    residual = std::max(residual, std::abs(r(row, 0) - expected));
  }
  for (int l = 1; l <= 3; ++l) {
    const int col = idx(l, l);
    for (int row = 0; row < 16; ++row) {
      double expected = 0.0;
      for (int m = 1; m <= 3; ++m)
        if (row == idx(m, m)) expected = (m == l ? fg.f : 0.0) + fg.g;
      residual = std::max(residual, std::abs(r(row, col) - expected));
    }
  }
  fg.residual = residual;
  return fg;
}

}  // namespace telebath
