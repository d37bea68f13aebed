#include "telebath/teleport.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace telebath {

namespace {

constexpr double kProbabilityFloor = 1e-14;

/// Raw measurement data for one outcome: probability p = Tr omega and
/// the unnormalized Bloch vector w_k = Tr[omega sigma_k] of Bob's
/// operator omega = Tr_aA[(Pi (x) Id) rho].
std::pair<double, Eigen::Vector3d> raw_outcome(const Eigen::MatrixXcd& rho_aab,
                                               BellLabel label, double r) {
  const Eigen::Matrix4cd projector = basis_state_density(label, r);
  const Eigen::MatrixXcd omega = partial_trace_front(
      kron(projector, Eigen::Matrix2cd::Identity()) * rho_aab, 4);
  const double p = omega.trace().real();
  Eigen::Vector3d w;
  for (int k = 0; k < 3; ++k)
    w(k) = (omega * pauli(k + 1)).trace().real();
  return {p, w};
}

/// Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1].
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n) {
  Eigen::VectorXd nodes(n), weights(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and P_n'(x)
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    nodes(i) = -x;
    nodes(n - 1 - i) = x;
    weights(i) = weights(n - 1 - i) = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return {nodes, weights};
}

}  // namespace

std::string_view to_string(AveragingMode mode) {
  switch (mode) {
    case AveragingMode::Conditional: return "conditional";
    case AveragingMode::ProbabilityWeighted: return "weighted";
  }
  throw std::invalid_argument("to_string: unknown averaging mode");
}

AveragingMode averaging_mode_from_string(std::string_view name) {
  if (name == "conditional") return AveragingMode::Conditional;
  if (name == "weighted") return AveragingMode::ProbabilityWeighted;
  throw std::invalid_argument("unknown averaging mode: " + std::string(name));
}

MeasurementOutcome project_measurement(const Eigen::MatrixXcd& rho_aab,
                                       BellLabel label, double r,
                                       AveragingMode mode) {
  if (rho_aab.rows() != 8 || rho_aab.cols() != 8)
    throw std::invalid_argument("project_measurement: expected an 8x8 state");
  const auto [p, w] = raw_outcome(rho_aab, label, r);
  MeasurementOutcome outcome;
  outcome.label = label;
  outcome.r = r;
  outcome.mode = mode;
  outcome.probability = p;
  if (mode == AveragingMode::ProbabilityWeighted) {
    outcome.bob = 4.0 * w;
  } else {
    if (p < kProbabilityFloor)
      throw std::runtime_error(
          "project_measurement: outcome has vanishing probability");
    outcome.bob = w / p;
  }
  return outcome;
}

Eigen::Matrix3d bob_correction(BellLabel shared, BellLabel measured) {
  const Eigen::Vector3d d = bell_correlation_vector(shared);
  const Eigen::Vector3d m = bell_correlation_vector(measured);
  return d.cwiseProduct(m).asDiagonal();
}

MeasurementResponse measurement_response(const TwoQubitChannel& channel,
                                         BellLabel shared,
                                         BellLabel measured, double r) {
  // probe the affine pipeline with P = 0 and the three axis inputs
  const auto evolve_and_project = [&](const BlochVector& input) {
    return raw_outcome(
        channel.apply_to_joint(initial_joint_state(input, shared)), measured,
        r);
  };
  MeasurementResponse response;
  const auto [p0, w0] = evolve_and_project(BlochVector::Zero());
  response.p0 = p0;
  response.w0 = w0;
  for (int i = 0; i < 3; ++i) {
    const auto [pi, wi] = evolve_and_project(BlochVector::Unit(i));
    response.q(i) = pi - p0;
    response.W.col(i) = wi - w0;
  }
  return response;
}

ChannelTransfer effective_transfer(const TwoQubitChannel& channel,
                                   BellLabel shared, BellLabel measured,
                                   double r, AveragingMode mode) {
  const MeasurementResponse response =
      measurement_response(channel, shared, measured, r);
  const Eigen::Matrix3d correction = bob_correction(shared, measured);
  ChannelTransfer transfer;
  if (mode == AveragingMode::ProbabilityWeighted) {
    transfer.c = 4.0 * correction * response.w0;
    transfer.T = 4.0 * correction * response.W;
    return transfer;
  }
  const auto conditional_bob = [&](const BlochVector& input) -> BlochVector {
    const double p = response.p0 + response.q.dot(input);
    if (p < kProbabilityFloor)
      throw std::runtime_error(
          "effective_transfer: outcome has vanishing probability");
    return correction * (response.w0 + response.W * input) / p;
  };
  transfer.c = conditional_bob(BlochVector::Zero());
  for (int i = 0; i < 3; ++i)
    transfer.T.col(i) = conditional_bob(BlochVector::Unit(i)) - transfer.c;
  return transfer;
}

ChannelTransfer effective_transfer(const BathSpec& bath,
                                   const CouplingConfig& couplings, double kt,
                                   BellLabel shared, BellLabel measured,
                                   double r, AveragingMode mode) {
  return effective_transfer(two_qubit_channel(bath, couplings, kt), shared,
                            measured, r, mode);
}

double fidelity(const BlochVector& input, const ChannelTransfer& transfer) {
  return 0.5 * (1.0 + input.dot(transfer.T * input + transfer.c));
}

double average_fidelity(const ChannelTransfer& transfer) {
  return 0.5 + transfer.T.trace() / 6.0;
}

double conditional_average_fidelity(const MeasurementResponse& response,
                                    const Eigen::Matrix3d& correction) {
  // uniform sphere average: Gauss-Legendre in cos(theta), uniform phi
  static const auto quad = gauss_legendre(64);
  constexpr int n_phi = 128;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < quad.first.size(); ++i) {
    const double u = quad.first(i);
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_phi;
      const BlochVector input(s * std::cos(phi), s * std::sin(phi), u);
      const double p = response.p0 + response.q.dot(input);
      double f = 0.5;  // neutral value on measure-zero degenerate nodes
      if (p >= kProbabilityFloor) {
        const BlochVector bob =
            correction * (response.w0 + response.W * input) / p;
        f = 0.5 * (1.0 + input.dot(bob));
      }
      sum += quad.second(i) * f;
    }
  }
  return sum / (2.0 * n_phi);
}

FidelitySeries run_protocol(const std::optional<BlochVector>& input,
                            BellLabel shared, double r, const BathSpec& bath,
                            const CouplingConfig& couplings,
                            std::vector<double> kt_grid, AveragingMode mode) {
  if (kt_grid.empty())
    throw std::invalid_argument("run_protocol: empty time grid");
  for (std::size_t i = 1; i < kt_grid.size(); ++i)
    if (!(kt_grid[i] > kt_grid[i - 1]))
      throw std::invalid_argument(
          "run_protocol: time grid must be strictly increasing");
  if (input && input->norm() > 1.0 + 1e-12)
    throw std::invalid_argument("run_protocol: Bloch vector outside sphere");

  const SectorChannelFamily family(bath, couplings);

  FidelitySeries series;
  series.n_spins = bath.n_spins;
  series.bath_model = bath.model;
  series.couplings = couplings;
  series.shared = shared;
  series.r = r;
  series.mode = mode;
  series.input = input;
  series.times = std::move(kt_grid);
  for (std::size_t o = 0; o < kBellLabels.size(); ++o) {
    series.outcomes[o].outcome = kBellLabels[o];
    series.outcomes[o].fidelity.reserve(series.times.size());
    series.outcomes[o].average_fidelity.reserve(series.times.size());
    series.outcomes[o].probability.reserve(series.times.size());
  }

  for (const double kt : series.times) {
    const TwoQubitChannel channel = family.channel_at(kt);
    for (std::size_t o = 0; o < kBellLabels.size(); ++o) {
      const BellLabel outcome = kBellLabels[o];
      const MeasurementResponse response =
          measurement_response(channel, shared, outcome, r);
      const Eigen::Matrix3d correction = bob_correction(shared, outcome);

      const double prob =
          response.p0 + (input ? response.q.dot(*input) : 0.0);
      double f_av = 0.0;
      double f = 0.0;
      if (mode == AveragingMode::ProbabilityWeighted) {
        const ChannelTransfer transfer{4.0 * correction * response.W,
                                       4.0 * correction * response.w0};
        f_av = average_fidelity(transfer);
        f = input ? fidelity(*input, transfer) : f_av;
      } else {
        f_av = conditional_average_fidelity(response, correction);
        if (input) {
          if (prob < kProbabilityFloor)
            throw std::runtime_error(
                "run_protocol: outcome has vanishing probability");
          const BlochVector bob =
              correction * (response.w0 + response.W * *input) / prob;
          f = 0.5 * (1.0 + input->dot(bob));
        } else {
          f = f_av;
        }
      }
      series.outcomes[o].fidelity.push_back(f);
      series.outcomes[o].average_fidelity.push_back(f_av);
      series.outcomes[o].probability.push_back(prob);
    }
  }
  return series;
}

}  // namespace telebath
