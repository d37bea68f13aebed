#include "telebath/validation.hpp"

#include <cmath>
#include <random>
#include <string>

#include "json.hpp"
#include "telebath/analytics.hpp"
#include "telebath/io.hpp"
#include "telebath/teleport.hpp"

namespace telebath {

namespace {

CheckResult make_check(std::string name, double residual, double threshold) {
  CheckResult check;
  check.name = std::move(name);
  check.residual = residual;
  check.threshold = threshold;
  check.passed = residual <= threshold;
  return check;
}

std::vector<double> linspace(double start, double stop, int count) {
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    grid[static_cast<std::size_t>(i)] =
        start + (stop - start) * i / (count - 1);
  return grid;
}

}  // namespace

bool ValidationReport::all_passed() const {
  for (const CheckResult& check : checks)
    if (!check.passed) return false;
  return true;
}

void ValidationReport::merge(const ValidationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string ValidationReport::to_json() const {
  nlohmann::json doc;
  doc["all_passed"] = all_passed();
  doc["checks"] = nlohmann::json::array();
  for (const CheckResult& check : checks) {
    nlohmann::json entry;
    entry["name"] = check.name;
    entry["passed"] = check.passed;
    entry["residual"] = check.residual;
    entry["threshold"] = check.threshold;
    doc["checks"].push_back(entry);
  }
  return doc.dump(2) + "\n";
}

ValidationReport weight_sum_suite() {
  ValidationReport report;
  for (int n = 2; n <= 22; n += 2) {
    // completeness: sum over sectors of multiplicity * (2I+1) = 2^n
    // and second moment: sum of multiplicity * (2I+1) * (2I)(2I+2)
    // = 3n 2^n, both exact in 64-bit integers
    std::uint64_t dims = 0;
    std::uint64_t moment = 0;
    for (int twice_i = 0; twice_i <= n; twice_i += 2) {
      const auto g = static_cast<std::uint64_t>(
          sector_multiplicity(n, HalfInt::from_twice(twice_i)));
      dims += g * static_cast<std::uint64_t>(twice_i + 1);
      moment += g * static_cast<std::uint64_t>(twice_i + 1) *
                static_cast<std::uint64_t>(twice_i) *
                static_cast<std::uint64_t>(twice_i + 2);
    }
    const std::uint64_t total = std::uint64_t(1) << n;
    const auto int_residual = [](std::uint64_t a, std::uint64_t b) {
      return a >= b ? static_cast<double>(a - b) : static_cast<double>(b - a);
    };
    report.checks.push_back(make_check(
        "weight-completeness-n" + std::to_string(n),
        int_residual(dims, total), 0.0));
    report.checks.push_back(make_check(
        "weight-second-moment-n" + std::to_string(n),
        int_residual(moment, 3 * static_cast<std::uint64_t>(n) * total), 0.0));

    double unpolarized_sum = 0.0;
    for (const auto& [spin, weight] : unpolarized_sector_weights(n))
      unpolarized_sum += weight;
    double polarized_sum = 0.0;
    for (const auto& [spin, weight] : polarized_sector_weights(n))
      polarized_sum += weight;
    report.checks.push_back(make_check(
        "weight-unit-sum-unpolarized-n" + std::to_string(n),
        std::abs(unpolarized_sum - 1.0), 1e-12));
    report.checks.push_back(make_check(
        "weight-unit-sum-polarized-n" + std::to_string(n),
        std::abs(polarized_sum - 1.0), 1e-12));
  }
  return report;
}

ValidationReport oracle_agreement_suite(std::uint64_t seed) {
  ValidationReport report;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coupling_dist(-1.5, 1.5);
  std::uniform_real_distribution<double> time_dist(0.0, 3.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  for (const int n : {2, 4, 6}) {
    for (const BathModel model :
         {BathModel::Unpolarized, BathModel::PolarizedGaussianI2}) {
      const BathSpec bath = model == BathModel::Unpolarized
                                ? unpolarized_bath(n)
                                : polarized_bath(n);
      double worst = 0.0;
      for (int trial = 0; trial < 3; ++trial) {
        const CouplingConfig couplings{coupling_dist(rng),
                                       coupling_dist(rng)};
        // random input: Bloch vector in the ball, random shared label
        BlochVector input(unit(rng), unit(rng), unit(rng));
        if (input.norm() > 1.0) input /= input.norm();
        const BellLabel shared =
            kBellLabels[static_cast<std::size_t>(rng() % 4)];
        const Eigen::MatrixXcd initial = initial_joint_state(input, shared);

        const SectorChannelFamily family(bath, couplings);
        for (int sample = 0; sample < 5; ++sample) {
          const double kt = time_dist(rng);
          const Eigen::MatrixXcd via_sectors =
              family.channel_at(kt).apply_to_joint(initial);
          const Eigen::MatrixXcd via_full =
              full_space_evolve(n, couplings, initial, model, kt);
          worst = std::max(
              worst, (via_sectors - via_full).cwiseAbs().maxCoeff());
        }
      }
      report.checks.push_back(make_check(
          "oracle-agreement-" + std::string(to_string(model)) + "-n" +
              std::to_string(n),
          worst, 1e-10));
    }
  }
  return report;
}

ValidationReport short_time_suite() {
  ValidationReport report;
  const int n = 22;
  const BathSpec bath = unpolarized_bath(n);
  const std::vector<double> grid = linspace(0.0, 0.05, 26);
  for (const double delta : {-1.0, 0.0, 0.5}) {
    const CouplingConfig couplings = couplings_from_delta(delta);
    const DecoherenceTimescales scales =
        decoherence_timescales(couplings, n);
    const FidelitySeries series =
        run_protocol(std::nullopt, BellLabel::S0, 1.0, bath, couplings, grid,
                     AveragingMode::ProbabilityWeighted);
    for (const std::size_t index : {std::size_t{0}, std::size_t{1}}) {
      const OutcomeSeries& outcome = series.outcomes[index];
      std::vector<double> loss(outcome.average_fidelity.size());
      for (std::size_t i = 0; i < loss.size(); ++i)
        loss[i] = 1.0 - outcome.average_fidelity[i];
      const QuadraticFit fit = fit_quadratic(series.times, loss);
      const double expected = outcome.outcome == BellLabel::S0
                                  ? scales.rate_singlet
                                  : scales.rate_triplet;
      // relative error of the fitted quadratic coefficient; couplings
      // have unit norm so rates are directly in (Kt)^2 units
      const double residual =
          expected == 0.0 ? std::abs(fit.beta)
                          : std::abs(fit.beta / expected - 1.0);
      report.checks.push_back(make_check(
          "short-time-" + std::string(to_string(outcome.outcome)) +
              "-delta" + format_double(delta),
          residual, 0.02));
    }
  }
  return report;
}

ValidationReport dark_subspace_suite(const CouplingConfig& couplings,
                                     int n_spins) {
  ValidationReport report;
  const BathSpec bath = unpolarized_bath(n_spins);
  const FidelitySeries series =
      run_protocol(std::nullopt, BellLabel::S0, 1.0, bath, couplings,
                   linspace(0.0, 3.0, 31), AveragingMode::ProbabilityWeighted);
  const OutcomeSeries& singlet = series.outcomes[0];
  double fidelity_residual = 0.0;
  double probability_residual = 0.0;
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    fidelity_residual = std::max(
        fidelity_residual, std::abs(singlet.average_fidelity[i] - 1.0));
    probability_residual = std::max(
        probability_residual, std::abs(singlet.probability[i] - 0.25));
  }
  report.checks.push_back(
      make_check("dark-subspace-fidelity", fidelity_residual, 1e-10));
  report.checks.push_back(
      make_check("dark-subspace-probability", probability_residual, 1e-10));
  return report;
}

ValidationReport run_all_validations(std::uint64_t seed) {
  ValidationReport report = weight_sum_suite();
  report.merge(oracle_agreement_suite(seed));
  report.merge(short_time_suite());
  report.merge(dark_subspace_suite(couplings_from_delta(1.0)));
  return report;
}

}  // namespace telebath
