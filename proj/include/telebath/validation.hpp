#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "telebath/channel.hpp"

namespace telebath {

/// One validation check: a named residual compared against a pinned
/// threshold.
struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double threshold = 0.0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  void merge(const ValidationReport& other);
  std::string to_json() const;
};

/// Exact combinatorial identities behind the sector weights for
/// n = 2, 4, ..., 22: completeness (sum of multiplet dimensions is 2^n)
/// and the collective-spin second moment (sum lambda_I I(I+1) = 3n/4),
/// both evaluated in integer arithmetic, plus unit weight sums in
/// floating point for both bath models.
ValidationReport weight_sum_suite();

/// Agreement between the sector-decomposed channel and the explicit
/// full-space propagator for small baths (n = 2, 4, 6), both bath
/// models, randomized couplings and inputs drawn from `seed`.
ValidationReport oracle_agreement_suite(std::uint64_t seed);

/// Short-time quadratic decay of 1 - F_av against the closed-form
/// rates for n = 22, delta in {-1, 0, 0.5}.
ValidationReport short_time_suite();

/// Perfect singlet-outcome teleportation for equal couplings.  The
/// couplings are a parameter so the check is fault-injectable; the
/// nominal call uses couplings_from_delta(1).
ValidationReport dark_subspace_suite(const CouplingConfig& couplings,
                                     int n_spins = 22);

/// All suites with nominal parameters.
ValidationReport run_all_validations(std::uint64_t seed);

}  // namespace telebath
