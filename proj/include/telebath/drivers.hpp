#pragma once

#include "telebath/io.hpp"
#include "telebath/validation.hpp"

namespace telebath {

/// Bell-measurement fidelity curves for both sectors over the time
/// grid: columns Kt, f_av_s0, f_av_t0, prob_s0, prob_t0.  Writes the
/// CSV to config.out plus a JSON sidecar.  Defaults reproduce the
/// unpolarized delta = -1 comparison at N = 22.
void cmd_fig1(const RunConfig& config);

/// T0-outcome fidelity for inputs along the bath polarization axis
/// (anti-aligned, -z) and transverse to it (x): columns Kt,
/// f_parallel, f_perpendicular.  Defaults use a polarized bath with
/// equal couplings.
void cmd_fig2(const RunConfig& config);

/// Long-format sweep over (delta, r, label, mode): columns delta, r,
/// label, mode, Kt, f_av, probability; one row per tuple and time.
void cmd_sweep(const RunConfig& config);

/// Run all validation suites; writes the JSON report to config.out if
/// set, otherwise prints it.  Returns the report for exit-code logic.
ValidationReport cmd_validate(const RunConfig& config);

}  // namespace telebath
