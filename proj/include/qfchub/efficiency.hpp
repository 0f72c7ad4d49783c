#pragma once

#include <vector>

namespace qfchub {

/// η(P) = η_max·sin²(√(η_nor·P)), P in mW, η_nor in mW⁻¹.
struct EfficiencyCurveParams {
  double eta_max = 0.0;
  double eta_nor = 0.0;
};

struct EfficiencySample {
  double power_mw = 0.0;
  double efficiency = 0.0;
};

double efficiency_model(double power_mw, const EfficiencyCurveParams& params);

/// Pump power of the first maximum, (π/2)²/η_nor.
double peak_power_mw(const EfficiencyCurveParams& params);

struct EfficiencyFit {
  EfficiencyCurveParams params;
  double residual_norm = 0.0;
  int evaluations = 0;
};

/// Least-squares fit. Throws DegenerateError for fewer than three points, a
/// collapsed power range or all-zero efficiencies, ConvergenceError when the
/// solver gives up.
EfficiencyFit fit_efficiency(const std::vector<EfficiencySample>& data);

struct PumpSplit {
  double p_ccw_mw = 0.0;
  double p_cw_mw = 0.0;
  double eta_ccw = 0.0;
  double eta_cw = 0.0;
  /// False when no split equalizes the arms to 1e-9; the split then
  /// minimizes the gap.
  bool equalized = true;
};

PumpSplit pump_balance(const EfficiencyCurveParams& ccw, const EfficiencyCurveParams& cw,
                       double total_power_mw);

}  // namespace qfchub
