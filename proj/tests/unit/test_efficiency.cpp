#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qfchub/efficiency.hpp"
#include "qfchub/errors.hpp"

using namespace qfchub;

namespace {

std::vector<EfficiencySample> synthetic(const EfficiencyCurveParams& p, double noise = 0.0,
                                        std::mt19937_64* rng = nullptr) {
  std::normal_distribution<double> g(0.0, noise);
  std::vector<EfficiencySample> out;
  for (int i = 1; i <= 20; ++i) {
    const double power = 15.0 * i;  // 15..300 mW
    double eta = efficiency_model(power, p);
    if (rng) eta *= 1.0 + g(*rng);
    out.push_back({power, eta});
  }
  return out;
}

TEST(Model, Values) {
  const EfficiencyCurveParams p{0.44, 0.013};
  EXPECT_EQ(efficiency_model(0.0, p), 0.0);
  EXPECT_NEAR(peak_power_mw(p), 189.8000846, 1e-6);
  EXPECT_NEAR(efficiency_model(peak_power_mw(p), p), 0.44, 1e-15);
  EXPECT_NEAR(efficiency_model(1e-3, p), 0.44 * 0.013 * 1e-3, 1e-10);
}

TEST(Fit, NoiselessRecovery) {
  for (const EfficiencyCurveParams truth : {EfficiencyCurveParams{0.44, 0.013},
                                            EfficiencyCurveParams{0.40, 0.018}}) {
    const auto fit = fit_efficiency(synthetic(truth));
    EXPECT_NEAR(fit.params.eta_max, truth.eta_max, 1e-6 * truth.eta_max);
    EXPECT_NEAR(fit.params.eta_nor, truth.eta_nor, 1e-6 * truth.eta_nor);
    EXPECT_LT(fit.residual_norm, 1e-9);
  }
}

TEST(Fit, TwoPercentNoiseWithinTenPercent) {
  std::mt19937_64 rng(31337);
  for (const EfficiencyCurveParams truth : {EfficiencyCurveParams{0.44, 0.013},
                                            EfficiencyCurveParams{0.40, 0.018}}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto fit = fit_efficiency(synthetic(truth, 0.02, &rng));
      EXPECT_NEAR(fit.params.eta_max, truth.eta_max, 0.1 * truth.eta_max) << trial;
      EXPECT_NEAR(fit.params.eta_nor, truth.eta_nor, 0.1 * truth.eta_nor) << trial;
    }
  }
}

TEST(Fit, Deterministic) {
  std::mt19937_64 rng(5);
  const auto data = synthetic({0.44, 0.013}, 0.02, &rng);
  const auto a = fit_efficiency(data), b = fit_efficiency(data);
  EXPECT_EQ(a.params.eta_max, b.params.eta_max);
  EXPECT_EQ(a.params.eta_nor, b.params.eta_nor);
}

TEST(Fit, DegenerateInputs) {
  EXPECT_THROW(fit_efficiency({{10, 0.1}, {20, 0.2}}), DegenerateError);
  EXPECT_THROW(fit_efficiency({{10, 0.0}, {20, 0.0}, {30, 0.0}}), DegenerateError);
  EXPECT_THROW(fit_efficiency({{10, 0.1}, {10, 0.1}, {10, 0.1}}), DegenerateError);
  EXPECT_THROW(fit_efficiency({{-10, 0.1}, {10, 0.1}, {20, 0.1}}), DomainError);
}

TEST(Balance, IdenticalArmsSplitEvenly) {
  const EfficiencyCurveParams p{0.44, 0.013};
  const auto s = pump_balance(p, p, 250.0);
  EXPECT_DOUBLE_EQ(s.p_ccw_mw, 125.0);
  EXPECT_DOUBLE_EQ(s.p_cw_mw, 125.0);
  EXPECT_TRUE(s.equalized);
}

TEST(Balance, UnequalArmsAgainstDenseScan) {
  const EfficiencyCurveParams ccw{0.44, 0.013}, cw{0.40, 0.018};
  const auto s = pump_balance(ccw, cw, 250.0);
  EXPECT_TRUE(s.equalized);
  EXPECT_NEAR(s.p_ccw_mw + s.p_cw_mw, 250.0, 1e-12);
  EXPECT_NEAR(s.eta_ccw, s.eta_cw, 1e-9);
  EXPECT_NEAR(efficiency_model(s.p_ccw_mw, ccw), efficiency_model(s.p_cw_mw, cw), 1e-9);

  // Dense scan: the gap changes sign within one grid step of the bisection root.
  double best = 0.0, best_gap = 1e9;
  for (int k = 0; k <= 250000; ++k) {
    const double p = 250.0 * k / 250000.0;
    const double gap = std::abs(efficiency_model(p, ccw) - efficiency_model(250.0 - p, cw));
    if (gap < best_gap) best_gap = gap, best = p;
  }
  EXPECT_NEAR(s.p_ccw_mw, best, 2e-3);
}

TEST(Balance, ZeroTotal) {
  const auto s = pump_balance({0.44, 0.013}, {0.40, 0.018}, 0.0);
  EXPECT_EQ(s.p_ccw_mw, 0.0);
  EXPECT_EQ(s.p_cw_mw, 0.0);
  EXPECT_EQ(s.eta_ccw, 0.0);
  EXPECT_EQ(s.eta_cw, 0.0);
  EXPECT_THROW(pump_balance({0.44, 0.013}, {0.40, 0.018}, -1.0), DomainError);
}

}  // namespace
