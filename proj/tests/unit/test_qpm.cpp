#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qfchub/errors.hpp"
#include "qfchub/qpm.hpp"
#include "qfchub/tunability.hpp"

using namespace qfchub;

namespace {

SpectralPoint nm(double v) { return SpectralPoint::from_wavelength_nm(v); }

TEST(PumpFor, EnergyConservation) {
  EXPECT_NEAR(pump_for(nm(780.0), nm(1540.0)).wavelength_nm(), 1580.526316, 1e-6);
  EXPECT_NEAR(pump_for(nm(780.0), nm(1560.0)).wavelength_nm(), 1560.0, 1e-9);
  const auto p = pump_for(SpectralPoint::from_frequency_thz(384.200),
                          SpectralPoint::from_frequency_thz(194.700));
  EXPECT_NEAR(p.frequency_thz, 189.500, 1e-12);
  EXPECT_NEAR(p.wavelength_nm(), 1582.02, 0.005);
}

TEST(PumpFor, RejectsConvertedAboveSignal) {
  EXPECT_THROW(pump_for(nm(1540.0), nm(780.0)), DomainError);
  EXPECT_THROW(pump_for(nm(780.0), nm(780.0)), DomainError);
}

TEST(PolingPeriod, FrozenValues) {
  const auto& m = default_material();
  EXPECT_NEAR(solve_poling_period(nm(780.0), nm(1540.0), 48.0, m), 19.1736494057, 1e-8);
  EXPECT_NEAR(solve_poling_period(nm(493.0), nm(1540.0), 48.0, m), 5.9350778591, 1e-8);
}

TEST(PolingPeriod, ZeroesMismatchAtDesignPoint) {
  const auto& m = default_material();
  for (double s : {493.0, 650.0, 780.0, 934.0}) {
    const DeviceConfig d(solve_poling_period(nm(s), nm(1540.0), 48.0, m), 40.0, 48.0, m);
    EXPECT_LT(std::abs(phase_mismatch(make_triple(nm(s), nm(1540.0)), d)), 1e-6) << s;
  }
}

TEST(PhaseMismatch, SignFlipsWithDetuning) {
  const auto& m = default_material();
  const DeviceConfig d(solve_poling_period(nm(780.0), nm(1540.0), 48.0, m), 40.0, 48.0, m);
  const auto s = nm(780.0);
  const double nu_c = nm(1540.0).frequency_thz;
  const double up = phase_mismatch(make_triple(s, SpectralPoint::from_frequency_thz(nu_c + 0.5)), d);
  const double down =
      phase_mismatch(make_triple(s, SpectralPoint::from_frequency_thz(nu_c - 0.5)), d);
  EXPECT_NE(up, 0.0);
  EXPECT_LT(up * down, 0.0);
}

TEST(PhaseMismatch, SwapSymmetry) {
  const auto& m = default_material();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> sig(500.0, 900.0), conv(1100.0, 1700.0);
  for (int i = 0; i < 200; ++i) {
    const auto s = nm(sig(rng));
    const auto c = nm(conv(rng));
    if (c.frequency_thz >= s.frequency_thz) continue;
    const auto t = make_triple(s, c);
    const InteractionTriple swapped{t.signal, t.converted, t.pump};
    const DeviceConfig d(10.0, 40.0, 48.0, m);
    EXPECT_NEAR(phase_mismatch_unchecked(t, d), phase_mismatch_unchecked(swapped, d),
                1e-9 * std::abs(phase_mismatch_unchecked(t, d)) + 1e-9);
  }
}

TEST(PhaseMismatch, PropagatesValidity) {
  const DeviceConfig d(10.0, 40.0, 48.0, default_material());
  EXPECT_THROW(phase_mismatch(make_triple(nm(1200.0), nm(1540.0)), d), ValidityError);
}

TEST(PmEfficiency, Values) {
  EXPECT_DOUBLE_EQ(pm_efficiency(0.0, 40.0), 1.0);
  const double l = 0.040;
  EXPECT_NEAR(pm_efficiency(2.0 * std::numbers::pi / l, 40.0), 0.0, 1e-15);
  EXPECT_NEAR(pm_efficiency(2.0 * 0.559 / l, 40.0), 0.90, 0.005);
  EXPECT_NEAR(pm_efficiency(-2.0 * 0.559 / l, 40.0), 0.90, 0.005);
}

TEST(PmEfficiency, EvenAndBounded) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dk(-5e3, 5e3);
  for (int i = 0; i < 1000; ++i) {
    const double k = dk(rng);
    const double e = pm_efficiency(k, 40.0);
    EXPECT_GE(e, 0.0);
    EXPECT_LE(e, 1.0);
    EXPECT_EQ(e, pm_efficiency(-k, 40.0));
  }
}

TEST(Sinc, SeriesBranchJoinsSmoothly) {
  for (double x : {1e-3, 2e-4, 1.0001e-4, 0.9999e-4, 1e-6, 0.0}) {
    const double exact = x == 0.0 ? 1.0 : std::sin(x) / x;
    EXPECT_NEAR(sinc(x), exact, 1e-15) << x;
  }
}

TEST(FirstOrder, FrozenValues) {
  const auto& m = default_material();
  EXPECT_NEAR(first_order_coefficient(1.54, 1.58, 48.0, m), 9.157659e-4, 1e-9);
  EXPECT_NEAR(first_order_coefficient(1.54, 1.70, 48.0, m), 2.8845120e-3, 1e-9);
  EXPECT_NEAR(first_order_coefficient(1.54, 2.35, 48.0, m), 5.932132e-4, 1e-9);
}

TEST(FirstOrder, VanishesAtDegeneracy) {
  EXPECT_EQ(first_order_coefficient(1.56, 1.56, 48.0, default_material()), 0.0);
}

TEST(FirstOrder, EqualsGroupIndexDifference) {
  const auto& m = default_material();
  for (double p : {1.58, 1.7, 2.0, 2.35, 2.875}) {
    EXPECT_NEAR(first_order_coefficient(1.54, p, 48.0, m),
                group_index(m, 1.54, 48.0) - group_index(m, p, 48.0), 1e-12);
  }
}

// Converted up by Δν and pump down by Δν: dΔk/dΔν·c/(2π) should equal the
// group-index difference.
TEST(FirstOrder, MatchesNumericSlope) {
  const auto& m = default_material();
  const auto s = nm(780.0);
  const DeviceConfig d(solve_poling_period(s, nm(1540.0), 48.0, m), 40.0, 48.0, m);
  const double nu = nm(1540.0).frequency_thz;
  const double h = 1e-3;  // THz
  const double dk_up = phase_mismatch(make_triple(s, SpectralPoint::from_frequency_thz(nu + h)), d);
  const double dk_dn = phase_mismatch(make_triple(s, SpectralPoint::from_frequency_thz(nu - h)), d);
  // Δk in rad/m; 2πΔν/c with ν in THz and c in µm·THz gives rad/µm.
  const double slope = (dk_up - dk_dn) / (2.0 * h) / (kTwoPi / kSpeedOfLight * kPerMicronToPerMeter);
  const auto pump = pump_for(s, nm(1540.0));
  const double coeff = first_order_coefficient(1.54, pump.wavelength_um, 48.0, m);
  EXPECT_NEAR(-slope, coeff, 1e-3 * std::abs(coeff));
  // Same check against group indices directly.
  EXPECT_NEAR(-slope, group_index(m, 1.54, 48.0) - group_index(m, pump.wavelength_um, 48.0),
              1e-4 * std::abs(coeff) + 1e-3 * std::abs(coeff));
}

TEST(FirstOrder, FarPumpSmallerThanNearPump) {
  // 934 nm signal into 1540 nm needs a ~2373 nm pump.
  const auto& m = default_material();
  const auto pump = pump_for(nm(934.0), nm(1540.0));
  EXPECT_NEAR(pump.wavelength_nm(), 2373.5, 0.1);
  EXPECT_NEAR(first_order_coefficient(1.54, pump.wavelength_um, 48.0, m), 2.272257e-4, 1e-8);
  EXPECT_LT(std::abs(first_order_coefficient(1.54, 2.35, 48.0, m)),
            std::abs(first_order_coefficient(1.54, 1.58, 48.0, m)));
}

// Least-squares fit of Δk(δ) = a·δ + b·δ² over ±1 THz.
std::pair<double, double> fit_linear_quadratic(const SpectralPoint& s, double target_nm,
                                               const SellmeierModel& m) {
  const DeviceConfig d(solve_poling_period(s, nm(target_nm), 48.0, m), 40.0, 48.0, m);
  const double nu = nm(target_nm).frequency_thz;
  double s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0;
  for (int i = -20; i <= 20; ++i) {
    const double x = 0.05 * i;
    const double y = phase_mismatch(make_triple(s, SpectralPoint::from_frequency_thz(nu + x)), d);
    s11 += x * x, s12 += x * x * x, s22 += x * x * x * x, r1 += x * y, r2 += x * x * y;
  }
  const double det = s11 * s22 - s12 * s12;
  return {(r1 * s22 - r2 * s12) / det, (s11 * r2 - s12 * r1) / det};
}

TEST(SweetSpot, LinearTermVanishesAtDegeneracy) {
  const auto& m = default_material();
  const auto [lin_sweet, quad_sweet] = fit_linear_quadratic(nm(770.0), 1540.0, m);
  const auto [lin_work, quad_work] = fit_linear_quadratic(nm(780.0), 1540.0, m);
  EXPECT_LT(std::abs(lin_sweet), 1e-3 * std::abs(lin_work));

  // |Δk(δ)| ≤ C·δ² up to 1 THz, with C the fitted quadratic coefficient plus slack.
  const DeviceConfig d(solve_poling_period(nm(770.0), nm(1540.0), 48.0, m), 40.0, 48.0, m);
  const double nu = nm(1540.0).frequency_thz;
  const double c_bound = 1.05 * std::abs(quad_sweet);
  for (double x : {-1.0, -0.5, -0.1, 0.1, 0.5, 1.0}) {
    const double dk =
        phase_mismatch(make_triple(nm(770.0), SpectralPoint::from_frequency_thz(nu + x)), d);
    EXPECT_LE(std::abs(dk), c_bound * x * x) << x;
  }
}

TEST(SweetSpotReport, Flags) {
  const auto& m = default_material();
  const auto r = sweet_spot_report(780.0, 1540.0, 48.0, m);
  EXPECT_TRUE(r.is_second_harmonic_midpoint);
  EXPECT_DOUBLE_EQ(r.midpoint_wavelength_nm, 1560.0);
  EXPECT_NEAR(r.pump_nm, 1580.526, 1e-3);
  EXPECT_FALSE(sweet_spot_report(700.0, 1540.0, 48.0, m).is_second_harmonic_midpoint);
  EXPECT_LT(std::abs(r.first_order_coefficient),
            std::abs(first_order_coefficient(1.54, 1.70, 48.0, m)));
}

TEST(DeviceConfig, RejectsNonPhysical) {
  EXPECT_THROW(DeviceConfig(0.0, 40.0, 48.0, default_material()), DomainError);
  EXPECT_THROW(DeviceConfig(19.0, -1.0, 48.0, default_material()), DomainError);
}

}  // namespace
