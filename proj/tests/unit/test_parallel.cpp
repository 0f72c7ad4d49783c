// OpenMP kernels against their serial references.

#include <gtest/gtest.h>

#include "qfchub/dwdm.hpp"
#include "qfchub/io.hpp"
#include "qfchub/tunability.hpp"

using namespace qfchub;

namespace {

void expect_same(const TuningResult& a, const TuningResult& b) {
  EXPECT_EQ(a.lo_nm, b.lo_nm);
  EXPECT_EQ(a.hi_nm, b.hi_nm);
  EXPECT_EQ(a.width_nm, b.width_nm);
  EXPECT_EQ(a.width_thz, b.width_thz);
  EXPECT_EQ(a.channel_count, b.channel_count);
  EXPECT_EQ(a.limiting_constraint, b.limiting_constraint);
  EXPECT_EQ(a.short_side_limit, b.short_side_limit);
  EXPECT_EQ(a.long_side_limit, b.long_side_limit);
  EXPECT_EQ(a.empty, b.empty);
  EXPECT_EQ(a.extrapolated, b.extrapolated);
}

TuningConstraints sep20() {
  TuningConstraints c;
  c.mode = ConstraintMode::separation(20.0);
  return c;
}

TEST(Parallel, HubSweepMatchesSerialForAnyWorkerCount) {
  const auto& m = default_material();
  const auto ref = reference::hub_sweep(500.0, 1000.0, 2.5, 1540.0, 40.0, 48.0, m, sep20());
  for (int workers : {1, 2, 4, 8}) {
    const auto par = hub_sweep(500.0, 1000.0, 2.5, 1540.0, 40.0, 48.0, m, sep20(), workers);
    ASSERT_EQ(par.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      EXPECT_EQ(par[i].signal_nm, ref[i].signal_nm);
      expect_same(par[i].tuning, ref[i].tuning);
    }
  }
}

TEST(Parallel, HubSweepCsvIsByteIdentical) {
  const auto& m = default_material();
  const auto one = io::render_table(
      io::tuning_table(hub_sweep(400.0, 1000.0, 1.0, 1540.0, 40.0, 48.0, m, sep20(), 1)),
      io::Format::kCsv);
  for (int workers : {4, 8}) {
    EXPECT_EQ(one, io::render_table(io::tuning_table(hub_sweep(400.0, 1000.0, 1.0, 1540.0, 40.0,
                                                               48.0, m, sep20(), workers)),
                                    io::Format::kCsv));
  }
}

TEST(Parallel, RepeatedRunsAgree) {
  const auto& m = default_material();
  const auto a = hub_sweep(700.0, 800.0, 1.0, 1540.0, 40.0, 48.0, m, sep20(), 3);
  const auto b = hub_sweep(700.0, 800.0, 1.0, 1540.0, 40.0, 48.0, m, sep20(), 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) expect_same(a[i].tuning, b[i].tuning);
}

TEST(Parallel, SpectrumMatchesSerial) {
  const auto d = design_device(780.0, 1540.0, 40.0, 48.0, default_material());
  const auto ref = reference::pm_spectrum(780.0, 1540.0, d, 25.0, 2.0);
  for (int workers : {1, 3, 8}) {
    const auto par = pm_spectrum(780.0, 1540.0, d, 25.0, 2.0, workers);
    ASSERT_EQ(par.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      EXPECT_EQ(par[i].converted_thz, ref[i].converted_thz);
      EXPECT_EQ(par[i].efficiency, ref[i].efficiency);
      EXPECT_EQ(par[i].extrapolated, ref[i].extrapolated);
    }
  }
}

TEST(Parallel, RelativeEfficiencyCurveMatchesSerial) {
  const DwdmGrid grid;
  const LaserSpec laser;
  const auto d = plan_device(grid, 384.2, 40.0, 48.0, default_material());
  const auto ref =
      reference::relative_efficiency_curve(d, 384.2, laser.min_thz(), laser.max_thz(), 5.0);
  for (int workers : {1, 4}) {
    const auto par =
        relative_efficiency_curve(d, 384.2, laser.min_thz(), laser.max_thz(), 5.0, workers);
    ASSERT_EQ(par.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      EXPECT_EQ(par[i].pump_thz, ref[i].pump_thz);
      EXPECT_EQ(par[i].relative_efficiency, ref[i].relative_efficiency);
    }
  }
}

}  // namespace
