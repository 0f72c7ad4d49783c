#include "qfchub/tunability.hpp"

#include <cmath>
#include <optional>

#include <omp.h>

#include "kernels.hpp"
#include "qfchub/errors.hpp"

namespace qfchub {

namespace detail {

std::optional<SpectrumPoint> spectrum_sample(const SpectralPoint& signal, double converted_thz,
                                             const DeviceConfig& device) {
  const double pump_thz = signal.frequency_thz - converted_thz;
  if (!(pump_thz > 0.0) || !(converted_thz > 0.0)) return std::nullopt;
  const InteractionTriple t{signal, SpectralPoint::from_frequency_thz(pump_thz),
                            SpectralPoint::from_frequency_thz(converted_thz)};
  SpectrumPoint p;
  p.converted_thz = converted_thz;
  p.pump_thz = pump_thz;
  p.converted_nm = t.converted.wavelength_nm();
  p.pump_nm = t.pump.wavelength_nm();
  p.efficiency = pm_efficiency(phase_mismatch_unchecked(t, device), device.length_mm);
  p.extrapolated = !device.material.in_validity(t.converted.wavelength_um, device.temperature_c) ||
                   !device.material.in_validity(t.pump.wavelength_um, device.temperature_c);
  return p;
}

SymmetricGrid make_grid(double center_thz, double halfwidth_thz, double step_ghz) {
  if (!(step_ghz > 0.0)) throw DomainError("scan step must be positive");
  if (!(halfwidth_thz >= 0.0)) throw DomainError("scan window must be non-negative");
  const double step = step_ghz / kGigahertzPerTerahertz;
  const auto half = static_cast<std::size_t>(std::floor(halfwidth_thz / step + 1e-9));
  return {center_thz, step, half};
}

}  // namespace detail

namespace {

struct Verdict {
  bool ok = true;
  LimitingConstraint reason = LimitingConstraint::kThreshold;
  bool extrapolated = false;
};

// Evaluates constraints and efficiency at one converted frequency for a
// fixed signal and device.
class IntervalProbe {
 public:
  IntervalProbe(const SpectralPoint& signal, const DeviceConfig& device,
                const TuningConstraints& constraints)
      : signal_(signal), device_(device), constraints_(constraints) {}

  Verdict operator()(double converted_thz) const {
    Verdict v;
    const double pump_thz = signal_.frequency_thz - converted_thz;
    if (!(pump_thz > 0.0) || !(converted_thz > 0.0)) {
      return {false, LimitingConstraint::kDomainEdge, false};
    }
    const double lc_um = kSpeedOfLight / converted_thz;
    const double lp_um = kSpeedOfLight / pump_thz;
    const auto& mat = device_.material;
    const bool inside = mat.in_validity(lc_um, device_.temperature_c) &&
                        mat.in_validity(lp_um, device_.temperature_c);
    if (!inside) {
      if (!constraints_.allow_extrapolation) {
        return {false, LimitingConstraint::kDomainEdge, false};
      }
      v.extrapolated = true;
    }
    const double lc_nm = lc_um * kNanometersPerMicron;
    const double lp_nm = lp_um * kNanometersPerMicron;
    const auto& mode = constraints_.mode;
    if (mode.kind == ConstraintKind::kMaxConvertedWavelength) {
      if (lc_nm > mode.value_nm) return {false, LimitingConstraint::kCutoff, v.extrapolated};
      if (!(lc_nm < lp_nm)) return {false, LimitingConstraint::kSeparation, v.extrapolated};
    } else if (std::abs(lp_nm - lc_nm) < mode.value_nm) {
      return {false, LimitingConstraint::kSeparation, v.extrapolated};
    }
    const InteractionTriple t{signal_, SpectralPoint{lp_um, pump_thz},
                              SpectralPoint{lc_um, converted_thz}};
    const double eff = pm_efficiency(phase_mismatch_unchecked(t, device_), device_.length_mm);
    if (eff < constraints_.efficiency_threshold) {
      return {false, LimitingConstraint::kThreshold, v.extrapolated};
    }
    return v;
  }

 private:
  SpectralPoint signal_;
  const DeviceConfig& device_;
  const TuningConstraints& constraints_;
};

struct Edge {
  double frequency_thz = 0.0;  // last admissible frequency
  LimitingConstraint reason = LimitingConstraint::kThreshold;
  bool extrapolated = false;
};

// Walks outward from the center in coarse steps, then bisects the first
// failing bracket down to the refinement tolerance.
Edge find_edge(const IntervalProbe& probe, double center_thz, double direction,
               const TuningConstraints& c) {
  const double coarse = c.coarse_step_ghz / kGigahertzPerTerahertz;
  const double tol = c.refine_tolerance_ghz / kGigahertzPerTerahertz;
  bool extrapolated = false;
  double good = center_thz;
  double bad = 0.0;
  bool found_bad = false;
  for (long k = 1;; ++k) {
    double offset = static_cast<double>(k) * coarse;
    const bool at_edge = offset >= c.scan_halfwidth_thz;
    if (at_edge) offset = c.scan_halfwidth_thz;
    const double f = center_thz + direction * offset;
    const Verdict v = probe(f);
    extrapolated = extrapolated || v.extrapolated;
    if (!v.ok) {
      bad = f;
      found_bad = true;
      break;
    }
    good = f;
    if (at_edge) break;
  }
  if (!found_bad) return {good, LimitingConstraint::kScanEdge, extrapolated};

  LimitingConstraint reason = probe(bad).reason;
  while (std::abs(bad - good) > tol) {
    const double mid = 0.5 * (good + bad);
    const Verdict v = probe(mid);
    extrapolated = extrapolated || v.extrapolated;
    if (v.ok) {
      good = mid;
    } else {
      bad = mid;
      reason = v.reason;
    }
  }
  return {good, reason, extrapolated};
}

int rank(LimitingConstraint c) {
  switch (c) {
    case LimitingConstraint::kCutoff:
    case LimitingConstraint::kSeparation:
      return 3;
    case LimitingConstraint::kScanEdge:
      return 2;
    case LimitingConstraint::kDomainEdge:
      return 1;
    case LimitingConstraint::kThreshold:
      return 0;
  }
  return 0;
}

double solve_period(const SpectralPoint& signal, const SpectralPoint& converted,
                    double temperature_c, const SellmeierModel& material,
                    bool allow_extrapolation) {
  if (!allow_extrapolation) {
    return solve_poling_period(signal, converted, temperature_c, material);
  }
  const InteractionTriple t = make_triple(signal, converted);
  const double imbalance = wavevector_imbalance_unchecked(t, material, temperature_c);
  if (!(imbalance > 0.0)) {
    throw DomainError("no first-order QPM solution: k_s - k_p - k_c is not positive");
  }
  return kTwoPi / imbalance * kPerMicronToPerMeter;
}

}  // namespace

std::string to_string(LimitingConstraint c) {
  switch (c) {
    case LimitingConstraint::kThreshold:
      return "threshold";
    case LimitingConstraint::kCutoff:
      return "cutoff";
    case LimitingConstraint::kSeparation:
      return "separation";
    case LimitingConstraint::kScanEdge:
      return "scan_edge";
    case LimitingConstraint::kDomainEdge:
      return "domain_edge";
  }
  return "unknown";
}

void TuningConstraints::validate() const {
  if (!(efficiency_threshold > 0.0 && efficiency_threshold < 1.0)) {
    throw DomainError("efficiency threshold must lie in (0, 1)");
  }
  if (!(mode.value_nm >= 0.0)) throw DomainError("constraint value must be non-negative");
  if (!(scan_halfwidth_thz > 0.0)) throw DomainError("scan halfwidth must be positive");
  if (!(coarse_step_ghz > 0.0)) throw DomainError("coarse step must be positive");
  if (!(refine_tolerance_ghz > 0.0)) throw DomainError("refinement tolerance must be positive");
  if (!(channel_spacing_ghz > 0.0)) throw DomainError("channel spacing must be positive");
}

DeviceConfig design_device(double signal_nm, double target_nm, double length_mm,
                           double temperature_c, const SellmeierModel& material,
                           bool allow_extrapolation) {
  const auto signal = SpectralPoint::from_wavelength_nm(signal_nm);
  const auto target = SpectralPoint::from_wavelength_nm(target_nm);
  const double period = solve_period(signal, target, temperature_c, material, allow_extrapolation);
  return DeviceConfig(period, length_mm, temperature_c, material);
}

long channel_count(double width_thz, double spacing_ghz) {
  if (!(spacing_ghz > 0.0)) throw DomainError("channel spacing must be positive");
  if (!(width_thz >= 0.0)) throw DomainError("channel width must be non-negative");
  if (width_thz == 0.0) return 0;
  const double ratio = width_thz * kGigahertzPerTerahertz / spacing_ghz;
  return static_cast<long>(std::floor(ratio * (1.0 + 1e-12)));
}

std::vector<SpectrumPoint> pm_spectrum(double signal_nm, double target_nm,
                                       const DeviceConfig& device, double halfwidth_thz,
                                       double step_ghz, int workers) {
  const auto signal = SpectralPoint::from_wavelength_nm(signal_nm);
  const auto grid = detail::make_grid(frequency_from_wavelength_um(target_nm * kMicronsPerNanometer),
                                      halfwidth_thz, step_ghz);
  const auto n = static_cast<long>(grid.size());
  std::vector<std::optional<SpectrumPoint>> samples(grid.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    samples[i] = detail::spectrum_sample(signal, grid.at(static_cast<std::size_t>(i)), device);
  }

  std::vector<SpectrumPoint> out;
  out.reserve(samples.size());
  for (auto& s : samples) {
    if (s) out.push_back(*s);
  }
  return out;
}

TuningResult tuning_range(double signal_nm, double target_nm, double length_mm,
                          double temperature_c, const SellmeierModel& material,
                          const TuningConstraints& constraints) {
  constraints.validate();
  const auto signal = SpectralPoint::from_wavelength_nm(signal_nm);
  const auto target = SpectralPoint::from_wavelength_nm(target_nm);
  const InteractionTriple center = make_triple(signal, target);
  if (!constraints.allow_extrapolation) {
    for (const auto* p : {&center.signal, &center.pump, &center.converted}) {
      material.require_valid(p->wavelength_um, temperature_c);
    }
  }
  const DeviceConfig device = design_device(signal_nm, target_nm, length_mm, temperature_c,
                                            material, constraints.allow_extrapolation);

  TuningResult r;
  r.pump_center_nm = center.pump.wavelength_nm();
  r.poling_period_um = device.poling_period_um;

  const IntervalProbe probe(signal, device, constraints);
  const Verdict at_center = probe(target.frequency_thz);
  if (!at_center.ok) {
    r.empty = true;
    r.lo_nm = r.hi_nm = target_nm;
    r.limiting_constraint = r.short_side_limit = r.long_side_limit = at_center.reason;
    r.extrapolated = at_center.extrapolated;
    return r;
  }

  // Higher converted frequency is the short-wavelength side.
  const Edge high = find_edge(probe, target.frequency_thz, +1.0, constraints);
  const Edge low = find_edge(probe, target.frequency_thz, -1.0, constraints);

  r.lo_nm = kSpeedOfLight / high.frequency_thz * kNanometersPerMicron;
  r.hi_nm = kSpeedOfLight / low.frequency_thz * kNanometersPerMicron;
  r.width_nm = r.hi_nm - r.lo_nm;
  r.width_thz = high.frequency_thz - low.frequency_thz;
  r.channel_count = channel_count(r.width_thz, constraints.channel_spacing_ghz);
  r.short_side_limit = high.reason;
  r.long_side_limit = low.reason;
  r.limiting_constraint = rank(high.reason) >= rank(low.reason) ? high.reason : low.reason;
  r.extrapolated = at_center.extrapolated || high.extrapolated || low.extrapolated;
  return r;
}

std::vector<double> sweep_signals(double signal_min_nm, double signal_max_nm,
                                  double signal_step_nm) {
  if (!(signal_step_nm > 0.0)) throw DomainError("signal step must be positive");
  if (!(signal_min_nm > 0.0) || signal_max_nm < signal_min_nm) {
    throw DomainError("signal range must be positive and ordered");
  }
  const auto n =
      static_cast<std::size_t>(std::floor((signal_max_nm - signal_min_nm) / signal_step_nm + 1e-9)) + 1;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = signal_min_nm + static_cast<double>(i) * signal_step_nm;
  }
  return out;
}

HubSweepPoint sweep_point(double signal_nm, double target_nm, double length_mm,
                          double temperature_c, const SellmeierModel& material,
                          const TuningConstraints& constraints) {
  HubSweepPoint p;
  p.signal_nm = signal_nm;
  try {
    p.tuning = tuning_range(signal_nm, target_nm, length_mm, temperature_c, material, constraints);
    return p;
  } catch (const ValidityError&) {
  } catch (const DomainError&) {
  }
  p.tuning = TuningResult{};
  p.tuning.empty = true;
  p.tuning.lo_nm = p.tuning.hi_nm = target_nm;
  p.tuning.limiting_constraint = p.tuning.short_side_limit = p.tuning.long_side_limit =
      LimitingConstraint::kDomainEdge;
  return p;
}

std::vector<HubSweepPoint> hub_sweep(double signal_min_nm, double signal_max_nm,
                                     double signal_step_nm, double target_nm, double length_mm,
                                     double temperature_c, const SellmeierModel& material,
                                     const TuningConstraints& constraints, int workers) {
  constraints.validate();
  const std::vector<double> signals = sweep_signals(signal_min_nm, signal_max_nm, signal_step_nm);
  std::vector<HubSweepPoint> out(signals.size());
  const auto n = static_cast<long>(signals.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();

  // Points near the sweet spots scan far wider windows than the rest.
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    out[i] = sweep_point(signals[i], target_nm, length_mm, temperature_c, material, constraints);
  }
  return out;
}

SweetSpotReport sweet_spot_report(double signal_nm, double target_nm, double temperature_c,
                                  const SellmeierModel& material, double tolerance_nm) {
  const auto t = make_triple(SpectralPoint::from_wavelength_nm(signal_nm),
                             SpectralPoint::from_wavelength_nm(target_nm));
  SweetSpotReport r;
  r.pump_nm = t.pump.wavelength_nm();
  r.first_order_coefficient = first_order_coefficient(
      t.converted.wavelength_um, t.pump.wavelength_um, temperature_c, material);
  r.midpoint_wavelength_nm = 2.0 * signal_nm;
  r.midpoint_offset_nm = std::abs(r.midpoint_wavelength_nm - 0.5 * (target_nm + r.pump_nm));
  r.is_second_harmonic_midpoint = r.midpoint_offset_nm <= tolerance_nm;
  return r;
}

}  // namespace qfchub
