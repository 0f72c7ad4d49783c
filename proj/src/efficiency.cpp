#include "qfchub/efficiency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
#include <unsupported/Eigen/NonLinearOptimization>

#include "qfchub/errors.hpp"

namespace qfchub {

double efficiency_model(double power_mw, const EfficiencyCurveParams& params) {
  const double s = std::sin(std::sqrt(params.eta_nor * std::max(power_mw, 0.0)));
  return params.eta_max * s * s;
}

double peak_power_mw(const EfficiencyCurveParams& params) {
  if (!(params.eta_nor > 0.0)) throw DomainError("eta_nor must be positive");
  const double q = std::numbers::pi / 2.0;
  return q * q / params.eta_nor;
}

namespace {

struct SineSquaredResidual {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const std::vector<EfficiencySample>* data;

  int inputs() const { return 2; }
  int values() const { return static_cast<int>(data->size()); }

  // x = (η_max, η_nor)
  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const EfficiencyCurveParams p{x(0), x(1)};
    for (int i = 0; i < values(); ++i) {
      const auto& d = (*data)[static_cast<std::size_t>(i)];
      f(i) = efficiency_model(d.power_mw, p) - d.efficiency;
    }
    return 0;
  }

  int df(const Eigen::VectorXd& x, Eigen::MatrixXd& jac) const {
    const double eta_nor = std::max(x(1), 0.0);
    for (int i = 0; i < values(); ++i) {
      const double power = std::max((*data)[static_cast<std::size_t>(i)].power_mw, 0.0);
      const double u = std::sqrt(eta_nor * power);
      const double s = std::sin(u);
      jac(i, 0) = s * s;
      // d/dη_nor sin²(u) = sin(2u)·P/(2u), → P as u → 0.
      const double ratio = u > 1e-8 ? std::sin(2.0 * u) / (2.0 * u) : 1.0 - 2.0 * u * u / 3.0;
      jac(i, 1) = x(0) * ratio * power;
    }
    return 0;
  }
};

double linear_amplitude(const std::vector<EfficiencySample>& data, double eta_nor,
                        double& sse) {
  double sy = 0.0, ss = 0.0;
  for (const auto& d : data) {
    const double s = efficiency_model(d.power_mw, {1.0, eta_nor});
    sy += s * d.efficiency;
    ss += s * s;
  }
  const double amp = ss > 0.0 ? sy / ss : 0.0;
  sse = 0.0;
  for (const auto& d : data) {
    const double r = amp * efficiency_model(d.power_mw, {1.0, eta_nor}) - d.efficiency;
    sse += r * r;
  }
  return amp;
}

}  // namespace

EfficiencyFit fit_efficiency(const std::vector<EfficiencySample>& data) {
  if (data.size() < 3) throw DegenerateError("efficiency fit needs at least three points");
  double p_min = std::numeric_limits<double>::infinity();
  double p_max = 0.0;
  bool any_signal = false;
  for (const auto& d : data) {
    if (!std::isfinite(d.power_mw) || !std::isfinite(d.efficiency) || d.power_mw < 0.0) {
      throw DomainError("efficiency data must be finite with non-negative power");
    }
    p_min = std::min(p_min, d.power_mw);
    p_max = std::max(p_max, d.power_mw);
    any_signal = any_signal || d.efficiency != 0.0;
  }
  if (!any_signal) throw DegenerateError("efficiency data are all zero");
  if (!(p_max > 0.0) || !(p_max - p_min > 1e-9 * p_max)) {
    throw DegenerateError("efficiency data span a degenerate power range");
  }

  // Start: scan the phase reached at the largest power, √(η_nor·P_max), over
  // [0.05, 3π] on a log grid, amplitude solved linearly.
  constexpr int kScanPoints = 2000;
  const double u_lo = 0.05;
  const double u_hi = 3.0 * std::numbers::pi;
  double best_sse = std::numeric_limits<double>::infinity();
  EfficiencyCurveParams start;
  for (int k = 0; k < kScanPoints; ++k) {
    const double u = u_lo * std::pow(u_hi / u_lo, static_cast<double>(k) / (kScanPoints - 1));
    const double eta_nor = u * u / p_max;
    double sse = 0.0;
    const double amp = linear_amplitude(data, eta_nor, sse);
    if (amp > 0.0 && sse < best_sse) {
      best_sse = sse;
      start = {amp, eta_nor};
    }
  }
  if (!(start.eta_nor > 0.0)) throw ConvergenceError("no positive-amplitude starting point");

  SineSquaredResidual functor{&data};
  Eigen::LevenbergMarquardt<SineSquaredResidual> lm(functor);
  lm.parameters.maxfev = 400;
  lm.parameters.ftol = 1e-14;
  lm.parameters.xtol = 1e-14;
  Eigen::VectorXd x(2);
  x << start.eta_max, start.eta_nor;
  const auto status = lm.minimize(x);
  using Status = Eigen::LevenbergMarquardtSpace::Status;
  if (status == Status::ImproperInputParameters || status == Status::TooManyFunctionEvaluation ||
      !x.allFinite() || !(x(1) > 0.0)) {
    throw ConvergenceError("efficiency fit did not converge");
  }

  EfficiencyFit fit;
  fit.params = {x(0), x(1)};
  fit.residual_norm = lm.fvec.norm();
  fit.evaluations = static_cast<int>(lm.nfev);
  return fit;
}

PumpSplit pump_balance(const EfficiencyCurveParams& ccw, const EfficiencyCurveParams& cw,
                       double total_power_mw) {
  if (!(total_power_mw >= 0.0)) throw DomainError("total pump power must be non-negative");
  if (total_power_mw == 0.0) return {};

  auto split = [&](double r) {
    PumpSplit s;
    s.p_ccw_mw = r * total_power_mw;
    s.p_cw_mw = total_power_mw - s.p_ccw_mw;
    s.eta_ccw = efficiency_model(s.p_ccw_mw, ccw);
    s.eta_cw = efficiency_model(s.p_cw_mw, cw);
    return s;
  };
  auto gap = [&](double r) {
    const auto s = split(r);
    return s.eta_ccw - s.eta_cw;
  };

  // gap(0) ≤ 0 ≤ gap(1) for any non-negative curves, so a sign change exists.
  double lo = 0.0, hi = 1.0;
  double g_lo = gap(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double g = gap(mid);
    if (g == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((g < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g;
    } else {
      hi = mid;
    }
  }
  PumpSplit best = split(0.5 * (lo + hi));
  if (std::abs(best.eta_ccw - best.eta_cw) <= 1e-9) return best;

  // Not reachable for well-formed curves; fall back to the smallest gap on a grid.
  constexpr int kGrid = 10000;
  for (int k = 0; k <= kGrid; ++k) {
    const auto s = split(static_cast<double>(k) / kGrid);
    if (std::abs(s.eta_ccw - s.eta_cw) < std::abs(best.eta_ccw - best.eta_cw)) best = s;
  }
  best.equalized = std::abs(best.eta_ccw - best.eta_cw) <= 1e-9;
  return best;
}

}  // namespace qfchub
