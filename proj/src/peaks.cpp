#include <algorithm>
#include <limits>

#include "qfchub/errors.hpp"
#include "qfchub/tunability.hpp"

namespace qfchub {

std::vector<Peak> find_peaks(const std::vector<double>& x, const std::vector<double>& y,
                             const std::vector<bool>& missing, double min_relative_prominence) {
  if (x.size() != y.size() || missing.size() != y.size()) {
    throw DomainError("find_peaks: series lengths differ");
  }
  // Work on the present samples only.
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!missing[i]) idx.push_back(i);
  }
  const std::size_t m = idx.size();
  std::vector<Peak> peaks;
  if (m < 3) return peaks;

  for (std::size_t k = 1; k + 1 < m; ++k) {
    const double h = y[idx[k]];
    if (!(h > 0.0)) continue;
    // Strict on the left, non-strict on the right: a plateau yields one
    // maximum at its leftmost sample.
    if (!(h > y[idx[k - 1]] && h >= y[idx[k + 1]])) continue;

    double left_min = h;
    for (std::size_t j = k; j-- > 0;) {
      if (y[idx[j]] > h) break;
      left_min = std::min(left_min, y[idx[j]]);
    }
    double right_min = h;
    for (std::size_t j = k + 1; j < m; ++j) {
      if (y[idx[j]] > h) break;
      right_min = std::min(right_min, y[idx[j]]);
    }
    const double prominence = h - std::max(left_min, right_min);
    if (prominence < min_relative_prominence * h) continue;

    Peak p;
    p.index = idx[k];
    p.x_at_max = x[p.index];
    p.height = h;
    p.prominence = prominence;
    std::size_t lo = p.index;
    while (lo > 0 && !missing[lo - 1] && y[lo - 1] >= 0.5 * h) --lo;
    std::size_t hi = p.index;
    while (hi + 1 < y.size() && !missing[hi + 1] && y[hi + 1] >= 0.5 * h) ++hi;
    p.band_lo = x[lo];
    p.band_hi = x[hi];
    p.location = 0.5 * (p.band_lo + p.band_hi);
    peaks.push_back(p);
  }
  return peaks;
}

std::vector<Peak> find_sweep_peaks(const std::vector<HubSweepPoint>& sweep,
                                   double min_relative_prominence) {
  std::vector<double> x, y;
  std::vector<bool> missing;
  x.reserve(sweep.size());
  y.reserve(sweep.size());
  missing.reserve(sweep.size());
  for (const auto& p : sweep) {
    x.push_back(p.signal_nm);
    y.push_back(p.tuning.width_thz);
    missing.push_back(p.tuning.empty);
  }
  return find_peaks(x, y, missing, min_relative_prominence);
}

}  // namespace qfchub
