// leadlag/baselines.hpp
// Reference estimators: Hayashi-Yoshida covariance on non-synchronous
// grids, the shifted-clock HY contrast for lag estimation, and the
// co-activity index over a discrete activity grid.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "leadlag/errors.hpp"
#include "leadlag/exact_sum.hpp"
#include "leadlag/naples.hpp"
#include "leadlag/ticks.hpp"

namespace leadlag {

// Sum over interval pairs of (d log X_i)(d log Y_j) where the open-closed
// observation intervals (s_i, s_{i+1}] and (t_j, t_{j+1}] intersect.
// Two-pointer sweep in (i, j) order, O(n + m + pairs); exact summation makes
// the value independent of which series comes first.
inline double hy_covariance(const TickSeries& x, const TickSeries& y) {
  const auto dx = log_returns(x);
  const auto dy = log_returns(y);
  const auto& sx = x.times();
  const auto& ty = y.times();

  ExactSum acc;
  std::size_t j0 = 0;
  for (std::size_t i = 0; i + 1 < sx.size(); ++i) {
    // discard y-intervals ending at or before the start of (sx[i], sx[i+1]]
    while (j0 + 1 < ty.size() && ty[j0 + 1] <= sx[i]) ++j0;
    for (std::size_t j = j0; j + 1 < ty.size() && ty[j] < sx[i + 1]; ++j)
      acc.add(dx[i] * dy[j]);
  }
  return acc.value();
}

// HY contrast with one clock shifted by the candidate lag. Positive lags
// shift x's clock forward, so the |contrast| peaks at positive lags when x
// leads y. Both branches run the same interval comparisons, which makes the
// mirror identity  hry_contrast(x,y,L) == hry_contrast(y,x,-L)  exact.
inline double hry_contrast(const TickSeries& x, const TickSeries& y, double lag) {
  if (lag >= 0.0) return hy_covariance(shift(x, lag), y);
  return hy_covariance(x, shift(y, -lag));
}

inline LagProfile hry_estimate(const TickSeries& x, const TickSeries& y, const LagGrid& grid) {
  grid.check();
  LagProfile p;
  p.method = "hry";
  p.lags = grid.lags;
  p.values.resize(grid.lags.size());
  for (std::size_t k = 0; k < grid.lags.size(); ++k)
    p.values[k] = std::fabs(hry_contrast(x, y, grid.lags[k]));
  detail::finalize_profile(p);
  return p;
}

// --------------------------------------------------------------------------
// Co-activity index
// --------------------------------------------------------------------------

// Slot k covers [k*delta, (k+1)*delta) on a shared origin: the smaller of the
// two first tick times, floored to the grid.
struct ActivityGrid {
  double delta = 0.0;
  std::vector<char> x_active;
  std::vector<char> y_active;

  ActivityGrid(const TickSeries& x, const TickSeries& y, double resolution) {
    if (!(resolution > 0.0)) throw ZeroResolution();
    delta = resolution;
    const double tmin = std::min(x.first_time(), y.first_time());
    const double tmax = std::max(x.last_time(), y.last_time());
    const std::int64_t k0 = static_cast<std::int64_t>(std::floor(tmin / delta));
    const std::int64_t k1 = static_cast<std::int64_t>(std::floor(tmax / delta));
    const std::size_t n = static_cast<std::size_t>(k1 - k0 + 1);
    x_active.assign(n, 0);
    y_active.assign(n, 0);
    for (double t : x.times())
      x_active[static_cast<std::size_t>(
          static_cast<std::int64_t>(std::floor(t / delta)) - k0)] = 1;
    for (double t : y.times())
      y_active[static_cast<std::size_t>(
          static_cast<std::int64_t>(std::floor(t / delta)) - k0)] = 1;
  }

  std::size_t slots() const { return x_active.size(); }
};

// Normalized co-activity at slot shift `t`: the count of slots i in
// [|t|, N-|t|] where x is active at i and y is active at i+t, over the
// smaller of the two single-asset activity counts on the same index range.
// Positive shifts ask whether y's activity follows x's. Zero activity in
// range gives 0 rather than a division by zero.
inline double ds_index_on(const ActivityGrid& g, std::int64_t t) {
  const std::int64_t n = static_cast<std::int64_t>(g.slots());
  const std::int64_t a = t < 0 ? -t : t;
  std::int64_t both = 0, x_total = 0, y_total = 0;
  for (std::int64_t i = a; i <= n - a; ++i) {
    const std::int64_t k = i + t;
    const bool xa = i >= 0 && i < n && g.x_active[static_cast<std::size_t>(i)];
    const bool ya = k >= 0 && k < n && g.y_active[static_cast<std::size_t>(k)];
    x_total += xa;
    y_total += ya;
    both += xa && ya;
  }
  const std::int64_t den = std::min(x_total, y_total);
  return den == 0 ? 0.0 : static_cast<double>(both) / static_cast<double>(den);
}

inline double ds_index(const TickSeries& x, const TickSeries& y, double delta, std::int64_t t) {
  return ds_index_on(ActivityGrid(x, y, delta), t);
}

// Grid lags are mapped to the nearest whole slot shift; any rounding is
// recorded in the profile notes.
inline LagProfile ds_estimate(const TickSeries& x, const TickSeries& y, double delta,
                              const LagGrid& grid) {
  grid.check();
  const ActivityGrid g(x, y, delta);
  LagProfile p;
  p.method = "ds";
  p.lags = grid.lags;
  p.values.resize(grid.lags.size());
  for (std::size_t k = 0; k < grid.lags.size(); ++k) {
    const double exact_shift = grid.lags[k] / delta;
    const std::int64_t slot = static_cast<std::int64_t>(std::llround(exact_shift));
    if (std::fabs(exact_shift - static_cast<double>(slot)) > 1e-9)
      p.notes.push_back("lag " + std::to_string(grid.lags[k]) + " rounded to slot " +
                        std::to_string(slot));
    p.values[k] = ds_index_on(g, slot);
  }
  detail::finalize_profile(p);
  return p;
}

}  // namespace leadlag
