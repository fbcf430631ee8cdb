// leadlag/naples.hpp
// The NAPLES lead-lag index R(t), lag profiles over a candidate grid,
// argmax lag estimation and rolling-window estimation.
//
// R(t) is the cumulative signed profit of two mirrored sign-trading
// strategies: trade the second asset's sign path on the first asset's tick
// signs, minus the same with the roles swapped. Every term is a product of
// values in {-1,0,+1}, so R is accumulated exactly in 64-bit integers.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "leadlag/errors.hpp"
#include "leadlag/ticks.hpp"

namespace leadlag {

// What happens when a response tick falls exactly on a signal tick's time.
//   window_start: the tick belongs to the window beginning there (cumulative
//                 predicate 1{u < t}; the default, used by all estimators).
//   window_end:   the tick belongs to the window ending there (1{u <= t});
//                 this is the pairing under which the closed-form expectation
//                 of the theory module holds on grids where the two assets
//                 share identical tick times. On grids without shared tick
//                 times the two rules give identical values.
enum class TieRule { window_start, window_end };

namespace detail {

// One directed sum: for every sign-carrying tick of `resp` lying in the
// inter-tick window [sig_i, sig_{i+1}) of `sig` (window_end: (sig_i, sig_{i+1}]),
// add sig_sign[i] * resp_sign, gated by sig_{i+1} < horizon.
inline std::int64_t directed_sum(const std::vector<double>& sig_times,
                                 const std::vector<int>& sig_signs,
                                 const std::vector<double>& resp_times,
                                 const std::vector<int>& resp_signs, double horizon,
                                 TieRule rule) {
  const std::size_t n = sig_times.size();
  std::int64_t acc = 0;
  std::size_t i = 0;  // candidate window start, advances monotonically
  for (std::size_t j = 1; j < resp_times.size(); ++j) {
    const double u = resp_times[j];
    if (rule == TieRule::window_start) {
      while (i + 1 < n && sig_times[i + 1] <= u) ++i;
    } else {
      while (i + 1 < n && sig_times[i + 1] < u) ++i;
    }
    if (i == 0 || i + 1 >= n) continue;          // no signal sign / no window
    const bool inside = rule == TieRule::window_start
                            ? (sig_times[i] <= u && u < sig_times[i + 1])
                            : (sig_times[i] < u && u <= sig_times[i + 1]);
    if (!inside) continue;                       // before the first window
    if (!(sig_times[i + 1] < horizon)) continue;
    acc += static_cast<std::int64_t>(sig_signs[i - 1]) * resp_signs[j - 1];
  }
  return acc;
}

inline std::vector<int> tick_signs(const TickSeries& s) {
  const auto r = log_returns(s);
  std::vector<int> out(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) out[k] = (r[k] > 0.0) - (r[k] < 0.0);
  return out;
}

}  // namespace detail

// Exact integer value of R(t; x, y). One pass over each series, O(n+m).
inline std::int64_t naples_r_exact(const TickSeries& x, const TickSeries& y, double t,
                                   TieRule rule = TieRule::window_start) {
  const auto bx = detail::tick_signs(x);
  const auto by = detail::tick_signs(y);
  const std::int64_t follow_y = detail::directed_sum(x.times(), bx, y.times(), by, t, rule);
  const std::int64_t follow_x = detail::directed_sum(y.times(), by, x.times(), bx, t, rule);
  return follow_y - follow_x;
}

inline double naples_r(const TickSeries& x, const TickSeries& y, double t,
                       TieRule rule = TieRule::window_start) {
  return static_cast<double>(naples_r_exact(x, y, t, rule));
}

// --------------------------------------------------------------------------
// Lag grids and profiles
// --------------------------------------------------------------------------

struct LagGrid {
  std::vector<double> lags;  // strictly increasing, non-empty

  static LagGrid from_range(double start, double stop, double step) {
    if (!(step > 0.0)) throw Error("lag grid step must be > 0");
    if (stop < start) throw Error("lag grid stop < start");
    std::vector<double> v;
    const double tol = step * 1e-9;
    for (std::size_t k = 0;; ++k) {
      const double lag = start + static_cast<double>(k) * step;
      if (lag > stop + tol) break;
      v.push_back(lag);
    }
    return LagGrid{std::move(v)};
  }

  void check() const {
    if (lags.empty()) throw Error("lag grid is empty");
    for (std::size_t k = 1; k < lags.size(); ++k)
      if (!(lags[k] > lags[k - 1])) throw Error("lag grid not strictly increasing");
  }
};

struct LagProfile {
  std::vector<double> lags;
  std::vector<double> values;
  double best_lag = 0.0;
  double best_value = 0.0;
  std::string method;               // "naples" | "hry" | "ds"
  std::vector<std::string> notes;   // e.g. lag-to-slot rounding in ds
};

namespace detail {

// Argmax with ties broken by smallest |lag|, then by smaller lag.
inline std::size_t best_index(const std::vector<double>& lags,
                              const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < lags.size(); ++k) {
    const bool better =
        values[k] > values[best] ||
        (values[k] == values[best] &&
         (std::fabs(lags[k]) < std::fabs(lags[best]) ||
          (std::fabs(lags[k]) == std::fabs(lags[best]) && lags[k] < lags[best])));
    if (better) best = k;
  }
  return best;
}

inline std::size_t min_index(const std::vector<double>& lags,
                             const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < lags.size(); ++k) {
    const bool better =
        values[k] < values[best] ||
        (values[k] == values[best] &&
         (std::fabs(lags[k]) < std::fabs(lags[best]) ||
          (std::fabs(lags[k]) == std::fabs(lags[best]) && lags[k] < lags[best])));
    if (better) best = k;
  }
  return best;
}

inline void finalize_profile(LagProfile& p) {
  const std::size_t k = best_index(p.lags, p.values);
  p.best_lag = p.lags[k];
  p.best_value = p.values[k];
}

}  // namespace detail

inline double estimate_lag(const LagProfile& p) {
  return p.lags[detail::best_index(p.lags, p.values)];
}

// Lag whose value is smallest (mirror of estimate_lag); the CLI reports it so
// negatively-associated lead-lag is visible too.
inline double minimizing_lag(const LagProfile& p) {
  return p.lags[detail::min_index(p.lags, p.values)];
}

// Profile of R over the candidate grid. A candidate lag L is tested by
// moving y's clock back by L, so positive estimates mean x leads y. Each
// evaluation horizon is just past the last tick of the shifted pair, so all
// fully observed terms count.
inline LagProfile naples_profile(const TickSeries& x, const TickSeries& y, const LagGrid& grid,
                                 TieRule rule = TieRule::window_start) {
  grid.check();
  LagProfile p;
  p.method = "naples";
  p.lags = grid.lags;
  p.values.resize(grid.lags.size());
  // signs never change under time shifts; compute them once
  const auto bx = detail::tick_signs(x);
  const auto by = detail::tick_signs(y);
  std::vector<double> yt(y.times().size());
  for (std::size_t k = 0; k < grid.lags.size(); ++k) {
    const double lag = grid.lags[k];
    for (std::size_t j = 0; j < yt.size(); ++j) yt[j] = y.times()[j] + (-lag);
    const double horizon = std::nextafter(std::max(x.last_time(), yt.back()),
                                          std::numeric_limits<double>::infinity());
    const std::int64_t r = detail::directed_sum(x.times(), bx, yt, by, horizon, rule) -
                           detail::directed_sum(yt, by, x.times(), bx, horizon, rule);
    p.values[k] = static_cast<double>(r);
  }
  detail::finalize_profile(p);
  return p;
}

// --------------------------------------------------------------------------
// Rolling-window estimation
// --------------------------------------------------------------------------

struct RollingEstimate {
  std::vector<double> window_ends;
  std::vector<double> lags_hat;    // NaN on gap windows
  std::vector<double> values;      // NaN on gap windows
  std::vector<bool> has_value;
  double window = 0.0;
  double step = 0.0;
};

// Windows are closed intervals [e - window, e]; ticks on the boundary belong
// to the window. Windows leaving fewer than 2 ticks in either series emit a
// gap marker.
inline RollingEstimate rolling_estimate(const TickSeries& x, const TickSeries& y,
                                        const LagGrid& grid, double window, double step) {
  grid.check();
  if (!(window > 0.0)) throw Error("window must be > 0");
  if (!(step > 0.0)) throw Error("step must be > 0");

  const double t0 = std::min(x.first_time(), y.first_time());
  const double t1 = std::max(x.last_time(), y.last_time());

  RollingEstimate out;
  out.window = window;
  out.step = step;
  const double tol = step * 1e-9;
  bool any = false;
  for (double e = t0 + window; e <= t1 + tol; e += step) {
    const double lo = e - window;
    out.window_ends.push_back(e);
    if (x.count_in(lo, e) < 2 || y.count_in(lo, e) < 2) {
      out.lags_hat.push_back(std::numeric_limits<double>::quiet_NaN());
      out.values.push_back(std::numeric_limits<double>::quiet_NaN());
      out.has_value.push_back(false);
      continue;
    }
    const LagProfile p = naples_profile(x.restrict(lo, e), y.restrict(lo, e), grid);
    out.lags_hat.push_back(p.best_lag);
    out.values.push_back(p.best_value);
    out.has_value.push_back(true);
    any = true;
  }
  if (!any) throw WindowTooShort();
  return out;
}

}  // namespace leadlag
