// leadlag/ticks.hpp
// Tick-series data model: validation, log returns, sign paths, time shifts.
// The shared substrate for every estimator in the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "leadlag/errors.hpp"

namespace leadlag {

// Immutable after construction. Invariants enforced by the constructor:
// times strictly increasing, prices > 0, length >= 2, equal lengths.
class TickSeries {
 public:
  TickSeries(std::vector<double> times, std::vector<double> prices, std::string label = {})
      : times_(std::move(times)), prices_(std::move(prices)), label_(std::move(label)) {
    if (times_.size() != prices_.size())
      throw Error("times and prices must have equal length");
    if (times_.size() < 2) throw TooShort();
    for (std::size_t i = 0; i < times_.size(); ++i) {
      if (i > 0 && !(times_[i] > times_[i - 1])) throw NonMonotoneTime(i);
      if (!(prices_[i] > 0.0)) throw NonPositivePrice(i);
    }
  }

  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& prices() const { return prices_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return times_.size(); }
  double first_time() const { return times_.front(); }
  double last_time() const { return times_.back(); }

  // Ticks with time in [lo, hi], boundaries included.
  TickSeries restrict(double lo, double hi) const {
    std::vector<double> t, p;
    for (std::size_t i = 0; i < times_.size(); ++i)
      if (times_[i] >= lo && times_[i] <= hi) {
        t.push_back(times_[i]);
        p.push_back(prices_[i]);
      }
    return TickSeries(std::move(t), std::move(p), label_);
  }

  // Number of ticks in [lo, hi] without constructing the restriction.
  std::size_t count_in(double lo, double hi) const {
    std::size_t n = 0;
    for (double t : times_)
      if (t >= lo && t <= hi) ++n;
    return n;
  }

 private:
  std::vector<double> times_;
  std::vector<double> prices_;
  std::string label_;
};

inline TickSeries validate(std::vector<double> times, std::vector<double> prices,
                           std::string label = {}) {
  return TickSeries(std::move(times), std::move(prices), std::move(label));
}

// r_k = log(p[k+1]/p[k]), length n-1
inline std::vector<double> log_returns(const TickSeries& s) {
  const auto& p = s.prices();
  std::vector<double> r(p.size() - 1);
  for (std::size_t k = 0; k + 1 < p.size(); ++k) r[k] = std::log(p[k + 1] / p[k]);
  return r;
}

// Per-tick return signs and their running sum. Each sign is attached to the
// time of the later tick of its return. The cumulative path evaluated at t
// counts signs of ticks with time strictly less than t.
struct SignPath {
  std::vector<double> times;        // source times from index 1 onward
  std::vector<int> signs;           // in {-1, 0, +1}
  std::vector<std::int64_t> cum;    // prefix sums of signs
};

inline SignPath sign_path(const TickSeries& s) {
  SignPath out;
  const auto r = log_returns(s);
  out.times.assign(s.times().begin() + 1, s.times().end());
  out.signs.resize(r.size());
  out.cum.resize(r.size());
  std::int64_t running = 0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    out.signs[k] = (r[k] > 0.0) - (r[k] < 0.0);
    running += out.signs[k];
    out.cum[k] = running;
  }
  return out;
}

// Cumulative sign path at time t, strict predicate: sum of signs at u < t.
inline std::int64_t eval_cum(const SignPath& p, double t) {
  const auto it = std::lower_bound(p.times.begin(), p.times.end(), t);
  const std::size_t idx = static_cast<std::size_t>(it - p.times.begin());
  return idx == 0 ? 0 : p.cum[idx - 1];
}

// Same prices, every timestamp moved by theta. Label annotated with the shift.
inline TickSeries shift(const TickSeries& s, double theta) {
  std::vector<double> t(s.times());
  for (double& u : t) u += theta;
  std::string label = s.label();
  if (theta != 0.0) {
    label += (theta > 0 ? "+" : "") + std::to_string(theta) + "s";
  }
  return TickSeries(std::move(t), s.prices(), std::move(label));
}

}  // namespace leadlag
