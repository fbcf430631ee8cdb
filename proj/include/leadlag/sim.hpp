// leadlag/sim.hpp
// Correlated geometric-Brownian pair generator with a lead-lag parameter,
// sampled on independent non-synchronous grids.
//
//   X_t = x0 exp(sigma1 B_t)
//   Y_t = y0 exp(rho sigma2 B_{t-theta} + sigma2 sqrt(1-rho^2) W_{t-theta})
//
// No Ito drift correction: the exponent is driven by the raw paths, and the
// sign-based index only ever sees increment signs. Positive theta delays
// Y's driving information, so x leads y.
//
// The driving path B is drawn on x's grid from its own substream, then
// evaluated at y's (delayed) times by exact conditional sampling: Brownian
// bridges between surrounding grid points, free increments beyond the ends,
// from a separate substream. X's path is therefore bit-identical across
// changes of y's grid, theta, or rho under a fixed seed.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leadlag/errors.hpp"
#include "leadlag/rng.hpp"
#include "leadlag/ticks.hpp"

namespace leadlag {

struct SamplingLaw {
  double mu = 10.0;  // mean inter-tick gap, seconds, > 0
  double sd = 2.0;   // gap standard deviation, >= 0; gaps <= 0 are redrawn

  void check() const {
    if (!(mu > 0.0)) throw InvalidConfig("sampling law mean must be > 0");
    if (!(sd >= 0.0)) throw InvalidConfig("sampling law sd must be >= 0");
  }
};

struct GbmPairConfig {
  double x0 = 100.0;
  double y0 = 100.0;
  double sigma1 = 1.0;  // per sqrt(second)
  double sigma2 = 1.0;
  double rho = 0.0;     // in [-1, 1]
  double theta = 0.0;   // seconds; positive: x leads y
  double horizon = 0.0; // seconds, > 0 where used
  std::uint64_t seed = 0;

  void check() const {
    if (!(x0 > 0.0) || !(y0 > 0.0)) throw InvalidConfig("initial prices must be > 0");
    if (!(sigma1 > 0.0) || !(sigma2 > 0.0)) throw InvalidConfig("volatilities must be > 0");
    if (!(std::fabs(rho) <= 1.0)) throw InvalidConfig("|rho| must be <= 1");
    if (!std::isfinite(theta)) throw InvalidConfig("theta must be finite");
  }
};

// Observation times on [0, T]: start at 0, i.i.d. Normal(mu, sd) gaps with
// non-positive gaps redrawn, first time reaching T clamped to exactly T.
inline std::vector<double> sample_times(const SamplingLaw& law, double T, std::uint64_t seed) {
  law.check();
  if (!(T > 0.0)) throw InvalidConfig("horizon must be > 0");
  Rng rng(seed);
  std::vector<double> out{0.0};
  double t = 0.0;
  for (;;) {
    double gap = law.sd > 0.0 ? rng.gaussian(law.mu, law.sd) : law.mu;
    while (gap <= 0.0) gap = rng.gaussian(law.mu, law.sd);
    t += gap;
    if (t >= T) {
      out.push_back(T);
      break;
    }
    out.push_back(t);
  }
  return out;
}

namespace detail {

// Brownian path drawn left to right on strictly increasing points, pinned to
// 0 at `anchor` (which must be one of the points).
class BrownianOnGrid {
 public:
  BrownianOnGrid(std::vector<double> points, double anchor, Rng rng) : rng_(std::move(rng)) {
    pts_ = std::move(points);
    vals_.resize(pts_.size());
    double v = 0.0;
    vals_[0] = 0.0;
    for (std::size_t k = 1; k < pts_.size(); ++k) {
      v += std::sqrt(pts_[k] - pts_[k - 1]) * rng_.gaussian();
      vals_[k] = v;
    }
    const auto it = std::lower_bound(pts_.begin(), pts_.end(), anchor);
    const double at_anchor = vals_[static_cast<std::size_t>(it - pts_.begin())];
    for (double& x : vals_) x -= at_anchor;
  }

  const std::vector<double>& points() const { return pts_; }
  const std::vector<double>& values() const { return vals_; }

 private:
  std::vector<double> pts_;
  std::vector<double> vals_;
  Rng rng_{0};
};

// Evaluate a Brownian path, known on a base grid, at extra query points by
// exact conditional sampling. Queries are processed in ascending time order
// so results are reproducible; coincidences within `tol` reuse the known
// value. Fill-in draws come from `fill`, never from the base path's stream.
class BrownianEvaluator {
 public:
  BrownianEvaluator(const std::vector<double>& base_pts, const std::vector<double>& base_vals,
                    Rng fill, double tol = 1e-12)
      : fill_(std::move(fill)), tol_(tol) {
    for (std::size_t k = 0; k < base_pts.size(); ++k) known_.emplace(base_pts[k], base_vals[k]);
  }

  // queries must be sorted ascending
  std::vector<double> eval_sorted(const std::vector<double>& queries) {
    std::vector<double> out;
    out.reserve(queries.size());
    for (double q : queries) out.push_back(eval_one(q));
    return out;
  }

 private:
  double eval_one(double q) {
    auto hi = known_.lower_bound(q - tol_);
    if (hi != known_.end() && std::fabs(hi->first - q) <= tol_) return hi->second;
    double v;
    if (hi == known_.end()) {  // beyond the right end: free increment
      const auto last = std::prev(known_.end());
      v = last->second + std::sqrt(q - last->first) * fill_.gaussian();
    } else if (hi == known_.begin()) {  // before the left end: free increment
      v = hi->second + std::sqrt(hi->first - q) * fill_.gaussian();
    } else {  // between two known points: Brownian bridge
      const auto lo = std::prev(hi);
      const double a = lo->first, b = hi->first;
      const double va = lo->second, vb = hi->second;
      const double span = b - a;
      const double mean = va + (q - a) / span * (vb - va);
      const double var = (q - a) * (b - q) / span;
      v = mean + std::sqrt(std::max(var, 0.0)) * fill_.gaussian();
    }
    known_.emplace(q, v);
    return v;
  }

  std::map<double, double> known_;
  Rng fill_;
  double tol_;
};

}  // namespace detail

// Simulated pair with the second asset's driving information taken at the
// given evaluation times (already delay-adjusted). Used directly by
// experiments with a time-varying delay; gbm_pair below covers the constant
// case t_eval[j] = t_times[j] - theta.
inline std::pair<TickSeries, TickSeries> gbm_pair_eval(const GbmPairConfig& cfg,
                                                       const std::vector<double>& s_times,
                                                       const std::vector<double>& t_times,
                                                       const std::vector<double>& t_eval) {
  cfg.check();
  if (s_times.size() < 2 || t_times.size() < 2) throw TooShort();
  if (t_eval.size() != t_times.size()) throw InvalidConfig("t_eval size mismatch");

  // driving path on x's grid (with 0 present so X_0 = x0 exactly)
  std::vector<double> base = s_times;
  if (std::none_of(base.begin(), base.end(), [](double v) { return v == 0.0; })) {
    base.push_back(0.0);
    std::sort(base.begin(), base.end());
  }
  detail::BrownianOnGrid b(base, 0.0, Rng(cfg.seed, Stream::path_b));

  // evaluate B at the delayed response times
  std::vector<double> sorted_eval = t_eval;
  std::sort(sorted_eval.begin(), sorted_eval.end());
  detail::BrownianEvaluator be(b.points(), b.values(), Rng(cfg.seed, Stream::path_b_fill));
  const std::vector<double> b_at_sorted = be.eval_sorted(sorted_eval);

  // independent path W on the same evaluation times, pinned to 0 at clock 0
  std::vector<double> w_pts = sorted_eval;
  w_pts.push_back(0.0);
  std::sort(w_pts.begin(), w_pts.end());
  w_pts.erase(std::unique(w_pts.begin(), w_pts.end()), w_pts.end());
  detail::BrownianOnGrid w(w_pts, 0.0, Rng(cfg.seed, Stream::path_w));

  // map sorted results back to the original response order
  std::vector<std::size_t> order(sorted_eval.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t bidx) {
    return t_eval[a] < t_eval[bidx] || (t_eval[a] == t_eval[bidx] && a < bidx);
  });

  std::vector<double> xp(s_times.size()), yp(t_times.size());
  {
    // x prices straight off the base grid
    std::size_t k = 0;
    for (std::size_t i = 0; i < s_times.size(); ++i) {
      while (b.points()[k] != s_times[i]) ++k;
      xp[i] = cfg.x0 * std::exp(cfg.sigma1 * b.values()[k]);
    }
  }
  const double mix = std::sqrt(1.0 - cfg.rho * cfg.rho);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t j = order[k];
    const double u = sorted_eval[k];
    const auto wit = std::lower_bound(w.points().begin(), w.points().end(), u);
    const double wv = w.values()[static_cast<std::size_t>(wit - w.points().begin())];
    yp[j] = cfg.y0 * std::exp(cfg.rho * cfg.sigma2 * b_at_sorted[k] + cfg.sigma2 * mix * wv);
  }

  return {TickSeries(s_times, std::move(xp), "x"),
          TickSeries(t_times, std::move(yp), "y")};
}

inline std::pair<TickSeries, TickSeries> gbm_pair(const GbmPairConfig& cfg,
                                                  const std::vector<double>& s_times,
                                                  const std::vector<double>& t_times) {
  std::vector<double> t_eval(t_times.size());
  for (std::size_t j = 0; j < t_times.size(); ++j) t_eval[j] = t_times[j] - cfg.theta;
  return gbm_pair_eval(cfg, s_times, t_times, t_eval);
}

}  // namespace leadlag
