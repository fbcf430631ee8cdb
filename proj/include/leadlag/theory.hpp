// leadlag/theory.hpp
// Closed-form expectation of the lead-lag index R for correlated
// geometric-Brownian pairs, used as the verification oracle.
//
// Model: log X increments ride a driving Brownian path B; log Y increments
// ride rho*B delayed by theta plus an independent path. Every product of a
// signal sign with a response sign is a product of signs of two jointly
// Gaussian zero-mean increments, so its expectation is
// (2/pi)*arcsin(correlation), and the correlation is rho times the overlap
// of the two increment windows (the response window mapped onto the driving
// clock by -theta) over the geometric mean of the window lengths.
//
// expected_r_equispaced is the piecewise closed form for grids with shared
// equispaced tick times (spacing delta, l/2 contributing index pairs per
// direction, ties resolved by TieRule::window_end):
//     (l/pi) sign(theta) asin(rho|theta|/delta)          0 < |theta| < delta
//     (l/pi) sign(theta) asin(rho(2delta-|theta|)/delta) delta < |theta| < 2delta
//     0                                                  otherwise
// with the shared continuity value at |theta| = delta and 0 at 2delta.
//
// expected_r_general evaluates the pair sums directly on arbitrary grids.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "leadlag/errors.hpp"
#include "leadlag/naples.hpp"

namespace leadlag {

struct EquispacedModel {
  double rho = 0.0;      // correlation, |rho| <= 1
  double theta = 0.0;    // lead-lag in seconds; positive means x leads
  double delta = 1.0;    // observation spacing, > 0
  std::int64_t l = 1;    // scale count, >= 1

  void check() const {
    if (!(std::fabs(rho) <= 1.0)) throw InvalidConfig("|rho| must be <= 1");
    if (!(delta > 0.0)) throw InvalidConfig("delta must be > 0");
    if (l < 1) throw InvalidConfig("l must be >= 1");
  }
};

namespace detail {

inline double guarded_asin(double arg) {
  if (std::fabs(arg) > 1.0) {
    if (std::fabs(arg) > 1.0 + 1e-12)
      throw DomainError("arcsin argument out of range: " + std::to_string(arg));
    arg = arg > 0.0 ? 1.0 : -1.0;
  }
  return std::asin(arg);
}

}  // namespace detail

inline double expected_r_equispaced(const EquispacedModel& m) {
  m.check();
  const double a = std::fabs(m.theta);
  const int sgn = (m.theta > 0.0) - (m.theta < 0.0);
  if (sgn == 0 || a >= 2.0 * m.delta) return 0.0;
  const double scale = static_cast<double>(m.l) / std::numbers::pi;
  // both branches agree at |theta| == delta (arcsin(rho))
  const double arg = a <= m.delta ? m.rho * a / m.delta : m.rho * (2.0 * m.delta - a) / m.delta;
  return scale * static_cast<double>(sgn) * detail::guarded_asin(arg);
}

// P(N > 0, M > 0) for standardized bivariate normals with correlation rho.
inline double orthant_probability(double rho) {
  if (std::fabs(rho) > 1.0) {
    if (std::fabs(rho) > 1.0 + 1e-12) throw DomainError("|rho| must be <= 1");
    rho = rho > 0.0 ? 1.0 : -1.0;
  }
  return 0.25 + std::asin(rho) / (2.0 * std::numbers::pi);
}

// --------------------------------------------------------------------------
// General grids
// --------------------------------------------------------------------------

struct GridModel {
  std::vector<double> s_times;  // first asset, strictly increasing
  std::vector<double> t_times;  // second asset, strictly increasing
  double rho = 0.0;
  double theta = 0.0;
};

struct GeneralExpectation {
  double value = 0.0;
  std::size_t follow_y_terms = 0;  // nonzero-overlap pairs, x signal
  std::size_t follow_x_terms = 0;  // nonzero-overlap pairs, y signal

  // scale count implied by the pair counts: two 1/pi units per pair
  std::int64_t implied_l() const {
    return 2 * static_cast<std::int64_t>(follow_y_terms + follow_x_terms);
  }
};

namespace detail {

// Between consecutive ticks of `a` there must be at most one tick of `b`
// strictly inside.
inline void check_interleaving_one_way(const std::vector<double>& a,
                                       const std::vector<double>& b) {
  std::size_t j = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    while (j < b.size() && b[j] <= a[i]) ++j;
    std::size_t inside = 0;
    for (std::size_t k = j; k < b.size() && b[k] < a[i + 1]; ++k) ++inside;
    if (inside > 1) throw InterleavingViolation(i);
  }
}

// Overlap of (a1, a2] with (b1, b2].
inline double interval_overlap(double a1, double a2, double b1, double b2) {
  const double lo = std::max(a1, b1);
  const double hi = std::min(a2, b2);
  return hi > lo ? hi - lo : 0.0;
}

// One directed expectation sum: signal signs on `sig`, response ticks on
// `resp`, response increment windows mapped onto the driving clock by
// -resp_delay (0 when the response asset is the un-delayed one).
inline void general_directed_sum(const std::vector<double>& sig, const std::vector<double>& resp,
                                 double rho, double sig_delay, double resp_delay, TieRule rule,
                                 double& total, std::size_t& terms) {
  const std::size_t n = sig.size();
  std::size_t i = 0;
  for (std::size_t j = 1; j < resp.size(); ++j) {
    const double u = resp[j];
    if (rule == TieRule::window_start) {
      while (i + 1 < n && sig[i + 1] <= u) ++i;
    } else {
      while (i + 1 < n && sig[i + 1] < u) ++i;
    }
    if (i == 0 || i + 1 >= n) continue;
    const bool inside = rule == TieRule::window_start ? (sig[i] <= u && u < sig[i + 1])
                                                      : (sig[i] < u && u <= sig[i + 1]);
    if (!inside) continue;
    const double ov =
        interval_overlap(sig[i - 1] - sig_delay, sig[i] - sig_delay,
                         resp[j - 1] - resp_delay, resp[j] - resp_delay);
    if (ov <= 0.0) continue;
    const double d = std::sqrt((sig[i] - sig[i - 1]) * (resp[j] - resp[j - 1]));
    total += (2.0 / std::numbers::pi) * guarded_asin(rho * ov / d);
    ++terms;
  }
}

}  // namespace detail

// Expectation of R on the given grids, all observed terms counted.
// Terms whose signal sign or prior response tick does not exist contribute
// nothing. Throws InterleavingViolation when some inter-tick interval of one
// series contains more than one tick of the other strictly inside.
inline GeneralExpectation expected_r_general_detail(const GridModel& g,
                                                    TieRule rule = TieRule::window_start) {
  if (!(std::fabs(g.rho) <= 1.0)) throw InvalidConfig("|rho| must be <= 1");
  if (g.s_times.size() < 2 || g.t_times.size() < 2) throw TooShort();
  detail::check_interleaving_one_way(g.s_times, g.t_times);
  detail::check_interleaving_one_way(g.t_times, g.s_times);

  GeneralExpectation out;
  double follow_y = 0.0, follow_x = 0.0;
  // x signals, y responses: y's increments are delayed by theta
  detail::general_directed_sum(g.s_times, g.t_times, g.rho, 0.0, g.theta, rule, follow_y,
                               out.follow_y_terms);
  // y signals, x responses: equivalently map y's windows by -theta
  detail::general_directed_sum(g.t_times, g.s_times, g.rho, g.theta, 0.0, rule, follow_x,
                               out.follow_x_terms);
  out.value = follow_y - follow_x;
  return out;
}

inline double expected_r_general(const GridModel& g, TieRule rule = TieRule::window_start) {
  return expected_r_general_detail(g, rule).value;
}

// Tabulation of the equispaced expectation over a theta range, for plotting.
inline std::vector<std::pair<double, double>> expected_curve(const EquispacedModel& m,
                                                             double lo, double hi, double step) {
  m.check();
  if (!(step > 0.0)) throw Error("curve step must be > 0");
  if (hi < lo) throw Error("curve range is empty");
  std::vector<std::pair<double, double>> out;
  const double tol = step * 1e-9;
  EquispacedModel probe = m;
  for (std::size_t k = 0;; ++k) {
    const double theta = lo + static_cast<double>(k) * step;
    if (theta > hi + tol) break;
    probe.theta = theta;
    out.emplace_back(theta, expected_r_equispaced(probe));
  }
  return out;
}

}  // namespace leadlag
