// Acceptance suite: one line per criterion, exit code = number of failures.
//
// Each criterion pins its full configuration here; nothing is deferred to
// runtime calibration. Criterion 2(b) is expected to fail: the sign-profile
// argmax carries an intrinsic offset of about two thirds of the mean
// inter-tick gap on non-synchronous grids, so at the longest horizon its
// absolute error cannot drop to the level of the shifted-clock covariance
// contrast, whose error there is a fraction of a grid step. The suite
// reports the measured numbers either way.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "leadlag/leadlag.hpp"

using namespace leadlag;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

// --------------------------------------------------------------------- 1 --
// Analytic expectation oracle: shared equispaced grids (zero gap spread),
// window_end tie rule (the regime in which the closed form is exact), scale
// count read off the grids by pair counting. 2000 paths per cell.
Outcome criterion1() {
  OracleConfig cfg;
  cfg.rhos = {0.5, 0.9};
  cfg.thetas = {0.0, 2.5, 5.0, 10.0, 15.0, 25.0, -2.5, -5.0, -10.0, -15.0, -25.0};
  cfg.delta = 10.0;
  cfg.T = 1e4;
  cfg.paths = 2000;
  cfg.base_seed = 1001;
  const auto rep = run_oracle_suite(cfg);
  std::size_t within3 = 0;
  double worst = 0.0;
  for (const auto& row : rep.rows) {
    const double az = std::fabs(row.z);
    worst = std::max(worst, az);
    if (az <= 3.0) ++within3;
  }
  const double frac = static_cast<double>(within3) / static_cast<double>(rep.rows.size());
  Outcome out;
  out.name = "criterion 1 (expectation oracle, |z|<=3 in >=90% of cells, <=4 in all)";
  out.pass = frac >= 0.90 && worst <= 4.0;
  out.detail = fmt("%zu/%zu cells |z|<=3, max |z|=%.2f  [shared sd=0 grids, window_end ties, "
                   "l from pair counting]",
                   within3, rep.rows.size(), worst);
  return out;
}

// --------------------------------------------------------------------- 2 --
// Convergence benchmark at desk scale.
Outcome criterion2() {
  ConvergenceConfig cfg;
  cfg.horizons = {std::pow(10.0, 2.5), 1e3, std::pow(10.0, 3.5), 1e4};
  cfg.trials = 100;
  cfg.estimators = {Estimator::naples, Estimator::hry};
  cfg.grid = LagGrid::from_range(-100, 100, 1);
  cfg.sim.theta = 10.0;
  cfg.sim.rho = 0.9;
  cfg.sampling = SamplingLaw{10.0, 2.0};
  cfg.base_seed = 2002;
  const auto rep = run_convergence(cfg);

  const auto row = [&](const std::string& est, double horizon) -> const ConvergenceRow& {
    for (const auto& r : rep.rows)
      if (r.estimator == est && r.horizon == horizon) return r;
    throw Error("row not found");
  };
  const auto& n_lo = row("naples", cfg.horizons.front());
  const auto& n_hi = row("naples", cfg.horizons.back());
  const auto& h_hi = row("hry", cfg.horizons.back());

  const double margin = n_lo.mae - n_hi.mae;
  const double need = 2.0 * std::sqrt(n_lo.se * n_lo.se + n_hi.se * n_hi.se);
  const bool pass_a = margin > need;
  const bool pass_b = n_hi.mae <= h_hi.mae;

  Outcome out;
  out.name = "criterion 2 (convergence: (a) MAE drop > 2 SE, (b) naples <= hry at 1e4)";
  out.pass = pass_a && pass_b;
  out.detail = fmt("(a) %s: naples MAE %.2f -> %.2f, drop %.2f vs needed %.2f; "
                   "(b) %s: naples %.2f vs hry %.2f at T=1e4",
                   pass_a ? "PASS" : "FAIL", n_lo.mae, n_hi.mae, margin, need,
                   pass_b ? "PASS" : "FAIL", n_hi.mae, h_hi.mae);
  return out;
}

// --------------------------------------------------------------------- 3 --
// Per-lag profile cost is linear in the merged tick count.
Outcome criterion3() {
  const auto make_series = [](std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> t(n), p(n);
    double now = 0.0, price = 100.0;
    for (std::size_t i = 0; i < n; ++i) {
      now += 0.5 + rng.uniform01();
      price *= std::exp(0.01 * rng.gaussian());
      t[i] = now;
      p[i] = price;
    }
    return TickSeries(std::move(t), std::move(p));
  };
  const auto grid = LagGrid::from_range(-8, 8, 1);  // 17 lags
  const auto time_profile = [&](std::size_t half_n) {
    const auto x = make_series(half_n, 31);
    const auto y = make_series(half_n, 32);
    std::vector<double> runs;
    for (int rep = 0; rep < 5; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto p = naples_profile(x, y, grid);
      const auto t1 = std::chrono::steady_clock::now();
      if (p.values.empty()) throw Error("empty profile");
      runs.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return median(runs) / static_cast<double>(grid.lags.size());
  };
  const double t1 = time_profile(50000);   // merged N = 1e5
  const double t4 = time_profile(200000);  // merged N = 4e5
  const double ratio = t4 / t1;
  Outcome out;
  out.name = "criterion 3 (linear per-lag cost: t(4N)/t(N) <= 6 at N=1e5)";
  out.pass = ratio <= 6.0;
  out.detail = fmt("per-lag %.3f ms at N=1e5, %.3f ms at N=4e5, ratio %.2f", t1, t4, ratio);
  return out;
}

// --------------------------------------------------------------------- 4 --
// Exact identities, 1000 random instances each.
TickSeries lattice_series(Rng& rng, std::size_t n) {
  std::vector<double> t, p;
  double now = 0.5 * static_cast<double>(rng.next_u64() % 10);
  double price = 100.0;
  for (std::size_t i = 0; i < n; ++i) {
    t.push_back(now);
    now += 0.5 * static_cast<double>(1 + rng.next_u64() % 6);
    price *= std::exp(0.02 * rng.gaussian());
    p.push_back(price);
  }
  return TickSeries(std::move(t), std::move(p));
}

Outcome criterion4() {
  Rng rng(4004);
  std::size_t failures = 0;
  std::string first_fail;
  const auto check = [&](bool ok, const char* what) {
    if (!ok) {
      ++failures;
      if (first_fail.empty()) first_fail = what;
    }
  };

  for (int rep = 0; rep < 1000; ++rep) {
    const auto x = lattice_series(rng, 2 + rng.next_u64() % 20);
    const auto y = lattice_series(rng, 2 + rng.next_u64() % 20);
    const double t = (rng.next_u64() % 3 == 0) ? kInf : x.last_time() * rng.uniform01() * 1.5;

    check(naples_r_exact(x, y, t) == -naples_r_exact(y, x, t), "naples antisymmetry");
    check(naples_r_exact(x, x, t) == 0, "naples self-zero");
    check(hy_covariance(x, y) == hy_covariance(y, x), "hy symmetry");

    {  // synchronous reduction
      std::vector<double> py(x.size());
      double price = 50.0;
      for (auto& v : py) {
        price *= std::exp(0.02 * rng.gaussian());
        v = price;
      }
      const TickSeries ysync(x.times(), py);
      const auto dx = log_returns(x);
      const auto dy = log_returns(ysync);
      ExactSum realized;
      for (std::size_t i = 0; i < dx.size(); ++i) realized.add(dx[i] * dy[i]);
      const double hv = hy_covariance(x, ysync);
      const double rv = realized.value();
      check(std::fabs(hv - rv) <= 1e-12 * std::max(1.0, std::fabs(rv)), "hy sync reduction");
    }

    const double lag = 0.5 * static_cast<double>(static_cast<int>(rng.next_u64() % 33) - 16);
    check(hry_contrast(x, y, lag) == hry_contrast(y, x, -lag), "hry mirror");

    const std::int64_t slot_shift = static_cast<std::int64_t>(rng.next_u64() % 13) - 6;
    const double ds = ds_index(x, y, 1.0, slot_shift);
    check(ds >= 0.0 && ds <= 1.0, "ds range");

    {  // expectation curve: odd, zero beyond twice the spacing
      const double rho = 2.0 * rng.uniform01() - 1.0;
      const double delta = 0.5 + 10.0 * rng.uniform01();
      const std::int64_t l = 1 + static_cast<std::int64_t>(rng.next_u64() % 200);
      const double theta = (rng.uniform01() - 0.5) * 8.0 * delta;
      const double up = expected_r_equispaced({rho, theta, delta, l});
      const double dn = expected_r_equispaced({rho, -theta, delta, l});
      check(dn == -up, "curve oddness");
      if (std::fabs(theta) >= 2.0 * delta) check(up == 0.0, "curve zero beyond 2*delta");
    }
  }

  Outcome out;
  out.name = "criterion 4 (exact identities, 1000 instances each)";
  out.pass = failures == 0;
  out.detail = failures == 0 ? "all identities exact"
                             : fmt("%zu failures, first: %s", failures, first_fail.c_str());
  return out;
}

// --------------------------------------------------------------------- 5 --
// Brute-force equivalence on small instances.
std::int64_t naples_r_brute(const TickSeries& x, const TickSeries& y, double t) {
  const auto px = sign_path(x);
  const auto py = sign_path(y);
  const auto cum = [](const SignPath& p, double u) {
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < p.times.size(); ++k)
      if (p.times[k] < u) acc += p.signs[k];
    return acc;
  };
  std::int64_t first = 0, second = 0;
  for (std::size_t i = 1; i + 1 < x.size(); ++i)
    if (x.times()[i + 1] < t)
      first += static_cast<std::int64_t>(px.signs[i - 1]) *
               (cum(py, x.times()[i + 1]) - cum(py, x.times()[i]));
  for (std::size_t j = 1; j + 1 < y.size(); ++j)
    if (y.times()[j + 1] < t)
      second += static_cast<std::int64_t>(py.signs[j - 1]) *
                (cum(px, y.times()[j + 1]) - cum(px, y.times()[j]));
  return first - second;
}

double hy_brute(const TickSeries& x, const TickSeries& y) {
  const auto dx = log_returns(x);
  const auto dy = log_returns(y);
  ExactSum acc;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    for (std::size_t j = 0; j + 1 < y.size(); ++j)
      if (x.times()[i] < y.times()[j + 1] && y.times()[j] < x.times()[i + 1])
        acc.add(dx[i] * dy[j]);
  return acc.value();
}

Outcome criterion5() {
  Rng rng(5005);
  std::size_t failures = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t nx = 2 + rng.next_u64() % 14;
    const std::size_t ny = 2 + rng.next_u64() % std::min<std::size_t>(28 - nx, 14);
    const auto x = lattice_series(rng, nx);
    const auto y = lattice_series(rng, ny);
    const double t = (rng.next_u64() % 2 == 0) ? kInf : x.last_time() * rng.uniform01() * 1.5;
    if (naples_r_exact(x, y, t) != naples_r_brute(x, y, t)) ++failures;
    if (hy_covariance(x, y) != hy_brute(x, y)) ++failures;
  }
  Outcome out;
  out.name = "criterion 5 (brute-force equivalence, 500 instances, n+m<=30)";
  out.pass = failures == 0;
  out.detail = failures == 0 ? "one-pass == literal transcription, sweep == double loop, exact"
                             : fmt("%zu mismatches", failures);
  return out;
}

// --------------------------------------------------------------------- 6 --
// Sign convention end to end. The sampling law is not pinned by the
// requirement; a 2-second mean gap keeps the profile's known argmax offset
// (~0.66 gaps) small against the [5, 15] band while leaving the grids
// genuinely non-synchronous.
Outcome criterion6() {
  const auto run_side = [](double theta) {
    std::vector<double> hats;
    for (std::size_t trial = 0; trial < 50; ++trial) {
      GbmPairConfig cfg;
      cfg.rho = 0.9;
      cfg.theta = theta;
      cfg.horizon = 1e4;
      cfg.seed = mix64(6006, static_cast<std::uint64_t>(theta > 0 ? 1 : 2), trial);
      const auto sg =
          sample_times({2.0, 0.4}, cfg.horizon, substream_seed(cfg.seed, Stream::grid_x));
      const auto tg =
          sample_times({2.0, 0.4}, cfg.horizon, substream_seed(cfg.seed, Stream::grid_y));
      const auto [x, y] = gbm_pair(cfg, sg, tg);
      hats.push_back(naples_profile(x, y, LagGrid::from_range(-100, 100, 1)).best_lag);
    }
    return median(hats);
  };
  const double med_pos = run_side(10.0);
  const double med_neg = run_side(-10.0);
  Outcome out;
  out.name = "criterion 6 (sign convention: median theta_hat in [5,15] / [-15,-5])";
  out.pass = med_pos > 0.0 && med_pos >= 5.0 && med_pos <= 15.0 && med_neg < 0.0 &&
             med_neg >= -15.0 && med_neg <= -5.0;
  out.detail = fmt("theta=+10: median %.1f; theta=-10: median %.1f  [gaps N(2,0.4), 50 trials]",
                   med_pos, med_neg);
  return out;
}

// --------------------------------------------------------------------- 7 --
// Regime switch detection with rolling windows. The real-data experiment is
// not reproducible (proprietary feed), so a synthetic switch stands in: the
// delay jumps from 0 to 10 at T/2. Gap law chosen at 1 second so the known
// argmax offset stays inside one grid step.
Outcome criterion7() {
  const double T = 8000.0, t_switch = 4000.0, window = 1000.0, step = 250.0;
  std::vector<double> pre_all, post_all;
  for (std::size_t run = 0; run < 20; ++run) {
    GbmPairConfig cfg;
    cfg.rho = 0.9;
    cfg.horizon = T;
    cfg.seed = mix64(7007, run);
    const auto sg = sample_times({1.0, 0.2}, T, substream_seed(cfg.seed, Stream::grid_x));
    const auto tg = sample_times({1.0, 0.2}, T, substream_seed(cfg.seed, Stream::grid_y));
    std::vector<double> eval(tg);
    for (double& u : eval)
      if (u >= t_switch) u -= 10.0;
    const auto [x, y] = gbm_pair_eval(cfg, sg, tg, eval);
    const auto roll = rolling_estimate(x, y, LagGrid::from_range(-20, 20, 1), window, step);
    for (std::size_t k = 0; k < roll.window_ends.size(); ++k) {
      if (!roll.has_value[k]) continue;
      const double e = roll.window_ends[k];
      if (e <= t_switch)
        pre_all.push_back(roll.lags_hat[k]);
      else if (e - window >= t_switch)
        post_all.push_back(roll.lags_hat[k]);
    }
  }
  const double med_pre = median(pre_all);
  const double med_post = median(post_all);
  Outcome out;
  out.name = "criterion 7 (regime switch: pre median within 1 of 0, post within 1 of 10)";
  out.pass = std::fabs(med_pre - 0.0) <= 1.0 && std::fabs(med_post - 10.0) <= 1.0;
  out.detail = fmt("pre-switch median %.1f (%zu windows), post-switch median %.1f (%zu windows)"
                   "  [gaps N(1,0.2), 20 runs]",
                   med_pre, pre_all.size(), med_post, post_all.size());
  return out;
}

}  // namespace

int main() {
  std::vector<Outcome> results;
  results.push_back(criterion1());
  results.push_back(criterion2());
  results.push_back(criterion3());
  results.push_back(criterion4());
  results.push_back(criterion5());
  results.push_back(criterion6());
  results.push_back(criterion7());

  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s: %s — %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL", r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed;
}
