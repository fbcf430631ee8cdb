// leadlag CLI: simulate correlated tick pairs, estimate lead-lag with the
// sign-trading index or the reference estimators, run rolling-window and
// benchmark experiments, and tabulate the analytic expectation curve.
//
// Exit codes: 0 success, 1 usage/input error, 2 internal error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leadlag/leadlag.hpp"

namespace {

struct GridSpec {
  double start = -100.0, stop = 100.0, step = 1.0;
};

// start:stop:step, both ends included when step divides the range
GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &g.start, &g.stop, &g.step) != 3)
    throw CLI::ValidationError("grid", "expected start:stop:step, got '" + s + "'");
  if (!(g.step > 0.0)) throw CLI::ValidationError("grid", "step must be > 0");
  if (g.stop < g.start) throw CLI::ValidationError("grid", "stop must be >= start");
  return g;
}

leadlag::TimestampUnit parse_unit(const std::string& s) {
  if (s == "seconds" || s == "s") return leadlag::TimestampUnit::seconds;
  if (s == "millis" || s == "ms") return leadlag::TimestampUnit::millis;
  throw CLI::ValidationError("timestamp-format", "expected seconds|millis");
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (out.empty()) throw CLI::ValidationError("list", "empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lead-lag estimation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // shared flags (--seed/--out/--format) after the subcommand

  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "csv";
  app.add_option("--seed", seed, "base RNG seed")->capture_default_str();
  app.add_option("--out", out_path, "output path");
  app.add_option("--format", format, "output format: csv|json")->capture_default_str();

  // simulate ---------------------------------------------------------------
  auto* sim_cmd = app.add_subcommand("simulate", "write a simulated correlated tick pair");
  double sim_T = 1e4, sim_theta = 10.0, sim_rho = 0.9, sim_s1 = 1.0, sim_s2 = 1.0;
  double sim_x0 = 100.0, sim_y0 = 100.0, sim_mu = 10.0, sim_sd = 2.0;
  std::string out_x = "x.csv", out_y = "y.csv";
  sim_cmd->add_option("--T", sim_T, "horizon, seconds")->capture_default_str();
  sim_cmd->add_option("--theta", sim_theta, "lead-lag, seconds (positive: x leads)")
      ->capture_default_str();
  sim_cmd->add_option("--rho", sim_rho, "correlation")->capture_default_str();
  sim_cmd->add_option("--sigma1", sim_s1, "x volatility per sqrt(second)")->capture_default_str();
  sim_cmd->add_option("--sigma2", sim_s2, "y volatility per sqrt(second)")->capture_default_str();
  sim_cmd->add_option("--x0", sim_x0, "x initial price")->capture_default_str();
  sim_cmd->add_option("--y0", sim_y0, "y initial price")->capture_default_str();
  sim_cmd->add_option("--gap-mean", sim_mu, "mean inter-tick gap")->capture_default_str();
  sim_cmd->add_option("--gap-sd", sim_sd, "gap standard deviation")->capture_default_str();
  sim_cmd->add_option("--out-x", out_x, "x output CSV")->capture_default_str();
  sim_cmd->add_option("--out-y", out_y, "y output CSV")->capture_default_str();

  // estimate / profile -------------------------------------------------------
  std::string x_path, y_path, grid_spec = "-100:100:1", method = "naples", ts_format = "seconds";
  double ds_delta = 1.0;
  auto add_pair_options = [&](CLI::App* cmd) {
    cmd->add_option("--x", x_path, "first tick CSV")->required();
    cmd->add_option("--y", y_path, "second tick CSV")->required();
    cmd->add_option("--grid", grid_spec, "candidate lags, start:stop:step")
        ->capture_default_str();
    cmd->add_option("--timestamp-format", ts_format, "seconds|millis")->capture_default_str();
  };
  auto* est_cmd = app.add_subcommand("estimate", "estimate the lead-lag parameter");
  add_pair_options(est_cmd);
  est_cmd->add_option("--method", method, "naples|hry|ds")->capture_default_str();
  est_cmd->add_option("--delta", ds_delta, "activity slot width for ds")->capture_default_str();

  auto* prof_cmd = app.add_subcommand("profile", "write the full lag profile");
  add_pair_options(prof_cmd);
  prof_cmd->add_option("--method", method, "naples|hry|ds")->capture_default_str();
  prof_cmd->add_option("--delta", ds_delta, "activity slot width for ds")->capture_default_str();

  // rolling -------------------------------------------------------------------
  auto* roll_cmd = app.add_subcommand("rolling", "rolling-window lead-lag estimates");
  double window = 3600.0, step = 60.0;
  add_pair_options(roll_cmd);
  roll_cmd->add_option("--window", window, "window length, seconds")->capture_default_str();
  roll_cmd->add_option("--step", step, "window step, seconds")->capture_default_str();

  // bench-convergence ----------------------------------------------------------
  auto* bench_cmd = app.add_subcommand("bench-convergence", "MAE vs horizon benchmark");
  std::string horizons_spec = "2.5:4:0.5";
  std::size_t trials = 100;
  std::string estimators_spec = "naples,hry";
  double b_theta = 10.0, b_rho = 0.9, b_mu = 10.0, b_sd = 2.0;
  bench_cmd->add_option("--log10-horizons", horizons_spec, "log10 T grid, start:stop:step")
      ->capture_default_str();
  bench_cmd->add_option("--trials", trials, "trials per horizon")->capture_default_str();
  bench_cmd->add_option("--estimators", estimators_spec, "subset of naples,hry,ds")
      ->capture_default_str();
  bench_cmd->add_option("--theta", b_theta, "true lead-lag")->capture_default_str();
  bench_cmd->add_option("--rho", b_rho, "correlation")->capture_default_str();
  bench_cmd->add_option("--gap-mean", b_mu, "mean inter-tick gap")->capture_default_str();
  bench_cmd->add_option("--gap-sd", b_sd, "gap standard deviation")->capture_default_str();
  bench_cmd->add_option("--grid", grid_spec, "candidate lags, start:stop:step")
      ->capture_default_str();
  bench_cmd->add_option("--delta", ds_delta, "activity slot width for ds")->capture_default_str();

  // oracle ----------------------------------------------------------------------
  auto* oracle_cmd = app.add_subcommand("oracle", "analytic-vs-empirical expectation suite");
  std::string rhos_spec = "0.5,0.9";
  std::string thetas_spec = "0,2.5,5,10,15,25,-2.5,-5,-10,-15,-25";
  double o_delta = 10.0, o_T = 1e4;
  std::size_t o_paths = 2000;
  oracle_cmd->add_option("--rhos", rhos_spec, "comma-separated correlations")
      ->capture_default_str();
  oracle_cmd->add_option("--thetas", thetas_spec, "comma-separated lags")->capture_default_str();
  oracle_cmd->add_option("--delta", o_delta, "observation spacing")->capture_default_str();
  oracle_cmd->add_option("--T", o_T, "horizon")->capture_default_str();
  oracle_cmd->add_option("--paths", o_paths, "paths per cell")->capture_default_str();

  // expected -----------------------------------------------------------------------
  auto* exp_cmd = app.add_subcommand("expected", "tabulate the analytic expectation curve");
  double e_rho = 0.9, e_delta = 10.0;
  std::int64_t e_l = 100;
  std::string range_spec = "-40:40:0.5";
  exp_cmd->add_option("--rho", e_rho, "correlation")->capture_default_str();
  exp_cmd->add_option("--delta", e_delta, "observation spacing")->capture_default_str();
  exp_cmd->add_option("--l", e_l, "scale count")->capture_default_str();
  exp_cmd->add_option("--range", range_spec, "theta range, start:stop:step")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) std::cerr << sub->help();
    if (app.get_subcommands().empty()) std::cerr << app.help();
    return 1;
  }

  using namespace leadlag;
  try {
    if (*sim_cmd) {
      GbmPairConfig cfg;
      cfg.x0 = sim_x0;
      cfg.y0 = sim_y0;
      cfg.sigma1 = sim_s1;
      cfg.sigma2 = sim_s2;
      cfg.rho = sim_rho;
      cfg.theta = sim_theta;
      cfg.horizon = sim_T;
      cfg.seed = seed;
      const SamplingLaw law{sim_mu, sim_sd};
      const auto sg = sample_times(law, sim_T, substream_seed(seed, Stream::grid_x));
      const auto tg = sample_times(law, sim_T, substream_seed(seed, Stream::grid_y));
      const auto [x, y] = gbm_pair(cfg, sg, tg);
      write_ticks_csv(out_x, x);
      write_ticks_csv(out_y, y);
      std::cout << "wrote " << out_x << " (" << x.size() << " ticks) and " << out_y << " ("
                << y.size() << " ticks)\n";
      return 0;
    }

    if (*est_cmd || *prof_cmd) {
      const auto unit = parse_unit(ts_format);
      const auto x = read_ticks_csv(x_path, unit);
      const auto y = read_ticks_csv(y_path, unit);
      const auto g = parse_grid(grid_spec);
      const LagGrid grid = LagGrid::from_range(g.start, g.stop, g.step);
      LagProfile p;
      if (method == "naples")
        p = naples_profile(x, y, grid);
      else if (method == "hry")
        p = hry_estimate(x, y, grid);
      else if (method == "ds")
        p = ds_estimate(x, y, ds_delta, grid);
      else
        throw CLI::ValidationError("method", "expected naples|hry|ds");
      if (!out_path.empty()) write_profile_csv(out_path, p);
      if (*est_cmd) {
        std::printf("theta_hat=%.17g\n", estimate_lag(p));
        std::printf("min_lag=%.17g\n", minimizing_lag(p));
      } else if (out_path.empty()) {
        write_profile_csv("/dev/stdout", p);
      }
      for (const auto& note : p.notes) std::cerr << "note: " << note << '\n';
      return 0;
    }

    if (*roll_cmd) {
      const auto unit = parse_unit(ts_format);
      const auto x = read_ticks_csv(x_path, unit);
      const auto y = read_ticks_csv(y_path, unit);
      const auto g = parse_grid(grid_spec);
      const auto r =
          rolling_estimate(x, y, LagGrid::from_range(g.start, g.stop, g.step), window, step);
      write_rolling_csv(out_path.empty() ? "/dev/stdout" : out_path, r);
      return 0;
    }

    if (*bench_cmd) {
      ConvergenceConfig cfg;
      const auto h = parse_grid(horizons_spec);
      cfg.horizons.clear();
      for (double e = h.start; e <= h.stop + h.step * 1e-9; e += h.step)
        cfg.horizons.push_back(std::pow(10.0, e));
      cfg.trials = trials;
      cfg.estimators.clear();
      for (const auto& name_str : [&] {
             std::vector<std::string> names;
             std::string cur;
             for (char c : estimators_spec + ",") {
               if (c == ',') {
                 if (!cur.empty()) names.push_back(cur);
                 cur.clear();
               } else
                 cur += c;
             }
             return names;
           }()) {
        if (name_str == "naples")
          cfg.estimators.push_back(Estimator::naples);
        else if (name_str == "hry")
          cfg.estimators.push_back(Estimator::hry);
        else if (name_str == "ds")
          cfg.estimators.push_back(Estimator::ds);
        else
          throw CLI::ValidationError("estimators", "expected subset of naples,hry,ds");
      }
      const auto g = parse_grid(grid_spec);
      cfg.grid = LagGrid::from_range(g.start, g.stop, g.step);
      cfg.sim.theta = b_theta;
      cfg.sim.rho = b_rho;
      cfg.sampling = SamplingLaw{b_mu, b_sd};
      cfg.ds_delta = ds_delta;
      cfg.base_seed = seed;
      const auto report = run_convergence(cfg);
      if (out_path.empty()) {
        std::cout << to_json(report).dump(2) << '\n';
      } else if (format == "json") {
        write_json(out_path, to_json(report));
      } else {
        write_convergence_csv(out_path, report);
      }
      return 0;
    }

    if (*oracle_cmd) {
      OracleConfig cfg;
      cfg.rhos = parse_list(rhos_spec);
      cfg.thetas = parse_list(thetas_spec);
      cfg.delta = o_delta;
      cfg.T = o_T;
      cfg.paths = o_paths;
      cfg.base_seed = seed;
      const auto report = run_oracle_suite(cfg);
      if (out_path.empty()) {
        std::cout << to_json(report).dump(2) << '\n';
      } else if (format == "json") {
        write_json(out_path, to_json(report));
      } else {
        write_oracle_csv(out_path, report);
      }
      return 0;
    }

    if (*exp_cmd) {
      const auto g = parse_grid(range_spec);
      const EquispacedModel m{e_rho, 0.0, e_delta, e_l};
      const auto curve = expected_curve(m, g.start, g.stop, g.step);
      write_curve_csv(out_path.empty() ? "/dev/stdout" : out_path, curve);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const leadlag::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
