#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "leadlag/naples.hpp"
#include "leadlag/rng.hpp"
#include "leadlag/sim.hpp"
#include "leadlag/theory.hpp"

using namespace leadlag;

namespace {

std::vector<double> ladder(double delta, double T, double offset = 0.0) {
  std::vector<double> v;
  for (double t = offset; t <= T + 1e-9; t += delta) v.push_back(t);
  return v;
}

}  // namespace

TEST_CASE("orthant probability at reference correlations") {
  REQUIRE(orthant_probability(0.0) == 0.25);
  REQUIRE(orthant_probability(1.0) == Catch::Approx(0.5).margin(1e-15));
  REQUIRE(orthant_probability(0.5) == Catch::Approx(1.0 / 3.0).margin(1e-15));
  REQUIRE(orthant_probability(-1.0) == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("orthant probability guards its domain") {
  REQUIRE_THROWS_AS(orthant_probability(1.0 + 1e-6), DomainError);
  // within the floating-point guard band the argument is clamped
  REQUIRE(orthant_probability(1.0 + 1e-13) == Catch::Approx(0.5).margin(1e-15));
}

TEST_CASE("equispaced expectation: zero lag") {
  REQUIRE(expected_r_equispaced({0.9, 0.0, 10.0, 100}) == 0.0);
}

TEST_CASE("equispaced expectation: peak value at one spacing") {
  const double v = expected_r_equispaced({0.9, 10.0, 10.0, 1});
  REQUIRE(v == Catch::Approx(std::asin(0.9) / std::numbers::pi).epsilon(1e-15));
}

TEST_CASE("equispaced expectation: full correlation, two units") {
  REQUIRE(expected_r_equispaced({1.0, 10.0, 10.0, 2}) == Catch::Approx(1.0).margin(1e-15));
}

TEST_CASE("equispaced expectation: mirrored lag is the exact negative") {
  const EquispacedModel up{0.9, 10.0, 10.0, 7};
  const EquispacedModel dn{0.9, -10.0, 10.0, 7};
  REQUIRE(expected_r_equispaced(dn) == -expected_r_equispaced(up));
}

TEST_CASE("equispaced expectation: oddness is exact everywhere") {
  Rng rng(901);
  for (int rep = 0; rep < 1000; ++rep) {
    const double rho = 2.0 * rng.uniform01() - 1.0;
    const double delta = 0.5 + 20.0 * rng.uniform01();
    const double theta = (rng.uniform01() - 0.5) * 6.0 * delta;
    const std::int64_t l = 1 + static_cast<std::int64_t>(rng.next_u64() % 500);
    REQUIRE(expected_r_equispaced({rho, -theta, delta, l}) ==
            -expected_r_equispaced({rho, theta, delta, l}));
  }
}

TEST_CASE("equispaced expectation: strictly increasing on the rising branch") {
  const double delta = 10.0;
  double prev = 0.0;
  for (double theta = 0.5; theta < delta; theta += 0.5) {
    const double v = expected_r_equispaced({0.8, theta, delta, 10});
    REQUIRE(v > prev);
    prev = v;
  }
}

TEST_CASE("equispaced expectation: zero correlation kills every lag") {
  for (double theta = -30.0; theta <= 30.0; theta += 1.5)
    REQUIRE(expected_r_equispaced({0.0, theta, 10.0, 50}) == 0.0);
}

TEST_CASE("equispaced expectation: zero at and beyond twice the spacing") {
  REQUIRE(expected_r_equispaced({0.9, 20.0, 10.0, 9}) == 0.0);
  REQUIRE(expected_r_equispaced({0.9, 25.0, 10.0, 9}) == 0.0);
  REQUIRE(expected_r_equispaced({0.9, -47.0, 10.0, 9}) == 0.0);
}

TEST_CASE("equispaced model validation") {
  REQUIRE_THROWS_AS(expected_r_equispaced({1.5, 1.0, 10.0, 1}), InvalidConfig);
  REQUIRE_THROWS_AS(expected_r_equispaced({0.5, 1.0, -1.0, 1}), InvalidConfig);
  REQUIRE_THROWS_AS(expected_r_equispaced({0.5, 1.0, 10.0, 0}), InvalidConfig);
}

TEST_CASE("general expectation: offset equispaced grids vanish past twice the spacing") {
  const double delta = 10.0;
  const GridModel up{ladder(delta, 500.0), ladder(delta, 500.0, delta / 2), 0.9, 2 * delta};
  REQUIRE(expected_r_general(up) == 0.0);
  const GridModel dn{ladder(delta, 500.0), ladder(delta, 500.0, delta / 2), 0.9, -2 * delta};
  REQUIRE(expected_r_general(dn) == 0.0);
  REQUIRE(expected_r_general({ladder(delta, 500.0), ladder(delta, 500.0, delta / 2), 0.9,
                              3 * delta}) == 0.0);
}

TEST_CASE("general expectation reduces to the closed form on shared equispaced grids") {
  const double delta = 10.0;
  const auto grid = ladder(delta, 2000.0);
  for (double theta : {0.0, 2.5, 5.0, 10.0, 15.0, 19.5, 20.0, 25.0, -2.5, -10.0, -15.0}) {
    for (double rho : {0.5, 0.9}) {
      const auto ge = expected_r_general_detail({grid, grid, rho, theta}, TieRule::window_end);
      const EquispacedModel em{rho, theta, delta, std::max<std::int64_t>(ge.implied_l(), 1)};
      const double closed = expected_r_equispaced(em);
      REQUIRE(std::fabs(ge.value - closed) <= 1e-12 * std::max(1.0, std::fabs(closed)));
    }
  }
}

TEST_CASE("general expectation: implied scale count on shared grids") {
  const auto grid = ladder(10.0, 1000.0);  // 101 ticks
  const auto ge = expected_r_general_detail({grid, grid, 0.9, 5.0}, TieRule::window_end);
  // one contributing pair per interior signal tick, in one direction only
  REQUIRE(ge.follow_y_terms == grid.size() - 2);
  REQUIRE(ge.follow_x_terms == 0);
  REQUIRE(ge.implied_l() == 2 * static_cast<std::int64_t>(grid.size() - 2));
  const auto neg = expected_r_general_detail({grid, grid, 0.9, -5.0}, TieRule::window_end);
  REQUIRE(neg.follow_y_terms == 0);
  REQUIRE(neg.follow_x_terms == grid.size() - 2);
}

TEST_CASE("general expectation: strict rule on shared grids cancels exactly") {
  const auto grid = ladder(10.0, 1000.0);
  for (double theta : {0.0, 2.5, 5.0, -5.0})
    REQUIRE(expected_r_general({grid, grid, 0.9, theta}) == 0.0);
}

TEST_CASE("general expectation is nonnegative for small positive lags on centered grids") {
  Rng rng(902);
  for (int rep = 0; rep < 200; ++rep) {
    // response ticks near window centers, jitter below a quarter spacing
    std::vector<double> s = ladder(1.0, 40.0);
    std::vector<double> t;
    for (double u : s) t.push_back(u + 0.5 + 0.2 * (2.0 * rng.uniform01() - 1.0) * 0.5);
    const double theta = 0.25 + 0.5 * rng.uniform01();
    REQUIRE(expected_r_general({s, t, 0.8, theta}) >= 0.0);
  }
}

TEST_CASE("general expectation rejects non-interleaved grids") {
  try {
    expected_r_general({{0.0, 10.0, 20.0}, {1.0, 2.0, 3.0, 15.0}, 0.5, 0.0});
    FAIL("expected InterleavingViolation");
  } catch (const InterleavingViolation& e) {
    REQUIRE(e.index == 0);
  }
}

TEST_CASE("general expectation matches Monte Carlo on random interleaved grids") {
  // strictly alternating ticks, so the interleaving condition holds by
  // construction; 1e5 driven paths on those exact grids
  Rng rng(903);
  std::vector<double> s, t;
  double now = 0.0;
  bool to_s = true;
  while (s.size() + t.size() < 36) {
    now += 0.3 + 0.7 * rng.uniform01();
    (to_s ? s : t).push_back(now);
    to_s = !to_s;
  }
  const double rho = 0.8, theta = 0.3;
  const double analytic = expected_r_general({s, t, rho, theta});

  const std::size_t paths = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t p = 0; p < paths; ++p) {
    GbmPairConfig cfg;
    cfg.rho = rho;
    cfg.theta = theta;
    cfg.horizon = now;
    cfg.seed = mix64(904, p);
    const auto [x, y] = gbm_pair(cfg, s, t);
    const double r = naples_r(x, y, std::numeric_limits<double>::infinity());
    sum += r;
    sumsq += r * r;
  }
  const double n = static_cast<double>(paths);
  const double mean = sum / n;
  const double se = std::sqrt((sumsq - n * mean * mean) / (n - 1.0) / n);
  REQUIRE(std::fabs(mean - analytic) <= 3.0 * se);
}

TEST_CASE("expected curve is odd and vanishes beyond twice the spacing") {
  const EquispacedModel m{0.9, 0.0, 10.0, 100};
  const auto curve = expected_curve(m, -40.0, 40.0, 0.5);
  REQUIRE(curve.size() == 161);
  for (const auto& [theta, v] : curve) {
    // oddness, checked against the point computed at the mirrored lag
    REQUIRE(v == -expected_r_equispaced({0.9, -theta, 10.0, 100}));
    if (std::fabs(theta) >= 20.0) REQUIRE(v == 0.0);
  }
}

TEST_CASE("expected curve attains its maximum at the spacing") {
  const auto curve = expected_curve({0.9, 0.0, 10.0, 100}, -40.0, 40.0, 0.5);
  double best_theta = 0.0, best = -1e300;
  for (const auto& [theta, v] : curve)
    if (v > best) {
      best = v;
      best_theta = theta;
    }
  REQUIRE(best_theta == 10.0);
}
