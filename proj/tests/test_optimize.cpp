#include <stdexcept>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "doctest.h"
#include "vqseg/common.hpp"
#include "vqseg/optimize.hpp"

using namespace vqseg;

namespace {

// Running minimum of a trajectory must be non-increasing and end at best_cost.
void check_result_invariants(const OptimizerResult& r, const OptimizerConfig& cfg,
                             std::uint64_t slack = 0) {
  CHECK(r.evaluations == r.trajectory.size());
  CHECK(r.evaluations <= cfg.max_evaluations + slack);
  double running = r.trajectory.empty() ? 0.0 : r.trajectory.front().second;
  for (const auto& [idx, cost] : r.trajectory) running = std::min(running, cost);
  CHECK(r.best_cost == running);
}

}  // namespace

TEST_CASE("nelder-mead on a 1-d parabola") {
  OptimizerConfig cfg;
  cfg.tolerance = 1e-12;
  const CostFn f = [](std::span<const double> x) { return (x[0] - 1.0) * (x[0] - 1.0); };
  const OptimizerResult r = nelder_mead(f, {5.0}, cfg);
  CHECK(r.converged);
  CHECK(std::abs(r.best_params[0] - 1.0) < 1e-4);
  check_result_invariants(r, cfg);
}

TEST_CASE("nelder-mead converges immediately on a constant") {
  OptimizerConfig cfg;
  const CostFn f = [](std::span<const double>) { return 3.25; };
  const OptimizerResult r = nelder_mead(f, {0.5, 1.5}, cfg);
  CHECK(r.converged);
  CHECK(r.best_cost == 3.25);
  CHECK(r.evaluations == 3);  // just the initial simplex
}

TEST_CASE("nelder-mead on a piecewise-constant landscape") {
  OptimizerConfig cfg;
  const CostFn f = [](std::span<const double> x) {
    const double v = x[0];
    if (v < 2.0) return 1.0;
    if (v < 4.0) return 0.0;
    return 4.0;
  };
  const OptimizerResult r = nelder_mead(f, {5.5, 0.0}, cfg);
  const bool plateau = r.best_cost == 0.0 || r.best_cost == 1.0 || r.best_cost == 4.0;
  CHECK(plateau);
  check_result_invariants(r, cfg);
}

TEST_CASE("nelder-mead aborts on non-finite cost") {
  OptimizerConfig cfg;
  const CostFn f = [](std::span<const double> x) {
    return x[0] > 4.0 ? std::numeric_limits<double>::quiet_NaN() : x[0];
  };
  CHECK_THROWS_AS(nelder_mead(f, {5.0}, cfg), std::runtime_error);
}

TEST_CASE("powell recovers a separable quadratic") {
  OptimizerConfig cfg;
  cfg.lower = -10.0;
  cfg.upper = 10.0;
  cfg.tolerance = 1e-12;
  const std::vector<double> target{1.5, -2.0, 4.25};
  const CostFn f = [&](std::span<const double> x) {
    double v = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) v += (x[i] - target[i]) * (x[i] - target[i]);
    return v;
  };
  const OptimizerResult r = powell(f, {0.0, 0.0, 0.0}, cfg);
  CHECK(r.converged);
  for (std::size_t i = 0; i < target.size(); ++i)
    CHECK(std::abs(r.best_params[i] - target[i]) < 1e-4);
  check_result_invariants(r, cfg);
}

TEST_CASE("powell finds the cosine minimum on [0, 2pi]") {
  OptimizerConfig cfg;  // default bounds are [0, 2pi]
  cfg.tolerance = 1e-12;
  const CostFn f = [](std::span<const double> x) { return std::cos(x[0]); };
  const OptimizerResult r = powell(f, {1.0}, cfg);
  CHECK(std::abs(r.best_params[0] - kPi) < 1e-3);
  CHECK(r.best_cost == doctest::Approx(-1.0));
}

TEST_CASE("powell respects a 10-evaluation budget") {
  OptimizerConfig cfg;
  cfg.max_evaluations = 10;
  const CostFn f = [](std::span<const double> x) { return x[0] * x[0]; };
  const OptimizerResult r = powell(f, {3.0}, cfg);
  CHECK(r.evaluations <= 10);
  CHECK_FALSE(r.converged);
  check_result_invariants(r, cfg);
}

TEST_CASE("differential evolution solves a sphere") {
  OptimizerConfig cfg;
  cfg.lower = -5.0;
  cfg.upper = 5.0;
  cfg.tolerance = 1e-10;
  cfg.seed = 2024;
  const CostFn f = [](std::span<const double> x) {
    double v = 0.0;
    for (const double xi : x) v += xi * xi;
    return v;
  };
  const OptimizerResult r = differential_evolution(f, 3, cfg);
  CHECK(r.best_cost < 1e-6);
  check_result_invariants(r, cfg, 45);  // population 15*dim
}

TEST_CASE("differential evolution finds the global plateau of a step landscape") {
  // 4 coordinates decode to a bit each; the plateau table has a unique
  // global minimum, found here by enumerating all 16 patterns.
  const auto decode = [](std::span<const double> x) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] >= kPi) k |= std::uint64_t{1} << i;
    return k;
  };
  std::vector<double> table(16);
  for (std::size_t k = 0; k < 16; ++k)
    table[k] = static_cast<double>((7 * k + 3) % 13);  // unique zero at k = 7
  double best_table = table[0];
  std::size_t best_k = 0;
  for (std::size_t k = 1; k < 16; ++k)
    if (table[k] < best_table) {
      best_table = table[k];
      best_k = k;
    }
  REQUIRE(best_k == 7);

  OptimizerConfig cfg;
  cfg.seed = 7;
  const CostFn f = [&](std::span<const double> x) { return table[decode(x)]; };
  const OptimizerResult r = differential_evolution(f, 4, cfg);
  CHECK(r.converged);
  CHECK(r.best_cost == best_table);
}

TEST_CASE("differential evolution is deterministic per seed") {
  OptimizerConfig cfg;
  cfg.seed = 31337;
  cfg.max_evaluations = 2000;
  const CostFn f = [](std::span<const double> x) {
    return std::cos(x[0]) + std::sin(2.0 * x[1]);
  };
  const OptimizerResult a = differential_evolution(f, 2, cfg);
  const OptimizerResult b = differential_evolution(f, 2, cfg);
  CHECK(a.trajectory == b.trajectory);
  CHECK(a.best_params == b.best_params);
  check_result_invariants(a, cfg, 30);
}

TEST_CASE("evaluation budget caps hold for every optimizer") {
  OptimizerConfig cfg;
  cfg.max_evaluations = 50;
  cfg.seed = 5;
  const CostFn f = [](std::span<const double> x) { return std::cos(3.0 * x[0]); };
  check_result_invariants(nelder_mead(f, {0.3}, cfg), cfg);
  check_result_invariants(powell(f, {0.3}, cfg), cfg);
  check_result_invariants(differential_evolution(f, 1, cfg), cfg, 15);
}
