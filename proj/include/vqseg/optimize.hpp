#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vqseg/common.hpp"

namespace vqseg {

using CostFn = std::function<double(std::span<const double>)>;

struct OptimizerConfig {
  std::uint64_t max_evaluations = 100000;
  double tolerance = 1e-6;
  int population = 0;        // differential evolution; 0 means 15 * dim
  double de_weight = 0.8;    // F
  double de_crossover = 0.9; // CR
  double lower = 0.0;        // box bounds, applied per dimension
  double upper = kTwoPi;
  std::uint64_t seed = 0;
};

struct OptimizerResult {
  std::vector<double> best_params;
  double best_cost = 0.0;
  std::uint64_t evaluations = 0;
  /// (evaluation index, cost) for every cost-function call, in call order.
  std::vector<std::pair<std::uint64_t, double>> trajectory;
  bool converged = false;
};

/// Downhill simplex with reflection/expansion/contraction/shrink
/// coefficients 1, 2, 0.5, 0.5. Stops when the simplex cost spread drops
/// below cfg.tolerance or the evaluation budget runs out. Throws
/// std::runtime_error if the cost function returns a non-finite value.
OptimizerResult nelder_mead(const CostFn& f, std::vector<double> x0,
                            const OptimizerConfig& cfg);

/// Direction-set method with golden-section line minimisation bounded to
/// the [cfg.lower, cfg.upper] box. Stops when a sweep's relative cost
/// decrease falls below cfg.tolerance.
OptimizerResult powell(const CostFn& f, std::vector<double> x0,
                       const OptimizerConfig& cfg);

/// rand/1/bin differential evolution over the bounds box. Stops when the
/// population cost spread drops below cfg.tolerance; an in-flight
/// generation is completed, so evaluations may exceed the budget by at
/// most the population size.
OptimizerResult differential_evolution(const CostFn& f, int dim,
                                       const OptimizerConfig& cfg);

enum class OptimizerKind { NelderMead, Powell, DifferentialEvolution };

std::string optimizer_name(OptimizerKind k);
OptimizerKind parse_optimizer(const std::string& name);

OptimizerResult run_optimizer(OptimizerKind kind, const CostFn& f,
                              std::vector<double> x0, int dim,
                              const OptimizerConfig& cfg);

}  // namespace vqseg
