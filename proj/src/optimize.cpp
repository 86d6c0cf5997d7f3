#include "vqseg/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "vqseg/rng.hpp"

namespace vqseg {

namespace {

struct BudgetExhausted {};

// Counts and records every cost evaluation, tracks the running best and
// enforces the evaluation cap so the optimizers themselves stay simple.
class Evaluator {
 public:
  Evaluator(const CostFn& f, std::uint64_t cap) : f_(f), cap_(cap) {}

  double operator()(std::span<const double> x) {
    if (result_.evaluations >= cap_) throw BudgetExhausted{};
    const double value = f_(x);
    if (!std::isfinite(value))
      throw std::runtime_error("optimizer: cost function returned a non-finite value at evaluation " +
                               std::to_string(result_.evaluations));
    result_.trajectory.emplace_back(result_.evaluations, value);
    if (result_.evaluations == 0 || value < result_.best_cost) {
      result_.best_cost = value;
      result_.best_params.assign(x.begin(), x.end());
    }
    ++result_.evaluations;
    return value;
  }

  OptimizerResult take(bool converged) {
    result_.converged = converged;
    return std::move(result_);
  }

 private:
  const CostFn& f_;
  std::uint64_t cap_;
  OptimizerResult result_;
};

}  // namespace

OptimizerResult nelder_mead(const CostFn& f, std::vector<double> x0,
                            const OptimizerConfig& cfg) {
  const std::size_t n = x0.size();
  if (n < 1) throw std::invalid_argument("nelder_mead: dimension must be >= 1");
  Evaluator eval(f, cfg.max_evaluations);
  bool converged = false;
  try {
    double step = 0.25 * (cfg.upper - cfg.lower);
    if (!(step > 0)) step = 0.5;

    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> cost(n + 1);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    for (std::size_t i = 0; i <= n; ++i) cost[i] = eval(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    auto sort_order = [&] {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return cost[a] < cost[b]; });
    };

    while (true) {
      sort_order();
      const std::size_t best = order[0];
      const std::size_t second_worst = order[n - 1];
      const std::size_t worst = order[n];
      if (cost[worst] - cost[best] < cfg.tolerance) {
        converged = true;
        break;
      }

      std::vector<double> centroid(n, 0.0);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[order[k]][j] / double(n);

      auto along = [&](double t) {
        std::vector<double> p(n);
        for (std::size_t j = 0; j < n; ++j)
          p[j] = centroid[j] + t * (centroid[j] - simplex[worst][j]);
        return p;
      };

      auto reflected = along(1.0);
      const double fr = eval(reflected);
      if (fr < cost[best]) {
        auto expanded = along(2.0);
        const double fe = eval(expanded);
        if (fe < fr) {
          simplex[worst] = std::move(expanded);
          cost[worst] = fe;
        } else {
          simplex[worst] = std::move(reflected);
          cost[worst] = fr;
        }
      } else if (fr < cost[second_worst]) {
        simplex[worst] = std::move(reflected);
        cost[worst] = fr;
      } else {
        const bool outside = fr < cost[worst];
        auto contracted = along(outside ? 0.5 : -0.5);
        const double fc = eval(contracted);
        if (fc < (outside ? fr : cost[worst])) {
          simplex[worst] = std::move(contracted);
          cost[worst] = fc;
        } else {
          for (std::size_t k = 1; k <= n; ++k) {
            const std::size_t i = order[k];
            for (std::size_t j = 0; j < n; ++j)
              simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
            cost[i] = eval(simplex[i]);
          }
        }
      }
    }
  } catch (const BudgetExhausted&) {
  }
  return eval.take(converged);
}

namespace {

// Golden-section minimisation of t -> eval(x + t*dir) over the largest
// t-interval keeping x + t*dir inside the bounds box. Returns the best
// evaluated point; t = 0 (the incumbent) wins ties.
template <typename Eval>
std::pair<std::vector<double>, double> line_minimize(Eval& eval, const std::vector<double>& x,
                                                     double fx, const std::vector<double>& dir,
                                                     const OptimizerConfig& cfg) {
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (dir[j] == 0.0) continue;
    const double a = (cfg.lower - x[j]) / dir[j];
    const double b = (cfg.upper - x[j]) / dir[j];
    t_lo = std::max(t_lo, std::min(a, b));
    t_hi = std::min(t_hi, std::max(a, b));
  }
  if (!std::isfinite(t_lo) || !std::isfinite(t_hi) || !(t_hi > t_lo)) return {x, fx};

  auto point_at = [&](double t) {
    std::vector<double> p(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
      p[j] = std::clamp(x[j] + t * dir[j], cfg.lower, cfg.upper);
    return p;
  };

  double best_f = fx;
  std::vector<double> best_x = x;
  auto probe = [&](double t, std::vector<double>* out) {
    auto p = point_at(t);
    const double v = eval(p);
    if (v < best_f) {
      best_f = v;
      best_x = p;
    }
    if (out) *out = std::move(p);
    return v;
  };

  constexpr double kInvPhi = 0.6180339887498949;
  double a = t_lo, b = t_hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = probe(c, nullptr);
  double fd = probe(d, nullptr);
  const double xtol = 1e-8 * (t_hi - t_lo) + 1e-12;
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = probe(c, nullptr);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = probe(d, nullptr);
    }
  }
  return {std::move(best_x), best_f};
}

}  // namespace

OptimizerResult powell(const CostFn& f, std::vector<double> x0, const OptimizerConfig& cfg) {
  const std::size_t n = x0.size();
  if (n < 1) throw std::invalid_argument("powell: dimension must be >= 1");
  Evaluator eval(f, cfg.max_evaluations);
  bool converged = false;
  try {
    std::vector<std::vector<double>> dirs(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) dirs[i][i] = 1.0;

    std::vector<double> x = x0;
    double fx = eval(x);
    while (true) {
      const std::vector<double> x_start = x;
      const double f_start = fx;
      double biggest_drop = 0.0;
      std::size_t biggest = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const double f_prev = fx;
        std::tie(x, fx) = line_minimize(eval, x, fx, dirs[i], cfg);
        if (f_prev - fx > biggest_drop) {
          biggest_drop = f_prev - fx;
          biggest = i;
        }
      }
      if (2.0 * (f_start - fx) <= cfg.tolerance * (std::abs(f_start) + std::abs(fx)) + 1e-25) {
        converged = true;
        break;
      }
      // Powell's criterion for replacing the direction of largest decrease
      // with the overall sweep displacement.
      std::vector<double> extrapolated(n);
      std::vector<double> displacement(n);
      for (std::size_t j = 0; j < n; ++j) {
        extrapolated[j] = std::clamp(2.0 * x[j] - x_start[j], cfg.lower, cfg.upper);
        displacement[j] = x[j] - x_start[j];
      }
      const double f_extra = eval(extrapolated);
      if (f_extra < f_start) {
        const double term = f_start - fx - biggest_drop;
        const double t = 2.0 * (f_start - 2.0 * fx + f_extra) * term * term -
                         biggest_drop * (f_start - f_extra) * (f_start - f_extra);
        if (t < 0.0) {
          std::tie(x, fx) = line_minimize(eval, x, fx, displacement, cfg);
          dirs[biggest] = dirs[n - 1];
          dirs[n - 1] = displacement;
        }
      }
    }
  } catch (const BudgetExhausted&) {
  }
  return eval.take(converged);
}

OptimizerResult differential_evolution(const CostFn& f, int dim, const OptimizerConfig& cfg) {
  if (dim < 1) throw std::invalid_argument("differential_evolution: dimension must be >= 1");
  const std::size_t n = static_cast<std::size_t>(dim);
  const std::size_t pop = cfg.population > 0 ? static_cast<std::size_t>(cfg.population)
                                             : 15 * n;
  if (pop < 4) throw std::invalid_argument("differential_evolution: population must be >= 4");
  Evaluator eval(f, cfg.max_evaluations + pop);
  SplitMix64 rng(cfg.seed);
  bool converged = false;
  try {
    std::vector<std::vector<double>> members(pop, std::vector<double>(n));
    std::vector<double> cost(pop);
    for (std::size_t i = 0; i < pop; ++i) {
      for (std::size_t j = 0; j < n; ++j) members[i][j] = rng.uniform(cfg.lower, cfg.upper);
      cost[i] = eval(members[i]);
    }

    std::uint64_t used = pop;
    std::vector<double> trial(n);
    while (true) {
      const auto [lo, hi] = std::minmax_element(cost.begin(), cost.end());
      if (*hi - *lo < cfg.tolerance) {
        converged = true;
        break;
      }
      if (used >= cfg.max_evaluations) break;
      for (std::size_t i = 0; i < pop; ++i) {
        std::size_t a, b, c;
        do a = rng.next_below(pop); while (a == i);
        do b = rng.next_below(pop); while (b == i || b == a);
        do c = rng.next_below(pop); while (c == i || c == a || c == b);
        const std::size_t j_forced = rng.next_below(n);
        for (std::size_t j = 0; j < n; ++j) {
          if (j == j_forced || rng.next_double() < cfg.de_crossover) {
            const double v = members[a][j] + cfg.de_weight * (members[b][j] - members[c][j]);
            trial[j] = std::clamp(v, cfg.lower, cfg.upper);
          } else {
            trial[j] = members[i][j];
          }
        }
        const double ft = eval(trial);
        if (ft <= cost[i]) {
          members[i] = trial;
          cost[i] = ft;
        }
      }
      used += pop;
    }
  } catch (const BudgetExhausted&) {
  }
  return eval.take(converged);
}

std::string optimizer_name(OptimizerKind k) {
  switch (k) {
    case OptimizerKind::NelderMead: return "nelder-mead";
    case OptimizerKind::Powell: return "powell";
    case OptimizerKind::DifferentialEvolution: return "de";
  }
  throw std::invalid_argument("optimizer_name: unknown kind");
}

OptimizerKind parse_optimizer(const std::string& name) {
  if (name == "nelder-mead") return OptimizerKind::NelderMead;
  if (name == "powell") return OptimizerKind::Powell;
  if (name == "de") return OptimizerKind::DifferentialEvolution;
  throw std::invalid_argument("unknown optimizer: " + name);
}

OptimizerResult run_optimizer(OptimizerKind kind, const CostFn& f, std::vector<double> x0,
                              int dim, const OptimizerConfig& cfg) {
  switch (kind) {
    case OptimizerKind::NelderMead: return nelder_mead(f, std::move(x0), cfg);
    case OptimizerKind::Powell: return powell(f, std::move(x0), cfg);
    case OptimizerKind::DifferentialEvolution: return differential_evolution(f, dim, cfg);
  }
  throw std::invalid_argument("run_optimizer: unknown kind");
}

}  // namespace vqseg
