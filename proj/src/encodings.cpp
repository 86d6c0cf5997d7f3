#include "vqseg/encodings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "vqseg/rng.hpp"

namespace vqseg {

namespace {
// Child-seed streams for the pieces of a solve() run; evaluation k samples
// with mix_seed(seed, k), far below these tags.
constexpr std::uint64_t kInitStream = 0x766A2D696E6974ULL;
constexpr std::uint64_t kOptimizerStream = 0x766A2D6F7074ULL;
}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::PGE: return "pge";
    case Method::ABE: return "abe";
    case Method::ACE: return "ace";
  }
  throw std::invalid_argument("method_name: unknown method");
}

Method parse_method(const std::string& name) {
  if (name == "pge") return Method::PGE;
  if (name == "abe") return Method::ABE;
  if (name == "ace") return Method::ACE;
  throw std::invalid_argument("unknown method: " + name);
}

int pge_bit(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t >= kPi ? 1 : 0;
}

BitVector pge_decode(std::span<const double> thetas, int n) {
  if (n < 1 || static_cast<std::size_t>(n) > thetas.size())
    throw std::invalid_argument("pge_decode: need at least n angles");
  BitVector x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(pge_bit(thetas[i]));
  return x;
}

Statevector pge_state(std::span<const double> thetas, int n_prime) {
  if (n_prime < 1) throw std::invalid_argument("pge_state: need at least one qubit");
  if (thetas.size() != (std::size_t{1} << n_prime))
    throw std::invalid_argument("pge_state: angle count must equal 2^n_prime");
  Statevector s(n_prime);
  for (int t = 0; t < n_prime; ++t) s.apply_h(t);
  std::vector<double> phases(thetas.size());
  for (std::size_t k = 0; k < thetas.size(); ++k) phases[k] = kPi * pge_bit(thetas[k]);
  s.apply_diagonal(phases);
  return s;
}

double pge_cost(std::span<const double> thetas, const LaplacianMatrix& L) {
  if (L.dim < 2) throw std::invalid_argument("pge_cost: Laplacian must have dimension >= 2");
  if (thetas.size() != static_cast<std::size_t>(L.dim))
    throw std::invalid_argument("pge_cost: angle count must equal the Laplacian dimension");
  const int n_prime = ceil_log2(static_cast<std::uint64_t>(L.dim));
  const Statevector s = pge_state(thetas, n_prime);
  return 0.5 * static_cast<double>(L.dim) *
         expectation(s, L.a, static_cast<std::size_t>(L.dim));
}

Statevector abe_circuit(std::span<const double> params, int n, int layers) {
  if (n < 1) throw std::invalid_argument("abe_circuit: n must be >= 1");
  if (layers < 1) throw std::invalid_argument("abe_circuit: layers must be >= 1");
  const int r = ceil_log2(static_cast<std::uint64_t>(n));
  const int q = r + 1;
  if (params.size() != static_cast<std::size_t>(layers) * static_cast<std::size_t>(q))
    throw std::invalid_argument("abe_circuit: expected layers*(ceil(log2 n)+1) parameters");
  Statevector s(q);
  for (int t = 0; t < q; ++t) s.apply_h(t);
  std::size_t next = 0;
  for (int layer = 0; layer < layers; ++layer) {
    for (int t = 0; t < q; ++t) s.apply_ry(t, params[next++]);
    for (int t = 0; t + 1 < q; ++t) s.apply_cnot(t, t + 1);
  }
  return s;
}

ProjectorEstimates estimate_projectors(const ShotHistogram& h, int n) {
  if (n < 1) throw std::invalid_argument("estimate_projectors: n must be >= 1");
  const int r = ceil_log2(static_cast<std::uint64_t>(n));
  if (h.num_qubits != r + 1)
    throw std::invalid_argument("estimate_projectors: histogram qubit count must be ceil(log2 n)+1");
  ProjectorEstimates est;
  est.p.assign(static_cast<std::size_t>(n), 0.0);
  est.p1.assign(static_cast<std::size_t>(n), 0.0);
  est.shots = h.shots;
  for (const auto& [k, count] : h.counts) {
    const std::uint64_t reg = k >> 1;
    if (reg >= static_cast<std::uint64_t>(n)) continue;  // padding register states
    const double frac = static_cast<double>(count) / static_cast<double>(h.shots);
    est.p[reg] += frac;
    if (k & 1) est.p1[reg] += frac;
  }
  return est;
}

ProjectorEstimates exact_projectors(const Statevector& s, int n) {
  if (n < 1) throw std::invalid_argument("exact_projectors: n must be >= 1");
  const int r = ceil_log2(static_cast<std::uint64_t>(n));
  if (s.num_qubits() != r + 1)
    throw std::invalid_argument("exact_projectors: state qubit count must be ceil(log2 n)+1");
  ProjectorEstimates est;
  est.p.assign(static_cast<std::size_t>(n), 0.0);
  est.p1.assign(static_cast<std::size_t>(n), 0.0);
  est.shots = 0;
  for (std::uint64_t k = 0; k < s.dim(); ++k) {
    const std::uint64_t reg = k >> 1;
    if (reg >= static_cast<std::uint64_t>(n)) continue;
    const double pr = s.probability(k);
    est.p[reg] += pr;
    if (k & 1) est.p1[reg] += pr;
  }
  return est;
}

BitVector abe_decode(const ProjectorEstimates& est) {
  BitVector x(est.p.size());
  for (std::size_t i = 0; i < est.p.size(); ++i) {
    const double p0 = est.p[i] - est.p1[i];
    x[i] = p0 > est.p1[i] ? 0 : 1;
  }
  return x;
}

double abe_cost(const ProjectorEstimates& est, const QuboMatrix& q) {
  if (est.p.size() != static_cast<std::size_t>(q.dim()))
    throw std::invalid_argument("abe_cost: estimate size must equal the QUBO dimension");
  const double eps = est.shots > 0 ? 1.0 / static_cast<double>(est.shots)
                                   : std::numeric_limits<double>::min();
  auto ratio = [&](int i) {
    return est.p1[static_cast<std::size_t>(i)] /
           std::max(est.p[static_cast<std::size_t>(i)], eps);
  };
  double total = 0.0;
  for (const auto& [ij, v] : q.terms()) {
    if (ij.first == ij.second)
      total += v * ratio(ij.first);
    else
      total += v * ratio(ij.first) * ratio(ij.second);
  }
  return total;
}

double ace_cost(const ShotHistogram& h, const GridGraph& g) {
  return cut_cost(g, abe_decode(estimate_projectors(h, g.n())));
}

SolveOutcome solve(const GridGraph& g, const SolveOptions& opts) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("solve: empty graph");
  if (n == 1) {
    // Single node: nothing to cut.
    SolveOutcome out;
    out.assignment = {0};
    out.cost = 0.0;
    out.optimizer.converged = true;
    return out;
  }

  OptimizerConfig cfg = opts.config;
  cfg.seed = mix_seed(opts.seed, kOptimizerStream);

  struct BestDecode {
    bool has = false;
    double cost = 0.0;
    BitVector x;
  } best;

  int dim = 0;
  CostFn f;
  LaplacianMatrix L;
  QuboMatrix qubo(1);

  switch (opts.method) {
    case Method::PGE: {
      L = laplacian(g);
      dim = L.dim;
      f = [&g, &L, &opts, n, k = std::uint64_t{0}](std::span<const double> th) mutable {
        const double c = pge_cost(th, L);
        if (opts.cut_observer) opts.cut_observer(k, cut_cost(g, pge_decode(th, n)));
        ++k;
        return c;
      };
      break;
    }
    case Method::ABE: {
      qubo = to_qubo(g);
      const int r = ceil_log2(static_cast<std::uint64_t>(n));
      dim = opts.layers * (r + 1);
      f = [&g, &qubo, &opts, &best, n, k = std::uint64_t{0}](std::span<const double> th) mutable {
        const Statevector s = abe_circuit(th, n, opts.layers);
        const ShotHistogram h = sample(s, opts.shots, mix_seed(opts.seed, k));
        const ProjectorEstimates est = estimate_projectors(h, n);
        const double c = abe_cost(est, qubo);
        BitVector x = abe_decode(est);
        if (opts.cut_observer) opts.cut_observer(k, cut_cost(g, x));
        if (!best.has || c < best.cost) {
          best.has = true;
          best.cost = c;
          best.x = std::move(x);
        }
        ++k;
        return c;
      };
      break;
    }
    case Method::ACE: {
      f = [&g, &opts, &best, n, k = std::uint64_t{0}](std::span<const double> th) mutable {
        const Statevector s = abe_circuit(th, n, opts.layers);
        const ShotHistogram h = sample(s, opts.shots, mix_seed(opts.seed, k));
        BitVector x = abe_decode(estimate_projectors(h, n));
        const double c = cut_cost(g, x);
        if (opts.cut_observer) opts.cut_observer(k, c);
        if (!best.has || c < best.cost) {
          best.has = true;
          best.cost = c;
          best.x = std::move(x);
        }
        ++k;
        return c;
      };
      const int r = ceil_log2(static_cast<std::uint64_t>(n));
      dim = opts.layers * (r + 1);
      break;
    }
  }

  std::vector<double> x0(static_cast<std::size_t>(dim));
  SplitMix64 init_rng(mix_seed(opts.seed, kInitStream));
  for (auto& v : x0) v = init_rng.uniform(cfg.lower, cfg.upper);

  SolveOutcome out;
  out.optimizer = run_optimizer(opts.optimizer, f, std::move(x0), dim, cfg);

  if (opts.method == Method::PGE) {
    out.assignment = pge_decode(out.optimizer.best_params, n);
  } else if (best.has) {
    out.assignment = best.x;
  } else {
    out.assignment =
        abe_decode(exact_projectors(abe_circuit(out.optimizer.best_params, n, opts.layers), n));
  }
  out.cost = cut_cost(g, out.assignment);
  return out;
}

}  // namespace vqseg
