#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vqseg/common.hpp"
#include "vqseg/graph.hpp"
#include "vqseg/optimize.hpp"
#include "vqseg/statevector.hpp"

namespace vqseg {

/// The three qubit-efficient variational encodings.
///
/// PGE (parametric gate encoding): one angle per padded variable drives a
/// diagonal phase gate; the cost is an exact Laplacian expectation.
/// ABE (ancilla basis encoding): a hardware-efficient ansatz over
/// ceil(log2 n) register qubits plus one ancilla; the cost is a projector
/// ratio built from the QUBO matrix.
/// ACE (adaptive cost encoding): the ABE circuit, but each evaluation is
/// decoded to a bitvector and scored with the cut cost directly.
enum class Method { PGE, ABE, ACE };

std::string method_name(Method m);
Method parse_method(const std::string& name);

// --- PGE -----------------------------------------------------------------

/// Piecewise angle decode: 0 for theta mod 2pi in [0, pi), 1 in [pi, 2pi).
int pge_bit(double theta);

/// Decodes the first n angles (the unpadded variables).
BitVector pge_decode(std::span<const double> thetas, int n);

/// H on every qubit of |0...0>, then the diagonal phase gate with phases
/// pi * pge_bit(theta_k); thetas.size() must equal 2^n_prime.
Statevector pge_state(std::span<const double> thetas, int n_prime);

/// (2^n_prime / 2) * <psi|L|psi>; equals twice the cut cost of the decoded
/// assignment on the source graph.
double pge_cost(std::span<const double> thetas, const LaplacianMatrix& L);

// --- ABE / ACE -----------------------------------------------------------

/// Register/ancilla ansatz on ceil(log2 n) + 1 qubits: H on every qubit,
/// then per layer one RY per qubit followed by a CNOT chain over adjacent
/// qubits. Parameters are consumed layer-major, qubit-minor; there are
/// layers * (r + 1) of them. The rotation layer precedes the entangling
/// chain so a single layer already produces register-dependent ancilla
/// biases; a chain acting first on the uniform superposition would be the
/// identity.
Statevector abe_circuit(std::span<const double> params, int n, int layers);

/// Per-variable projector estimates: p[i] is the probability of register
/// state i (either ancilla branch), p1[i] the probability of register
/// state i with the ancilla in |1>. shots == 0 marks exact (infinite-shot)
/// probabilities.
struct ProjectorEstimates {
  std::vector<double> p;
  std::vector<double> p1;
  std::uint64_t shots = 0;
};

ProjectorEstimates estimate_projectors(const ShotHistogram& h, int n);

/// Exact-state probabilities in place of a sampled histogram.
ProjectorEstimates exact_projectors(const Statevector& s, int n);

/// x_i = 0 when the ancilla-0 branch dominates, 1 otherwise (ties and
/// unobserved register states decode to 1).
BitVector abe_decode(const ProjectorEstimates& est);

/// sum_{i<j} Q_ij (p1_i p1_j)/(p_i p_j) + sum_i Q_ii p1_i/p_i, iterating
/// the stored upper-triangular terms. Denominators are clamped below by
/// 1/shots so unobserved register states keep the cost finite.
double abe_cost(const ProjectorEstimates& est, const QuboMatrix& q);

/// Cut cost of the decoded assignment — the problem's own objective.
double ace_cost(const ShotHistogram& h, const GridGraph& g);

// --- Variational loop ----------------------------------------------------

struct SolveOptions {
  Method method = Method::ACE;
  int layers = 1;
  std::uint64_t shots = 65536;
  OptimizerKind optimizer = OptimizerKind::DifferentialEvolution;
  std::uint64_t seed = 0;
  OptimizerConfig config{};
  /// Optional per-evaluation hook: (evaluation index, decoded cut cost).
  std::function<void(std::uint64_t, double)> cut_observer;
};

struct SolveOutcome {
  BitVector assignment;
  double cost = 0.0;
  OptimizerResult optimizer;
};

/// Runs the chosen encoding's variational loop on g and returns the decoded
/// assignment at the best parameters, its symmetric cut cost, and the
/// optimizer trace. Fully reproducible from opts.seed: initial parameters,
/// the optimizer stream and every per-evaluation sampling seed derive from
/// it. PGE ignores layers and shots (its cost is an exact expectation).
SolveOutcome solve(const GridGraph& g, const SolveOptions& opts);

}  // namespace vqseg
