#pragma once

#include <cstdint>

#include "vqseg/common.hpp"
#include "vqseg/graph.hpp"

namespace vqseg {

struct ExactSolution {
  BitVector argmin;
  double value = 0.0;
  std::uint64_t evaluated = 0;  // always 2^n
};

/// Enumerates all 2^n assignments (n <= 24) and returns a global minimiser
/// of the cut cost. Ties break to the smallest assignment read as an
/// integer with bit 0 least significant.
ExactSolution brute_force_min_cut(const GridGraph& g);

/// Same enumeration for an arbitrary QUBO objective.
ExactSolution brute_force_qubo(const QuboMatrix& q);

}  // namespace vqseg
