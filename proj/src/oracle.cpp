#include "vqseg/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace vqseg {

namespace {

template <typename Cost>
ExactSolution enumerate_assignments(int n, Cost&& cost_of) {
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t best_mask = 0;
  double best = cost_of(std::uint64_t{0});
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const double c = cost_of(mask);
    if (c < best) {
      best = c;
      best_mask = mask;
    }
  }
  ExactSolution sol;
  sol.argmin = index_to_bits(best_mask, n);
  sol.value = best;
  sol.evaluated = total;
  return sol;
}

}  // namespace

ExactSolution brute_force_min_cut(const GridGraph& g) {
  const int n = g.n();
  if (n < 1 || n > 24)
    throw std::invalid_argument("brute_force_min_cut: node count must be in [1, 24]");
  return enumerate_assignments(n, [&](std::uint64_t mask) {
    double c = 0.0;
    for (const Edge& e : g.edges)
      if (((mask >> e.u) ^ (mask >> e.v)) & 1) c += e.w;
    return c;
  });
}

ExactSolution brute_force_qubo(const QuboMatrix& q) {
  const int n = q.dim();
  if (n > 24) throw std::invalid_argument("brute_force_qubo: dimension must be <= 24");
  // Flatten the term map once; the enumeration loop then touches only a
  // contiguous array.
  struct Term {
    int i, j;
    double v;
  };
  std::vector<Term> terms;
  terms.reserve(q.terms().size());
  for (const auto& [ij, v] : q.terms()) terms.push_back({ij.first, ij.second, v});
  return enumerate_assignments(n, [&](std::uint64_t mask) {
    double c = 0.0;
    for (const Term& t : terms)
      if (((mask >> t.i) & 1) && ((mask >> t.j) & 1)) c += t.v;
    return c;
  });
}

}  // namespace vqseg
