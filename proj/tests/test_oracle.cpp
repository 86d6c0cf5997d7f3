#include <stdexcept>
#include <cstdint>

#include "doctest.h"
#include "vqseg/graph.hpp"
#include "vqseg/oracle.hpp"
#include "vqseg/rng.hpp"

using namespace vqseg;

TEST_CASE("single node") {
  GridGraph g;
  g.width = 1;
  g.height = 1;
  const ExactSolution sol = brute_force_min_cut(g);
  CHECK(sol.value == 0.0);
  CHECK(sol.evaluated == 2);
  CHECK(sol.argmin == BitVector{0});
}

TEST_CASE("single negative edge is worth cutting") {
  GridGraph g;
  g.width = 2;
  g.height = 1;
  g.edges = {{0, 1, -0.5}};
  const ExactSolution sol = brute_force_min_cut(g);
  CHECK(sol.value == -0.5);
  CHECK(sol.argmin == BitVector{1, 0});  // assignment 1 beats assignment 2 on the tie-break
}

TEST_CASE("oracle value lower-bounds random assignments") {
  const GridGraph g = random_grid(4, 909);
  const ExactSolution sol = brute_force_min_cut(g);
  CHECK(sol.evaluated == std::uint64_t{1} << 16);
  SplitMix64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    BitVector x(16);
    for (auto& b : x) b = static_cast<std::uint8_t>(rng.next_below(2));
    CHECK(sol.value <= cut_cost(g, x));
  }
}

TEST_CASE("oracle respects complement degeneracy and non-positivity") {
  for (std::uint64_t seed : {11ull, 222ull, 3333ull}) {
    const GridGraph g = random_grid(3, seed);
    const ExactSolution sol = brute_force_min_cut(g);
    CHECK(sol.value <= 0.0);  // the empty cut always costs 0
    CHECK(cut_cost(g, sol.argmin) == cut_cost(g, complement(sol.argmin)));
    CHECK(cut_cost(g, sol.argmin) == sol.value);
  }
}

TEST_CASE("qubo brute force ties and basics") {
  QuboMatrix zero(3);
  const ExactSolution z = brute_force_qubo(zero);
  CHECK(z.value == 0.0);
  CHECK(z.argmin == BitVector{0, 0, 0});

  QuboMatrix ident(4);
  for (int i = 0; i < 4; ++i) ident.add(i, i, 1.0);
  const ExactSolution id = brute_force_qubo(ident);
  CHECK(id.value == 0.0);
  CHECK(id.argmin == BitVector{0, 0, 0, 0});
}

TEST_CASE("cut and qubo oracles agree bit-exactly") {
  for (std::uint64_t seed : {1ull, 7ull, 42ull, 111ull, 555ull}) {
    for (int side : {2, 3, 4}) {
      const GridGraph g = random_grid(side, seed);
      const ExactSolution mc = brute_force_min_cut(g);
      const ExactSolution qb = brute_force_qubo(to_qubo(g));
      CHECK(mc.value == qb.value);
      CHECK(mc.argmin == qb.argmin);
    }
  }
}

TEST_CASE("size guard") {
  GridGraph g;
  g.width = 5;
  g.height = 5;
  CHECK_THROWS_AS(brute_force_min_cut(g), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_qubo(QuboMatrix(25)), std::invalid_argument);
}
