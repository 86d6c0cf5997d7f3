#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vqseg/common.hpp"

namespace vqseg {

struct Edge {
  int u;
  int v;
  double w;
};

/// Weighted undirected grid graph over image pixels. Nodes are row-major
/// (node(r, c) = r*width + c); edges connect 4-neighbourhood pairs, carry
/// u < v and are kept sorted by (u, v).
struct GridGraph {
  int width = 0;
  int height = 0;
  std::vector<Edge> edges;

  int n() const { return width * height; }
  int node(int r, int c) const { return r * width + c; }
};

/// side x side grid with edge weights i.i.d. uniform on [-1, 1] from a
/// SplitMix64 stream. Weights are quantised to the 2^-31 grid so that every
/// cut value, QUBO entry and QUBO objective for n <= 24 is exactly
/// representable in a double; cut/QUBO agreement is then bit-exact.
GridGraph random_grid(int side, std::uint64_t seed);

/// Pixel-similarity graph: w(i,j) = 1 - 2|I_i - I_j|/max_intensity, so equal
/// pixels get +1 and maximally different pixels get -1.
GridGraph image_to_graph(const std::vector<double>& pixels, int width, int height,
                         double max_intensity);

/// Total weight of edges whose endpoints fall in different partitions.
double cut_cost(const GridGraph& g, const BitVector& x);

/// Upper-triangular matrix Q with objective sum_{i<=j} Q[i][j] x_i x_j.
/// Stored sparsely; grid QUBOs have O(n) nonzeros.
class QuboMatrix {
 public:
  explicit QuboMatrix(int dim);

  int dim() const { return dim_; }

  /// Accumulates v into Q[i][j]; requires i <= j < dim.
  void add(int i, int j, double v);

  double at(int i, int j) const;

  const std::map<std::pair<int, int>, double>& terms() const { return terms_; }

 private:
  int dim_;
  std::map<std::pair<int, int>, double> terms_;
};

double qubo_value(const QuboMatrix& q, const BitVector& x);

/// Cut-equivalent QUBO: per edge (u,v,w), w goes to Q[u][u] and Q[v][v] and
/// -2w to Q[u][v], so x^T Q x equals the symmetric cut value for every x.
QuboMatrix to_qubo(const GridGraph& g);

/// Dense symmetric L = D - A, zero-padded to dimension 2^ceil(log2 n).
struct LaplacianMatrix {
  int dim = 0;
  std::vector<double> a;  // row-major dim x dim

  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
};

LaplacianMatrix laplacian(const GridGraph& g);

/// Graph text format: line 1 "width height", then one "u v w" line per edge.
void write_graph_file(const GridGraph& g, std::ostream& out);
GridGraph read_graph_file(std::istream& in);
void save_graph(const GridGraph& g, const std::string& path);
GridGraph load_graph(const std::string& path);

}  // namespace vqseg
