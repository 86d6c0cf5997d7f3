#include "vqseg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>
#include <tuple>

#include "vqseg/rng.hpp"

namespace vqseg {

namespace {

// Emits the 4-neighbourhood edge skeleton in (u, v)-sorted order: for each
// node its right neighbour first, then its down neighbour.
template <typename F>
void for_each_grid_edge(int width, int height, F&& f) {
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const int i = r * width + c;
      if (c + 1 < width) f(i, i + 1);
      if (r + 1 < height) f(i, i + width);
    }
  }
}

}  // namespace

GridGraph random_grid(int side, std::uint64_t seed) {
  if (side < 1) throw std::invalid_argument("random_grid: side must be >= 1");
  GridGraph g;
  g.width = side;
  g.height = side;
  SplitMix64 rng(seed);
  for_each_grid_edge(side, side, [&](int u, int v) {
    // 32-bit mantissa scaling: weights live on the 2^-31 grid, keeping all
    // cut/QUBO sums for n <= 24 exact in double precision.
    const double u01 = static_cast<double>(rng.next_u64() >> 32) * 0x1.0p-32;
    g.edges.push_back({u, v, 2.0 * u01 - 1.0});
  });
  return g;
}

GridGraph image_to_graph(const std::vector<double>& pixels, int width, int height,
                         double max_intensity) {
  if (width < 1 || height < 1 ||
      pixels.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("image_to_graph: pixel count does not match width*height");
  if (!(max_intensity > 0))
    throw std::invalid_argument("image_to_graph: max_intensity must be positive");
  GridGraph g;
  g.width = width;
  g.height = height;
  for_each_grid_edge(width, height, [&](int u, int v) {
    const double d = std::abs(pixels[static_cast<std::size_t>(u)] -
                              pixels[static_cast<std::size_t>(v)]);
    g.edges.push_back({u, v, 1.0 - 2.0 * d / max_intensity});
  });
  return g;
}

double cut_cost(const GridGraph& g, const BitVector& x) {
  if (x.size() != static_cast<std::size_t>(g.n()))
    throw std::invalid_argument("cut_cost: assignment length does not match node count");
  double total = 0.0;
  for (const Edge& e : g.edges)
    if (x[static_cast<std::size_t>(e.u)] != x[static_cast<std::size_t>(e.v)]) total += e.w;
  return total;
}

QuboMatrix::QuboMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("QuboMatrix: dim must be >= 1");
}

void QuboMatrix::add(int i, int j, double v) {
  if (i < 0 || j < i || j >= dim_)
    throw std::out_of_range("QuboMatrix::add: require 0 <= i <= j < dim");
  terms_[{i, j}] += v;
}

double QuboMatrix::at(int i, int j) const {
  if (i < 0 || j < i || j >= dim_)
    throw std::out_of_range("QuboMatrix::at: require 0 <= i <= j < dim");
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0.0 : it->second;
}

double qubo_value(const QuboMatrix& q, const BitVector& x) {
  if (x.size() != static_cast<std::size_t>(q.dim()))
    throw std::invalid_argument("qubo_value: assignment length does not match dim");
  double total = 0.0;
  for (const auto& [ij, v] : q.terms())
    if (x[static_cast<std::size_t>(ij.first)] && x[static_cast<std::size_t>(ij.second)])
      total += v;
  return total;
}

QuboMatrix to_qubo(const GridGraph& g) {
  QuboMatrix q(g.n() > 0 ? g.n() : 1);
  for (const Edge& e : g.edges) {
    q.add(e.u, e.u, e.w);
    q.add(e.v, e.v, e.w);
    q.add(e.u, e.v, -2.0 * e.w);
  }
  return q;
}

LaplacianMatrix laplacian(const GridGraph& g) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("laplacian: empty graph");
  const int dim = 1 << ceil_log2(static_cast<std::uint64_t>(n));
  if (dim > 4096)
    throw std::invalid_argument("laplacian: dense Laplacian limited to dimension 4096");
  LaplacianMatrix L;
  L.dim = dim;
  L.a.assign(static_cast<std::size_t>(dim) * dim, 0.0);
  auto at = [&L, dim](int i, int j) -> double& {
    return L.a[static_cast<std::size_t>(i) * dim + j];
  };
  for (const Edge& e : g.edges) {
    at(e.u, e.v) -= e.w;
    at(e.v, e.u) -= e.w;
    at(e.u, e.u) += e.w;
    at(e.v, e.v) += e.w;
  }
  return L;
}

void write_graph_file(const GridGraph& g, std::ostream& out) {
  out << g.width << " " << g.height << "\n";
  char buf[64];
  for (const Edge& e : g.edges) {
    std::snprintf(buf, sizeof buf, "%.17g", e.w);
    out << e.u << " " << e.v << " " << buf << "\n";
  }
}

GridGraph read_graph_file(std::istream& in) {
  GridGraph g;
  if (!(in >> g.width >> g.height) || g.width < 1 || g.height < 1)
    throw std::runtime_error("graph file: bad header, expected \"width height\"");
  const int n = g.n();
  std::set<std::pair<int, int>> seen;
  int u, v;
  double w;
  while (in >> u >> v >> w) {
    if (u < 0 || v >= n || u >= v)
      throw std::runtime_error("graph file: edge endpoints must satisfy 0 <= u < v < n");
    const bool right = (v == u + 1) && (u % g.width != g.width - 1);
    const bool down = (v == u + g.width);
    if (!right && !down)
      throw std::runtime_error("graph file: edge is not 4-neighbourhood adjacent");
    if (!seen.insert({u, v}).second)
      throw std::runtime_error("graph file: duplicate edge");
    g.edges.push_back({u, v, w});
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return g;
}

void save_graph(const GridGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_graph_file(g, out);
}

GridGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_graph_file(in);
}

}  // namespace vqseg
