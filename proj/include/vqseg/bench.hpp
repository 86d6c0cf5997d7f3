#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vqseg/encodings.hpp"
#include "vqseg/optimize.hpp"

namespace vqseg {

struct BenchmarkRecord {
  std::uint64_t seed = 0;
  int size = 0;  // pixel count n
  std::string method;
  std::string optimizer;
  int layers = 0;
  std::uint64_t shots = 0;
  double obtained = 0.0;
  double exact = 0.0;
  std::optional<double> rel_error;  // empty when exact == 0
  std::uint64_t evaluations = 0;
  double wall_time_s = 0.0;
};

/// |obtained - exact| / |exact|; empty (undefined) when exact == 0.
std::optional<double> relative_error(double obtained, double exact);

enum class ResourceMethod { QAOA, PGE, ABE, ACE };

std::string resource_method_name(ResourceMethod m);
ResourceMethod parse_resource_method(const std::string& name);

/// Closed-form circuit resource counts per method. n is rounded up to the
/// next power of two before the formulas apply. The QAOA row carries
/// leading-order values and is flagged approximate.
struct ResourceEstimate {
  std::string method;
  std::int64_t qubits = 0;
  std::int64_t entanglement_gates = 0;
  std::int64_t parametric_gates = 0;
  std::int64_t depth = 0;
  bool approximate = false;
};

ResourceEstimate resource_estimate(ResourceMethod method, std::int64_t n, int layers);

struct SweepConfig {
  std::vector<int> sizes{4, 16};  // pixel counts; must be perfect squares <= 24
  std::vector<Method> methods{Method::ACE};
  std::vector<OptimizerKind> optimizers{OptimizerKind::DifferentialEvolution};
  std::vector<int> layers{1};
  std::vector<std::uint64_t> seeds{111, 222, 333, 444, 555};
  std::uint64_t shots = 65536;
  OptimizerConfig opt{};
};

/// One record per (size, method, optimizer, layers, seed) cell: seeded grid,
/// variational solve, exhaustive oracle. Reproducible except wall_time_s.
std::vector<BenchmarkRecord> run_sweep(const SweepConfig& cfg);

/// CSV columns: seed,size,method,optimizer,layers,shots,obtained,exact,
/// rel_error,evaluations,wall_time_s. An undefined rel_error prints as nan.
void emit_csv(const std::vector<BenchmarkRecord>& records, std::ostream& out);

/// JSON array of objects with the same keys; undefined rel_error is null.
void emit_json(const std::vector<BenchmarkRecord>& records, std::ostream& out);

std::vector<BenchmarkRecord> parse_json_records(std::istream& in);

struct SegmentResult {
  BitVector mask;
  int width = 0;
  int height = 0;
  double cost = 0.0;
  std::uint64_t evaluations = 0;
  std::optional<double> exact;  // oracle value, when the image is small enough
  std::string summary_json;
};

/// Segments a PGM image: builds the pixel-similarity graph, runs the chosen
/// encoding, writes the P1 mask to mask_path and returns a JSON summary
/// (method, cost, evaluations, seed). Images up to 24 pixels are also
/// checked against the exhaustive oracle; larger ones (up to 2^20 pixels)
/// run solve-only.
SegmentResult segment_image(const std::string& pgm_path, const std::string& mask_path,
                            const SolveOptions& opts);

}  // namespace vqseg
