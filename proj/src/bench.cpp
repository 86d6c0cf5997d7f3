#include "vqseg/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "vqseg/oracle.hpp"
#include "vqseg/pgm.hpp"

namespace vqseg {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int exact_sqrt(int n) {
  int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (s < 1 || s * s != n) return 0;
  return s;
}

nlohmann::json record_to_json(const BenchmarkRecord& r) {
  nlohmann::json j{
      {"seed", r.seed},       {"size", r.size},
      {"method", r.method},   {"optimizer", r.optimizer},
      {"layers", r.layers},   {"shots", r.shots},
      {"obtained", r.obtained}, {"exact", r.exact},
      {"evaluations", r.evaluations}, {"wall_time_s", r.wall_time_s},
  };
  if (r.rel_error)
    j["rel_error"] = *r.rel_error;
  else
    j["rel_error"] = nullptr;
  return j;
}

}  // namespace

std::optional<double> relative_error(double obtained, double exact) {
  if (exact == 0.0) return std::nullopt;
  return std::abs(obtained - exact) / std::abs(exact);
}

std::string resource_method_name(ResourceMethod m) {
  switch (m) {
    case ResourceMethod::QAOA: return "qaoa";
    case ResourceMethod::PGE: return "pge";
    case ResourceMethod::ABE: return "abe";
    case ResourceMethod::ACE: return "ace";
  }
  throw std::invalid_argument("resource_method_name: unknown method");
}

ResourceMethod parse_resource_method(const std::string& name) {
  if (name == "qaoa") return ResourceMethod::QAOA;
  if (name == "pge") return ResourceMethod::PGE;
  if (name == "abe") return ResourceMethod::ABE;
  if (name == "ace") return ResourceMethod::ACE;
  throw std::invalid_argument("unknown method: " + name);
}

ResourceEstimate resource_estimate(ResourceMethod method, std::int64_t n, int layers) {
  if (n < 2) throw std::invalid_argument("resource_estimate: n must be >= 2");
  if (layers < 1) throw std::invalid_argument("resource_estimate: layers must be >= 1");
  const int log_n = ceil_log2(static_cast<std::uint64_t>(n));
  const std::int64_t padded = std::int64_t{1} << log_n;
  const std::int64_t L = layers;
  ResourceEstimate est;
  est.method = resource_method_name(method);
  switch (method) {
    case ResourceMethod::QAOA:
      est.qubits = padded;
      est.entanglement_gates = padded * padded;
      est.parametric_gates = L * padded;
      est.depth = L * padded * padded;
      est.approximate = true;
      break;
    case ResourceMethod::PGE:
      est.qubits = log_n;
      est.entanglement_gates = padded - 1;
      est.parametric_gates = padded;
      est.depth = padded;
      break;
    case ResourceMethod::ABE:
    case ResourceMethod::ACE:
      est.qubits = log_n + 1;
      est.entanglement_gates = L * log_n;
      est.parametric_gates = L * (log_n + 1);
      est.depth = L * (log_n + 1);
      break;
  }
  return est;
}

std::vector<BenchmarkRecord> run_sweep(const SweepConfig& cfg) {
  std::vector<BenchmarkRecord> records;
  for (int size : cfg.sizes) {
    const int side = exact_sqrt(size);
    if (side == 0)
      throw std::invalid_argument("run_sweep: sizes must be perfect squares (got " +
                                  std::to_string(size) + ")");
    if (size > 24)
      throw std::invalid_argument("run_sweep: size exceeds the oracle's 24-variable limit");
    for (Method method : cfg.methods) {
      for (OptimizerKind opt : cfg.optimizers) {
        for (int layers : cfg.layers) {
          for (std::uint64_t seed : cfg.seeds) {
            const GridGraph g = random_grid(side, seed);
            SolveOptions opts;
            opts.method = method;
            opts.layers = layers;
            opts.shots = cfg.shots;
            opts.optimizer = opt;
            opts.seed = seed;
            opts.config = cfg.opt;
            const auto t0 = std::chrono::steady_clock::now();
            const SolveOutcome outcome = solve(g, opts);
            const auto t1 = std::chrono::steady_clock::now();
            const ExactSolution exact = brute_force_min_cut(g);
            BenchmarkRecord rec;
            rec.seed = seed;
            rec.size = size;
            rec.method = method_name(method);
            rec.optimizer = optimizer_name(opt);
            rec.layers = layers;
            rec.shots = cfg.shots;
            rec.obtained = outcome.cost;
            rec.exact = exact.value;
            rec.rel_error = relative_error(outcome.cost, exact.value);
            rec.evaluations = outcome.optimizer.evaluations;
            rec.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
            records.push_back(std::move(rec));
          }
        }
      }
    }
  }
  return records;
}

void emit_csv(const std::vector<BenchmarkRecord>& records, std::ostream& out) {
  out << "seed,size,method,optimizer,layers,shots,obtained,exact,rel_error,evaluations,"
         "wall_time_s\n";
  for (const BenchmarkRecord& r : records) {
    out << r.seed << ',' << r.size << ',' << r.method << ',' << r.optimizer << ','
        << r.layers << ',' << r.shots << ',' << format_double(r.obtained) << ','
        << format_double(r.exact) << ','
        << (r.rel_error ? format_double(*r.rel_error) : "nan") << ',' << r.evaluations
        << ',' << format_double(r.wall_time_s) << '\n';
  }
}

void emit_json(const std::vector<BenchmarkRecord>& records, std::ostream& out) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BenchmarkRecord& r : records) arr.push_back(record_to_json(r));
  out << arr.dump(2) << '\n';
}

std::vector<BenchmarkRecord> parse_json_records(std::istream& in) {
  nlohmann::json arr = nlohmann::json::parse(in);
  std::vector<BenchmarkRecord> records;
  for (const auto& j : arr) {
    BenchmarkRecord r;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.size = j.at("size").get<int>();
    r.method = j.at("method").get<std::string>();
    r.optimizer = j.at("optimizer").get<std::string>();
    r.layers = j.at("layers").get<int>();
    r.shots = j.at("shots").get<std::uint64_t>();
    r.obtained = j.at("obtained").get<double>();
    r.exact = j.at("exact").get<double>();
    if (!j.at("rel_error").is_null()) r.rel_error = j.at("rel_error").get<double>();
    r.evaluations = j.at("evaluations").get<std::uint64_t>();
    r.wall_time_s = j.at("wall_time_s").get<double>();
    records.push_back(std::move(r));
  }
  return records;
}

SegmentResult segment_image(const std::string& pgm_path, const std::string& mask_path,
                            const SolveOptions& opts) {
  const Image img = read_pgm(pgm_path);
  const std::int64_t n =
      static_cast<std::int64_t>(img.width) * static_cast<std::int64_t>(img.height);
  if (n > (std::int64_t{1} << 20))
    throw std::invalid_argument("segment_image: image exceeds 2^20 pixels");
  std::vector<double> pixels(img.pixels.begin(), img.pixels.end());
  const GridGraph g =
      image_to_graph(pixels, img.width, img.height, static_cast<double>(img.maxval));

  const SolveOutcome outcome = solve(g, opts);

  SegmentResult res;
  res.mask = outcome.assignment;
  res.width = img.width;
  res.height = img.height;
  res.cost = outcome.cost;
  res.evaluations = outcome.optimizer.evaluations;
  if (n <= 24) res.exact = brute_force_min_cut(g).value;

  write_pbm_mask(mask_path, img.width, img.height, res.mask);

  nlohmann::json summary{
      {"method", method_name(opts.method)},
      {"cost", res.cost},
      {"evaluations", res.evaluations},
      {"seed", opts.seed},
      {"optimizer", optimizer_name(opts.optimizer)},
      {"layers", opts.layers},
      {"shots", opts.shots},
      {"width", img.width},
      {"height", img.height},
      {"mask", mask_path},
  };
  if (res.exact) {
    summary["exact"] = *res.exact;
    const auto rel = relative_error(res.cost, *res.exact);
    summary["rel_error"] = rel ? nlohmann::json(*rel) : nlohmann::json(nullptr);
  }
  res.summary_json = summary.dump(2);
  return res;
}

}  // namespace vqseg
