#include "vqseg/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vqseg/rng.hpp"

namespace vqseg {

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 24)
    throw std::invalid_argument("Statevector: qubit count must be in [1, 24]");
  amps_.assign(std::size_t{1} << num_qubits, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

std::uint64_t Statevector::mask_for(int target) const {
  if (target < 0 || target >= num_qubits_)
    throw std::out_of_range("Statevector: qubit index out of range");
  return std::uint64_t{1} << (num_qubits_ - 1 - target);
}

void Statevector::apply_h(int target) {
  const std::uint64_t mask = mask_for(target);
  const std::uint64_t d = dim();
  for (std::uint64_t i = 0; i < d; ++i) {
    if (i & mask) continue;
    const auto a0 = amps_[i];
    const auto a1 = amps_[i | mask];
    amps_[i] = (a0 + a1) * kInvSqrt2;
    amps_[i | mask] = (a0 - a1) * kInvSqrt2;
  }
}

void Statevector::apply_ry(int target, double theta) {
  const std::uint64_t mask = mask_for(target);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const std::uint64_t d = dim();
  for (std::uint64_t i = 0; i < d; ++i) {
    if (i & mask) continue;
    const auto a0 = amps_[i];
    const auto a1 = amps_[i | mask];
    amps_[i] = c * a0 - s * a1;
    amps_[i | mask] = s * a0 + c * a1;
  }
}

void Statevector::apply_cnot(int control, int target) {
  if (control == target)
    throw std::invalid_argument("apply_cnot: control and target must differ");
  const std::uint64_t cmask = mask_for(control);
  const std::uint64_t tmask = mask_for(target);
  const std::uint64_t d = dim();
  for (std::uint64_t i = 0; i < d; ++i)
    if ((i & cmask) && !(i & tmask)) std::swap(amps_[i], amps_[i | tmask]);
}

void Statevector::apply_diagonal(std::span<const double> phases) {
  if (phases.size() != dim())
    throw std::invalid_argument("apply_diagonal: phase count must equal 2^q");
  for (std::size_t k = 0; k < phases.size(); ++k)
    amps_[k] *= std::polar(1.0, phases[k]);
}

double Statevector::norm_sq() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

double expectation(const Statevector& s, std::span<const double> matrix, std::size_t dim) {
  if (dim != s.dim() || matrix.size() != dim * dim)
    throw std::invalid_argument("expectation: matrix dimension does not match state");
  if (dim > 4096)
    throw std::invalid_argument("expectation: dense observables limited to dimension 4096");
  const auto& amps = s.amplitudes();
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < dim; ++i) {
    std::complex<double> row{0.0, 0.0};
    const double* m = matrix.data() + i * dim;
    for (std::size_t j = 0; j < dim; ++j) row += m[j] * amps[j];
    acc += std::conj(amps[i]) * row;
  }
  return acc.real();
}

ShotHistogram sample(const Statevector& s, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  const std::uint64_t d = s.dim();
  std::vector<double> cdf(d);
  double acc = 0.0;
  for (std::uint64_t k = 0; k < d; ++k) {
    acc += s.probability(k);
    cdf[k] = acc;
  }
  ShotHistogram h;
  h.num_qubits = s.num_qubits();
  h.shots = shots;
  SplitMix64 rng(seed);
  for (std::uint64_t t = 0; t < shots; ++t) {
    const double u = rng.next_double() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::uint64_t k = it == cdf.end() ? d - 1
                                            : static_cast<std::uint64_t>(it - cdf.begin());
    ++h.counts[k];
  }
  return h;
}

}  // namespace vqseg
