#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace vqseg {

/// Histogram of measurement outcomes: basis index -> count.
struct ShotHistogram {
  int num_qubits = 0;
  std::uint64_t shots = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
};

/// Dense statevector over 2^q basis states.
///
/// Bit convention (used by every caller): qubit 0 is the MOST significant
/// bit of the basis index, so for q qubits, qubit t owns index bit q-1-t.
/// A register of r qubits followed by one ancilla therefore reads as
/// index = (register_value << 1) | ancilla_bit.
class Statevector {
 public:
  /// |0...0> on q qubits; 1 <= q <= 24 (memory guard).
  explicit Statevector(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

  void apply_h(int target);
  void apply_ry(int target, double theta);
  void apply_cnot(int control, int target);

  /// amp[k] *= exp(i * phases[k]); phases.size() must equal dim().
  void apply_diagonal(std::span<const double> phases);

  double norm_sq() const;

  /// Probability of measuring basis index k.
  double probability(std::uint64_t k) const { return std::norm(amps_[k]); }

 private:
  std::uint64_t mask_for(int target) const;

  int num_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// <psi|M|psi> for a real symmetric matrix M (row-major, dim x dim with
/// dim == 2^q <= 4096). The imaginary residue is discarded.
double expectation(const Statevector& s, std::span<const double> matrix, std::size_t dim);

/// shots i.i.d. draws from the |amplitude|^2 distribution via inverse-CDF
/// over the cumulative probability array; deterministic given the seed.
ShotHistogram sample(const Statevector& s, std::uint64_t shots, std::uint64_t seed);

}  // namespace vqseg
