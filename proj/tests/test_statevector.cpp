#include <stdexcept>
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "vqseg/common.hpp"
#include "vqseg/rng.hpp"
#include "vqseg/statevector.hpp"

using namespace vqseg;

namespace {

// Scrambles the state with a deterministic gate sequence.
Statevector random_state(int q, std::uint64_t seed, int gates = 32) {
  Statevector s(q);
  SplitMix64 rng(seed);
  for (int t = 0; t < q; ++t) s.apply_h(t);
  for (int i = 0; i < gates; ++i) {
    const int target = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(q)));
    switch (rng.next_below(3)) {
      case 0: s.apply_h(target); break;
      case 1: s.apply_ry(target, rng.uniform(0, kTwoPi)); break;
      default:
        if (q > 1) {
          int control = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(q)));
          if (control == target) control = (control + 1) % q;
          s.apply_cnot(control, target);
        }
    }
  }
  return s;
}

std::vector<double> identity_matrix(std::size_t dim) {
  std::vector<double> m(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  return m;
}

double amp_distance(const Statevector& a, const Statevector& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k)
    worst = std::max(worst, std::abs(a.amplitudes()[k] - b.amplitudes()[k]));
  return worst;
}

}  // namespace

TEST_CASE("fresh state is |0...0>") {
  const Statevector s2(2);
  CHECK(s2.amplitudes()[0] == std::complex<double>{1.0, 0.0});
  for (std::size_t k = 1; k < 4; ++k) CHECK(s2.amplitudes()[k] == std::complex<double>{0.0, 0.0});

  const Statevector s1(1);
  CHECK(s1.dim() == 2);
  CHECK(s1.amplitudes()[0].real() == 1.0);

  CHECK_THROWS_AS(Statevector(25), std::invalid_argument);
  CHECK_THROWS_AS(Statevector(0), std::invalid_argument);
}

TEST_CASE("hadamard") {
  Statevector s(1);
  s.apply_h(0);
  CHECK(s.amplitudes()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(s.amplitudes()[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  s.apply_h(0);  // involution
  CHECK(std::abs(s.amplitudes()[0] - std::complex<double>{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(s.amplitudes()[1]) < 1e-12);

  Statevector u(2);
  u.apply_h(0);
  u.apply_h(1);
  for (std::size_t k = 0; k < 4; ++k) CHECK(u.amplitudes()[k].real() == doctest::Approx(0.5));

  CHECK_THROWS_AS(u.apply_h(2), std::out_of_range);
}

TEST_CASE("ry rotation") {
  Statevector s(1);
  s.apply_ry(0, 0.0);
  CHECK(s.amplitudes()[0].real() == 1.0);

  s.apply_ry(0, kPi);
  CHECK(std::abs(s.amplitudes()[1] - std::complex<double>{1.0, 0.0}) < 1e-12);

  Statevector t(1);
  t.apply_ry(0, kPi / 2.0);
  CHECK(t.amplitudes()[0].real() == doctest::Approx(std::cos(kPi / 4.0)));
  CHECK(t.amplitudes()[1].real() == doctest::Approx(std::sin(kPi / 4.0)));
}

TEST_CASE("cnot") {
  // |10> (qubit 0, the index MSB, set) flips the target.
  Statevector s(2);
  s.apply_ry(0, kPi);  // |00> -> |10>
  s.apply_cnot(0, 1);
  CHECK(std::abs(s.amplitudes()[3] - std::complex<double>{1.0, 0.0}) < 1e-12);

  Statevector zero(2);
  zero.apply_cnot(0, 1);
  CHECK(zero.amplitudes()[0].real() == 1.0);

  Statevector r = random_state(3, 11);
  Statevector twice = r;
  twice.apply_cnot(1, 2);
  twice.apply_cnot(1, 2);
  CHECK(amp_distance(r, twice) < 1e-12);

  CHECK_THROWS_AS(zero.apply_cnot(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(zero.apply_cnot(0, 2), std::out_of_range);
}

TEST_CASE("diagonal phase gate") {
  Statevector s = random_state(2, 17);
  const Statevector before = s;
  s.apply_diagonal(std::vector<double>{0.0, 0.0, 0.0, 0.0});
  CHECK(amp_distance(s, before) == 0.0);

  s.apply_diagonal(std::vector<double>{kPi, kPi, kPi, kPi});
  for (std::size_t k = 0; k < 4; ++k)
    CHECK(std::abs(s.amplitudes()[k]) ==
          doctest::Approx(std::abs(before.amplitudes()[k])));
  CHECK(s.norm_sq() == doctest::Approx(1.0));

  CHECK_THROWS_AS(s.apply_diagonal(std::vector<double>{1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("gate unitarity spot checks on random states") {
  for (std::uint64_t seed : {3ull, 4ull, 5ull}) {
    Statevector r = random_state(3, seed);
    Statevector s = r;
    s.apply_h(1);
    s.apply_h(1);
    CHECK(amp_distance(r, s) < 1e-12);

    const double theta = 0.25 + static_cast<double>(seed);
    s.apply_ry(2, theta);
    s.apply_ry(2, -theta);
    CHECK(amp_distance(r, s) < 1e-12);
  }
}

TEST_CASE("norm is preserved by long random gate sequences") {
  const Statevector s = random_state(4, 23, 500);
  CHECK(std::abs(s.norm_sq() - 1.0) < 1e-10);
}

TEST_CASE("expectation") {
  SUBCASE("ground state picks out m[0][0]") {
    const Statevector s(2);
    std::vector<double> m(16, 0.0);
    m[0] = 2.5;
    m[5] = -1.0;
    CHECK(expectation(s, m, 4) == 2.5);
  }
  SUBCASE("identity observable is the norm") {
    const Statevector s = random_state(3, 31);
    CHECK(expectation(s, identity_matrix(8), 8) == doctest::Approx(1.0));
  }
  SUBCASE("uniform single-qubit state annihilates the single-edge Laplacian") {
    Statevector s(1);
    s.apply_h(0);
    const double w = 0.9;
    const std::vector<double> m{w, -w, -w, w};
    CHECK(std::abs(expectation(s, m, 2)) < 1e-12);
  }
  SUBCASE("linearity") {
    const Statevector s = random_state(2, 47);
    SplitMix64 rng(8);
    std::vector<double> a(16), b(16);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) {
        a[i * 4 + j] = a[j * 4 + i] = rng.uniform(-1, 1);
        b[i * 4 + j] = b[j * 4 + i] = rng.uniform(-1, 1);
      }
    const double alpha = 0.7, beta = -1.3;
    std::vector<double> combo(16);
    for (std::size_t k = 0; k < 16; ++k) combo[k] = alpha * a[k] + beta * b[k];
    CHECK(std::abs(expectation(s, combo, 4) -
                   (alpha * expectation(s, a, 4) + beta * expectation(s, b, 4))) < 1e-10);
  }
  SUBCASE("dimension mismatch") {
    const Statevector s(2);
    CHECK_THROWS_AS(expectation(s, identity_matrix(2), 2), std::invalid_argument);
  }
}

TEST_CASE("sampling") {
  SUBCASE("deterministic state lands every shot on one index") {
    Statevector s(2);
    s.apply_ry(0, kPi);  // |10>
    const ShotHistogram h = sample(s, 1000, 42);
    REQUIRE(h.counts.size() == 1);
    CHECK(h.counts.at(2) == 1000);
  }
  SUBCASE("counts sum to shots") {
    const Statevector s = random_state(3, 7);
    const ShotHistogram h = sample(s, 4096, 9);
    std::uint64_t total = 0;
    for (const auto& [k, c] : h.counts) {
      CHECK(k < 8);
      total += c;
    }
    CHECK(total == 4096);
  }
  SUBCASE("same seed, same histogram") {
    const Statevector s = random_state(3, 7);
    const ShotHistogram a = sample(s, 2048, 1234);
    const ShotHistogram b = sample(s, 2048, 1234);
    CHECK(a.counts == b.counts);
    const ShotHistogram c = sample(s, 2048, 1235);
    CHECK(a.counts != c.counts);
  }
  SUBCASE("uniform 3-qubit state stays within 5 binomial sigma") {
    Statevector s(3);
    for (int t = 0; t < 3; ++t) s.apply_h(t);
    const ShotHistogram h = sample(s, 65536, 777);
    const double expected = 65536.0 / 8.0;
    const double sigma = std::sqrt(65536.0 * (1.0 / 8.0) * (7.0 / 8.0));
    for (std::uint64_t k = 0; k < 8; ++k) {
      const double count = static_cast<double>(h.counts.count(k) ? h.counts.at(k) : 0);
      CHECK(std::abs(count - expected) < 5.0 * sigma);
    }
  }
}
