#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace equiscore {

// splitmix64 finalizer; also used as the documented seed-mixing hash.
std::uint64_t mix64(std::uint64_t x);

// Derives a child seed from a base seed and one or two stream indices.
// mix_seed(s, a) != mix_seed(s, b) for a != b with overwhelming probability.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a);
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

/// Deterministic random source. The engine is std::mt19937_64 (bit-exact by
/// the standard); all real-valued draws are mapped from raw 64-bit words here
/// instead of going through std:: distributions, whose output is
/// implementation-defined. Identical seeds therefore give identical streams
/// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller on explicitly mapped uniforms.
  double normal() {
    double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;          // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  Eigen::VectorXd normal_vector(int n);
  Eigen::MatrixXd normal_matrix(int rows, int cols);

  // Index in [0, n).
  int uniform_index(int n) {
    return static_cast<int>(uniform() * static_cast<double>(n));
  }

  // Categorical draw from unnormalized non-negative weights (cumulative scan).
  int categorical(const Eigen::VectorXd& weights);

 private:
  std::mt19937_64 engine_;
};

// FNV-1a over a byte string; used for config hashes.
std::uint64_t fnv1a64(const void* data, std::size_t n);

}  // namespace equiscore
