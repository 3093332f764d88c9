#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace qtam {

/// Single source of randomness for one annealing chain. Every stochastic
/// choice flows through this class so that a fixed seed reproduces a run
/// bit-for-bit; nothing may seed from entropy or use distribution objects
/// whose draw sequence is implementation-defined.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
  int uniform_int(int n);

  /// Zero-mean Gaussian via Box-Muller (no spare caching: two raws per call).
  double gaussian(double sigma);

  /// Index drawn proportionally to non-negative weights.
  std::size_t pick_weighted(std::span<const double> weights);

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qtam
