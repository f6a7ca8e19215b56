#pragma once

#include <cstdint>

namespace gsched {

/// Counter-based keyed random numbers.
///
/// Every draw is a pure function of (seed, stream, counters), so any consumer can
/// ask for "the r-th uniform of stream S for element (a, b)" without owning mutable
/// generator state. Two consequences the optimizers rely on:
///   * results are independent of evaluation order, and therefore of how work is
///     partitioned across threads;
///   * substreams never overlap by construction, so per-(iteration, agent, dimension)
///     draws are mutually independent.
///
/// The mixer is the 64-bit finalizer used by splitmix64/MurmurHash3, which passes
/// the usual statistical batteries when driven by a counter.
namespace rng {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// splitmix64 finalizer: bijective avalanche mix of a 64-bit word.
constexpr std::uint64_t mix(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Combine a running key with one more counter word.
constexpr std::uint64_t chain(std::uint64_t h, std::uint64_t word) noexcept {
  return mix(h ^ (word + kGolden + (h << 6) + (h >> 2)));
}

/// 64-bit value keyed by a seed and up to four counter words.
constexpr std::uint64_t key(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                            std::uint64_t c = 0, std::uint64_t d = 0) noexcept {
  std::uint64_t h = mix(seed + kGolden);
  h = chain(h, a);
  h = chain(h, b);
  h = chain(h, c);
  h = chain(h, d);
  return h;
}

/// Uniform double in [0, 1): top 53 bits of the keyed word.
constexpr double u01(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                     std::uint64_t c = 0, std::uint64_t d = 0) noexcept {
  return static_cast<double>(key(seed, a, b, c, d) >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi]; degenerate ranges (lo == hi) return lo exactly.
constexpr double uniform(double lo, double hi, std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b = 0, std::uint64_t c = 0,
                         std::uint64_t d = 0) noexcept {
  return lo + u01(seed, a, b, c, d) * (hi - lo);
}

/// Uniform integer in [0, n); n must be positive. Bias is < 2^-53 for any n that
/// fits the use cases here (VM counts), so plain scaling is fine.
constexpr int uniform_index(int n, std::uint64_t seed, std::uint64_t a,
                            std::uint64_t b = 0, std::uint64_t c = 0,
                            std::uint64_t d = 0) noexcept {
  const int idx = static_cast<int>(u01(seed, a, b, c, d) * n);
  return idx >= n ? n - 1 : idx;
}

/// Stream tags: keep every consumer of the same seed on a disjoint substream.
enum Stream : std::uint64_t {
  kInitPosition = 1,   ///< optimizer initial positions
  kPairForce = 2,      ///< GSA per-(i, j) force weights
  kVelocity = 3,       ///< GSA per-(agent, dimension) velocity decay
  kPsoCognitive = 4,   ///< PSO r1
  kPsoSocial = 5,      ///< PSO r2
  kWorkloadField = 6,  ///< workload generator field draws
  kOlbRandom = 7,      ///< OLB random-mode VM picks
  kWorkloadSeed = 8,   ///< bench per-grid-point workload seeds
  kOptimizerSeed = 9,  ///< bench per-run optimizer seeds
};

}  // namespace rng
}  // namespace gsched
