#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace momapf {

/// Deterministic PRNG used by all generators. Draws are made with explicit
/// rejection sampling so results do not depend on the standard library's
/// distribution internals. Identified as "mt19937_64-v1" in instance files
/// that ship a cost seed instead of explicit cost tables.
class Rng {
 public:
  static constexpr const char* kGeneratorId = "mt19937_64-v1";

  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Derive an independent stream for sub-task `index` of a batch.
  static Rng derive(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step keeps derived seeds well separated
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, bound). Rejection sampling, bias-free.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    next_below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// k distinct values sampled uniformly from [0, n), via partial
  /// Fisher-Yates. Order of the sample is part of the result.
  std::vector<std::int32_t> sample_without_replacement(std::int32_t n,
                                                       std::int32_t k) {
    std::vector<std::int32_t> pool(n);
    for (std::int32_t i = 0; i < n; ++i) pool[i] = i;
    for (std::int32_t i = 0; i < k; ++i) {
      const auto j =
          i + static_cast<std::int32_t>(next_below(std::uint64_t(n - i)));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace momapf
