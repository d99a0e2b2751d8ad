#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "core/error.hpp"

namespace qx {

// Deterministic RNG wrapper. std::mt19937_64 output is pinned by the
// standard, but the std distributions are implementation-defined, so all
// draws below are derived from raw 64-bit output only. Certificates depend
// on this being byte-stable across platforms and worker counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    if (lo > hi) fail(ErrorCode::invalid_argument, "uniform_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + static_cast<int>(r % span);
  }

  std::size_t uniform_index(std::size_t size) {
    if (size == 0) fail(ErrorCode::invalid_argument, "uniform_index: empty");
    std::uint64_t span = size;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return static_cast<std::size_t>(r % span);
  }

  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  // Derives an independent stream for a (seed, stream) pair; splitmix64 over
  // a golden-ratio offset keeps nearby stream indices uncorrelated.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qx
