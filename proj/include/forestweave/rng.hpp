#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace forestweave {

/// std::mt19937_64 seeded through SplitMix64, with bounded sampling done by
/// rejection so sequences are identical on every standard library.
///
/// Streams: component `stream` of a run with seed s uses
/// Rng(s, stream), i.e. mt19937_64 seeded with splitmix64(s ^ splitmix64(stream)).
class Rng {
 public:
  enum Stream : std::uint64_t { kGraph = 1, kForest = 2, kSearch = 3, kBench = 4 };

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(splitmix64(seed ^ splitmix64(stream))) {}

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace forestweave
