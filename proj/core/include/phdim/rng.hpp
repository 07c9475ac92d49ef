#pragma once

#include <cstdint>
#include <random>

namespace phdim {

// splitmix64 finalizer; used both as a stream mixer and for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-trial seeds are derived from the master seed so that parallel trials
// are order-independent.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

// mt19937_64 wrapper with explicit float conversion. The standard
// distributions are implementation-defined, so samples are produced by hand
// to keep output byte-reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, 1).
  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // Rejection-free Lemire reduction would bias at 2^64 scale; plain
    // modulo bias is < 2^-50 for the n used here, but do it exactly anyway.
    std::uint64_t threshold = (-n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace phdim
