#pragma once

#include <cstdint>

namespace predgraph {

// splitmix64: fast, well-mixed 64-bit hash used for seed derivation and
// counter-based substreams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b + 0x51b672c9a04f1d2bULL));
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b,
                                  std::uint64_t c) {
  return hash_combine(hash_combine(a, b), c);
}

// Uniform double in [0, 1) from a 64-bit word.
inline double to_unit_double(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Stateless Bernoulli draw keyed by (seed, stream key). Independent of
// evaluation order: the same key always yields the same bit.
inline bool keyed_bernoulli(std::uint64_t seed, std::uint64_t key, double p) {
  return to_unit_double(splitmix64(seed ^ splitmix64(key))) < p;
}

// Small seeded PRNG for places that need a sequential stream.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  double next_double() { return to_unit_double(next()); }

  // Uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace predgraph
