#pragma once

#include <cstdint>
#include <random>

namespace qpa {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seeded generator for all randomized routines.  mt19937_64 output is pinned
// by the standard, so identical (command, seed, field) runs are byte-identical
// across platforms.  Independent streams come from derive().
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // uniform integer in [lo, hi], inclusive
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  static Rng derive(std::uint64_t master, std::uint64_t index) {
    return Rng(splitmix64(master ^ splitmix64(index + 1)));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qpa
