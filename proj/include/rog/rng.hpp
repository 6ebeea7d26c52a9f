#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rog {

// Deterministic 64-bit PRNG: xoshiro256++ seeded through splitmix64.
// The exact output sequence is part of the reproducibility contract, so we
// do not rely on <random> distributions (their streams are not portable
// across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64(x);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased integer in [0, bound) by rejection sampling.
  std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Independent stream for a work chunk: mixes the chunk index into the seed
  // so partitioned runs reproduce the same totals for any worker count.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t chunk) {
    std::uint64_t x = seed ^ (0xA0761D6478BD642Full * (chunk + 1));
    std::uint64_t a = splitmix64(x);
    std::uint64_t b = splitmix64(x);
    return a ^ rotl(b, 32);
  }

  static const char* generator_id() { return "xoshiro256++/splitmix64"; }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
  std::uint64_t state_[4];
};

// Unbiased Fisher-Yates shuffle driven by Rng::bounded.
template <typename T>
void fisher_yates(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t k = static_cast<std::size_t>(rng.bounded(i));
    std::swap(v[i - 1], v[k]);
  }
}

}  // namespace rog
