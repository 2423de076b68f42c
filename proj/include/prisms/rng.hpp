#pragma once

#include <cstdint>

namespace prisms {

// splitmix64 (Vigna). One 64-bit word of state, one additive constant, one
// finalizer. Good enough statistically for Bernoulli and small-range draws,
// and cheap to derive independent streams from by hashing.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 random bits.
  constexpr double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // True with probability p. Exact at the endpoints: p = 0 never fires,
  // p = 1 always does.
  constexpr bool next_bernoulli(double p) noexcept { return next_unit() < p; }

  // Uniform integer in [0, bound) by 128-bit multiply-shift; the bias is
  // below bound / 2^64, irrelevant for face counts.
  std::uint32_t next_below(std::uint32_t bound) noexcept {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

// splitmix64 finalizer as a standalone bijective mixer.
constexpr std::uint64_t mix_bits(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Independent substream for trial `trial` of experiment index `experiment`
// under one master seed. Trials can then be partitioned across workers in
// any way without changing a single draw.
constexpr SplitMix64 trial_stream(std::uint64_t master_seed, std::uint32_t experiment,
                                  std::uint64_t trial) noexcept {
  constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
  std::uint64_t key = mix_bits(master_seed + kGolden * (experiment + 1ull));
  key = mix_bits(key + kGolden * (trial + 1ull));
  return SplitMix64{key};
}

}  // namespace prisms
